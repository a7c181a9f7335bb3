#pragma once

#include <algorithm>
#include <cmath>

#include "histo/error_norm.hpp"
#include "histo/quadrature.hpp"

namespace histo::detail {

// Contribution of one triangle: integral of |e| or e^2, or max |e|.
inline double error_partial(const ScalarField& f, const Reconstruction& recon, std::size_t t,
                            const TriangleRule& rule, Norm norm) {
  const Triangle& tri = recon.mesh().triangle(t);
  double acc = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const auto& l = rule.points[q];
    const double e = f(tri.point(l)) - recon.evaluate_local(t, l);
    switch (norm) {
      case Norm::l1:
        acc += rule.weights[q] * std::abs(e);
        break;
      case Norm::l2:
        acc += rule.weights[q] * e * e;
        break;
      case Norm::linf:
        acc = std::max(acc, std::abs(e));
        break;
    }
  }
  return norm == Norm::linf ? acc : acc * tri.area();
}

inline double finish(double total, Norm norm) { return norm == Norm::l2 ? std::sqrt(total) : total; }

}  // namespace histo::detail
