#include "histo/quadrature.hpp"

#include <cmath>

#include "histo/density.hpp"
#include "histo/errors.hpp"
#include "histo/orthopoly.hpp"

namespace histo {

TriangleRule symmetric_degree5_rule() {
  const double r15 = std::sqrt(15.0);
  const double a1 = (6.0 - r15) / 21.0;
  const double a2 = (6.0 + r15) / 21.0;
  const double w1 = (155.0 - r15) / 1200.0;
  const double w2 = (155.0 + r15) / 1200.0;
  TriangleRule r;
  r.points = {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
              {a1, a1, 1.0 - 2.0 * a1}, {a1, 1.0 - 2.0 * a1, a1}, {1.0 - 2.0 * a1, a1, a1},
              {a2, a2, 1.0 - 2.0 * a2}, {a2, 1.0 - 2.0 * a2, a2}, {1.0 - 2.0 * a2, a2, a2}};
  r.weights = {9.0 / 40.0, w1, w1, w1, w2, w2, w2};
  return r;
}

TriangleRule collapsed_gauss_rule(int q) {
  if (q < 1) throw DomainError("collapsed rule needs q >= 1");
  // u carries the Jacobian (1-u): on t = 2u-1 that is the Jacobi(1,0) density.
  const GaussRule ru = gauss_rule(Density::jacobi(1.0, 0.0), q);
  const GaussRule rv = gauss_rule(Density::uniform(), q);
  TriangleRule r;
  r.points.reserve(static_cast<std::size_t>(q * q));
  r.weights.reserve(static_cast<std::size_t>(q * q));
  for (std::size_t i = 0; i < ru.size(); ++i) {
    const double u = 0.5 * (1.0 + ru.nodes[i]);
    for (std::size_t j = 0; j < rv.size(); ++j) {
      const double v = 0.5 * (1.0 + rv.nodes[j]);
      const double xi = u;
      const double eta = (1.0 - u) * v;
      r.points.push_back({1.0 - xi - eta, xi, eta});
      r.weights.push_back(ru.weights[i] * rv.weights[j]);
    }
  }
  return r;
}

TriangleRule subdivide(const TriangleRule& rule, int s) {
  if (s < 1) throw DomainError("subdivision factor must be >= 1");
  if (s == 1) return rule;
  TriangleRule out;
  const double inv = 1.0 / s;
  const double w = 1.0 / (static_cast<double>(s) * s);
  auto emit = [&](const Barycentric& p0, const Barycentric& p1, const Barycentric& p2) {
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      Barycentric b{};
      for (int c = 0; c < 3; ++c) b[c] = l[0] * p0[c] + l[1] * p1[c] + l[2] * p2[c];
      out.points.push_back(b);
      out.weights.push_back(w * rule.weights[q]);
    }
  };
  // Grid nodes (i, j) -> barycentric (1 - (i+j)/s, i/s, j/s); sub-triangles in
  // row-major order, upward before downward.
  auto node = [&](int i, int j) { return Barycentric{1.0 - (i + j) * inv, i * inv, j * inv}; };
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i + j < s; ++i) {
      emit(node(i, j), node(i + 1, j), node(i, j + 1));
      if (i + j + 2 <= s) emit(node(i + 1, j), node(i + 1, j + 1), node(i, j + 1));
    }
  }
  return out;
}

}  // namespace histo
