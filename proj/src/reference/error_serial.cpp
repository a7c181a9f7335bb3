#include "../kernels/error_partial.hpp"
#include "histo/errors.hpp"

namespace histo::reference {

double lp_error(const ScalarField& f, const Reconstruction& recon, Norm norm, int subdivision) {
  if (subdivision < 1) throw ConfigError("error subdivision must be >= 1");
  const TriangleRule rule = subdivide(symmetric_degree5_rule(), subdivision);
  double total = 0.0;
  for (std::size_t t = 0; t < recon.mesh().size(); ++t) {
    const double p = detail::error_partial(f, recon, t, rule, norm);
    total = norm == Norm::linf ? std::max(total, p) : total + p;
  }
  return detail::finish(total, norm);
}

}  // namespace histo::reference
