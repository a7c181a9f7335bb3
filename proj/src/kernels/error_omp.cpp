#include <exception>
#include <vector>

#include "error_partial.hpp"
#include "histo/errors.hpp"

namespace histo {

double lp_error(const ScalarField& f, const Reconstruction& recon, Norm norm, int subdivision) {
  if (subdivision < 1) throw ConfigError("error subdivision must be >= 1");
  const TriangleRule rule = subdivide(symmetric_degree5_rule(), subdivision);
  const auto ntri = static_cast<std::ptrdiff_t>(recon.mesh().size());
  std::vector<double> partial(recon.mesh().size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < ntri; ++t) {
    try {
      partial[static_cast<std::size_t>(t)] = detail::error_partial(f, recon, static_cast<std::size_t>(t), rule, norm);
    } catch (...) {
#pragma omp critical(histo_error_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  double total = 0.0;
  for (double p : partial) total = norm == Norm::linf ? std::max(total, p) : total + p;
  return detail::finish(total, norm);
}

}  // namespace histo
