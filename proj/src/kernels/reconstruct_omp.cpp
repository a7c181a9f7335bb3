#include <cstddef>
#include <exception>
#include <vector>

#include "histo/operators.hpp"

namespace histo {

Reconstruction reconstruct_global(const ScalarField& f, std::shared_ptr<const Mesh> mesh,
                                  std::shared_ptr<const Scheme> scheme) {
  Reconstruction recon(std::move(mesh), std::move(scheme));
  const Mesh& m = recon.mesh();
  const Scheme& s = recon.scheme();
  const auto& points = s.dofs().sample_points();
  const auto ntri = static_cast<std::ptrdiff_t>(m.size());
  std::exception_ptr failure;

#pragma omp parallel
  {
    std::vector<double> values(points.size());
#pragma omp for schedule(static)
    for (std::ptrdiff_t t = 0; t < ntri; ++t) {
      try {
        const auto id = static_cast<std::size_t>(t);
        const Triangle& tri = m.triangle(id);
        for (std::size_t q = 0; q < points.size(); ++q) values[q] = f(tri.point(points[q]));
        auto dofs = recon.dofs(id);
        s.dofs().apply(values, dofs);
        s.coefficients_from_dofs(dofs, recon.coefficients(id));
      } catch (...) {
#pragma omp critical(histo_reconstruct_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return recon;
}

}  // namespace histo
