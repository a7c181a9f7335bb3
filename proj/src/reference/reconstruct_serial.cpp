#include <algorithm>

#include "histo/operators.hpp"

namespace histo::reference {

Reconstruction reconstruct_global(const ScalarField& f, std::shared_ptr<const Mesh> mesh,
                                  std::shared_ptr<const Scheme> scheme) {
  Reconstruction recon(std::move(mesh), std::move(scheme));
  for (std::size_t t = 0; t < recon.mesh().size(); ++t) {
    const Triangle& tri = recon.mesh().triangle(t);
    const auto dofs = dof_vector(f, tri, recon.scheme().dofs());
    std::copy(dofs.begin(), dofs.end(), recon.dofs(t).begin());
    recon.scheme().coefficients_from_dofs(dofs, recon.coefficients(t));
  }
  return recon;
}

}  // namespace histo::reference
