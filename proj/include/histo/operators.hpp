#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "histo/density.hpp"
#include "histo/functionals.hpp"
#include "histo/local_space.hpp"
#include "histo/mesh.hpp"

namespace histo {

/// Coefficients of the closed-form quadratic dual basis.
struct QuadraticCoeffs {
  double sigma0 = 0.0;
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
  double tau = 0.0;
  double nu0 = 0.0;
  double nu_plus = 0.0;
  double nu_minus = 0.0;
  double rho2 = 0.0;
};

// From the moments m_1, m_2 and rho_2 of any nondegenerate density.
QuadraticCoeffs quadratic_coeffs(const Density& density);
// Rational expressions in (alpha, beta) for the Jacobi density.
QuadraticCoeffs quadratic_coeffs_jacobi(double alpha, double beta);

enum class BasisProvenance { closed_form, matrix_inverse };

/// K dual basis polynomials; column l of `coeffs` holds Psi_l over `space`.
struct LocalBasis {
  int order = 0;
  LocalSpace space;
  Eigen::MatrixXd coeffs;
  BasisProvenance provenance = BasisProvenance::closed_form;

  std::size_t size() const { return static_cast<std::size_t>(coeffs.cols()); }
  double eval(std::size_t l, const Barycentric& lambda) const;
};

// phi_j = s0 l_j + s+ l_{j+1} + s- l_{j+2},
// psi_j = n0 l_j + n+ l_{j+1} + n- l_{j+2} - (4/rho2) l_{j+1} l_{j+2},
// over quadratic_b6(). `moment_scale` is the factor applied to pi_2 in the
// edge moments; psi_j is divided by it.
LocalBasis quadratic_basis(const QuadraticCoeffs& c, double moment_scale = 1.0);
LocalBasis quadratic_basis(const Density& density);

struct DofMatrix {
  Eigen::MatrixXd entries;  // column j = all functionals applied to space term j
  double condition = 0.0;   // 1-norm condition estimate

  double determinant() const;
};

DofMatrix dof_matrix(const DofSet& dofs, const LocalSpace& space);

// Columns of the inverse of the DOF matrix over bernstein(k). Throws
// UnisolvencyError if the condition estimate reaches 1e12.
LocalBasis general_basis(const DofSet& dofs);

enum class BasisPath { automatic, closed_form, matrix_inverse };

struct SchemeOptions {
  DofOptions dofs;
  // automatic: closed form for k = 2, matrix inverse otherwise.
  BasisPath path = BasisPath::automatic;
};

/// A local reconstruction operator: functionals plus their dual basis.
class Scheme {
 public:
  // Enriched operator of order 2 <= k <= 5 for the given edge density.
  static std::shared_ptr<const Scheme> enriched(const Density& density, int k, SchemeOptions options = {});
  // Classical linear scheme: unweighted edge means, basis 1 - 2 l_j.
  static std::shared_ptr<const Scheme> classical(int edge_points = 16);

  Scheme(DofSet dofs, LocalBasis basis, bool classical);

  const DofSet& dofs() const { return dofs_; }
  const LocalBasis& basis() const { return basis_; }
  const LocalSpace& space() const { return basis_.space; }
  int order() const { return dofs_.order(); }
  bool is_classical() const { return classical_; }
  std::string label() const;

  // Local polynomial coefficients (over space()) from a DOF vector.
  void coefficients_from_dofs(std::span<const double> dofs, std::span<double> out) const;

 private:
  DofSet dofs_;
  LocalBasis basis_;
  bool classical_;
};

// Pi f on one triangle, as coefficients over scheme.space().
std::vector<double> reconstruct_local(const ScalarField& f, const Triangle& tri, const Scheme& scheme);

/// Piecewise polynomial field: per-triangle DOFs and local coefficients.
/// No continuity across edges.
class Reconstruction {
 public:
  Reconstruction(std::shared_ptr<const Mesh> mesh, std::shared_ptr<const Scheme> scheme);

  const Mesh& mesh() const { return *mesh_; }
  const std::shared_ptr<const Mesh>& mesh_ptr() const { return mesh_; }
  const Scheme& scheme() const { return *scheme_; }
  std::size_t dofs_per_triangle() const { return ndof_; }
  std::size_t coeffs_per_triangle() const { return ncoef_; }

  std::span<const double> dofs(std::size_t tri) const;
  std::span<const double> coefficients(std::size_t tri) const;
  std::span<double> dofs(std::size_t tri);
  std::span<double> coefficients(std::size_t tri);
  const std::vector<double>& all_dofs() const { return dofs_; }

  double evaluate_local(std::size_t tri, const Barycentric& lambda) const;
  // Lowest-id containing triangle wins on shared edges. Throws
  // OutOfDomainError outside the mesh.
  double evaluate(const Point2& p) const;

 private:
  std::shared_ptr<const Mesh> mesh_;
  std::shared_ptr<const Scheme> scheme_;
  std::size_t ndof_;
  std::size_t ncoef_;
  std::vector<double> dofs_;
  std::vector<double> coeffs_;
};

// Per-triangle reconstruction, parallel over triangles (OpenMP). The result
// does not depend on the thread count.
Reconstruction reconstruct_global(const ScalarField& f, std::shared_ptr<const Mesh> mesh,
                                  std::shared_ptr<const Scheme> scheme);

Reconstruction classical_ch(const ScalarField& f, std::shared_ptr<const Mesh> mesh, int edge_points = 16);

namespace reference {
// Sequential triangle loop; kept as the reference for the parallel kernel.
Reconstruction reconstruct_global(const ScalarField& f, std::shared_ptr<const Mesh> mesh,
                                  std::shared_ptr<const Scheme> scheme);
}  // namespace reference

}  // namespace histo
