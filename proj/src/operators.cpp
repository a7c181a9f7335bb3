#include "histo/operators.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/LU>

#include "histo/errors.hpp"
#include "histo/orthopoly.hpp"

namespace histo {

QuadraticCoeffs quadratic_coeffs(const Density& density) {
  const double m1 = density.moment(1);
  const double m2 = density.moment(2);
  QuadraticCoeffs c;
  c.rho2 = rho2(density);
  const double den = 3.0 * m1 * m1 + 1.0;
  c.sigma0 = (m1 * m1 - 1.0) / den;
  c.sigma_plus = (m1 + 1.0) * (m1 + 1.0) / den;
  c.sigma_minus = (m1 - 1.0) * (m1 - 1.0) / den;
  c.tau = (1.0 - m2) / (c.rho2 * den);
  c.nu0 = c.tau * (m1 * m1 - 1.0);
  c.nu_plus = c.tau * (m1 + 1.0) * (m1 + 1.0);
  c.nu_minus = c.tau * (m1 - 1.0) * (m1 - 1.0);
  return c;
}

QuadraticCoeffs quadratic_coeffs_jacobi(double a, double b) {
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("Jacobi parameters must satisfy alpha, beta > -1");
  const double s = a + b;
  const double q = a * a - a * b + b * b + a + b + 1.0;
  const double nu_num = (s + 3.0) * (s + 4.0) * (s + 4.0) * (s + 5.0);
  const double nu_den = 8.0 * (a + 2.0) * (b + 2.0) * q;
  QuadraticCoeffs c;
  c.rho2 = rho2_jacobi_closed_form(a, b);
  c.sigma0 = -(a + 1.0) * (b + 1.0) / q;
  c.sigma_plus = (b + 1.0) * (b + 1.0) / q;
  c.sigma_minus = (a + 1.0) * (a + 1.0) / q;
  c.tau = (s + 2.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * (s + 4.0) * (s + 5.0) / (32.0 * (a + 2.0) * (b + 2.0) * q);
  c.nu0 = -nu_num * (a + 1.0) * (b + 1.0) / nu_den;
  c.nu_plus = nu_num * (b + 1.0) * (b + 1.0) / nu_den;
  c.nu_minus = nu_num * (a + 1.0) * (a + 1.0) / nu_den;
  return c;
}

double LocalBasis::eval(std::size_t l, const Barycentric& lambda) const {
  const Eigen::VectorXd col = coeffs.col(static_cast<Eigen::Index>(l));
  return space.eval(lambda, std::span<const double>(col.data(), static_cast<std::size_t>(col.size())));
}

LocalBasis quadratic_basis(const QuadraticCoeffs& c, double moment_scale) {
  if (!(c.rho2 > 0.0)) throw DegenerateDensityError("rho2 must be positive");
  if (moment_scale == 0.0) throw ConfigError("moment scale must be nonzero");
  LocalBasis basis{2, LocalSpace::quadratic_b6(), Eigen::MatrixXd::Zero(6, 6), BasisProvenance::closed_form};
  for (int j = 0; j < 3; ++j) {
    const int j1 = (j + 1) % 3;
    const int j2 = (j + 2) % 3;
    basis.coeffs(j, j) = c.sigma0;
    basis.coeffs(j1, j) = c.sigma_plus;
    basis.coeffs(j2, j) = c.sigma_minus;
    // l_{j+1} l_{j+2} sits at index 5 - j in b6.
    basis.coeffs(j, 3 + j) = c.nu0 / moment_scale;
    basis.coeffs(j1, 3 + j) = c.nu_plus / moment_scale;
    basis.coeffs(j2, 3 + j) = c.nu_minus / moment_scale;
    basis.coeffs(5 - j, 3 + j) = -4.0 / c.rho2 / moment_scale;
  }
  return basis;
}

LocalBasis quadratic_basis(const Density& density) { return quadratic_basis(quadratic_coeffs(density)); }

double DofMatrix::determinant() const { return entries.determinant(); }

DofMatrix dof_matrix(const DofSet& dofs, const LocalSpace& space) {
  if (space.dim() != dofs.size()) throw DescriptorError("space dimension does not match the number of functionals");
  DofMatrix h;
  h.entries.resize(static_cast<Eigen::Index>(dofs.size()), static_cast<Eigen::Index>(space.dim()));
  std::vector<double> unit(space.dim(), 0.0);
  for (std::size_t j = 0; j < space.dim(); ++j) {
    unit.assign(space.dim(), 0.0);
    unit[j] = 1.0;
    const auto col = dofs.evaluate_barycentric([&](const Barycentric& l) { return space.eval(l, unit); });
    for (std::size_t i = 0; i < col.size(); ++i)
      h.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col[i];
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(h.entries);
  const double rc = lu.rcond();
  h.condition = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
  return h;
}

LocalBasis general_basis(const DofSet& dofs) {
  const int k = dofs.order();
  LocalSpace space = LocalSpace::bernstein(k);
  const DofMatrix h = dof_matrix(dofs, space);
  if (!(h.condition < 1e12)) {
    std::ostringstream os;
    os << "DOF matrix is numerically singular (condition estimate " << h.condition << ")";
    throw UnisolvencyError(os.str());
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(h.entries);
  return LocalBasis{k, std::move(space), lu.inverse(), BasisProvenance::matrix_inverse};
}

std::shared_ptr<const Scheme> Scheme::enriched(const Density& density, int k, SchemeOptions options) {
  if (k < 2 || k > 5) throw ConfigError("enriched order must lie in 2..5");
  DofSet dofs(density, k, std::move(options.dofs));
  const bool closed = k == 2 && options.path != BasisPath::matrix_inverse;
  if (options.path == BasisPath::closed_form && k != 2) throw ConfigError("closed-form basis exists for k = 2 only");
  LocalBasis basis = closed ? quadratic_basis(quadratic_coeffs(density), dofs.moment_scale(2)) : general_basis(dofs);
  return std::make_shared<const Scheme>(std::move(dofs), std::move(basis), false);
}

std::shared_ptr<const Scheme> Scheme::classical(int edge_points) {
  DofOptions opts;
  opts.edge_points = edge_points;
  DofSet dofs(Density::uniform(), 1, opts);
  Eigen::MatrixXd c = Eigen::MatrixXd::Ones(3, 3) - 2.0 * Eigen::MatrixXd::Identity(3, 3);
  LocalBasis basis{1, LocalSpace::linear(), std::move(c), BasisProvenance::closed_form};
  return std::make_shared<const Scheme>(std::move(dofs), std::move(basis), true);
}

Scheme::Scheme(DofSet dofs, LocalBasis basis, bool classical)
    : dofs_(std::move(dofs)), basis_(std::move(basis)), classical_(classical) {
  if (basis_.size() != dofs_.size()) throw DescriptorError("basis size does not match functionals");
}

std::string Scheme::label() const {
  if (classical_) return "CH";
  std::ostringstream os;
  os << "H" << order() << "[" << dofs_.density().label() << "]";
  return os.str();
}

void Scheme::coefficients_from_dofs(std::span<const double> dofs, std::span<double> out) const {
  Eigen::Map<const Eigen::VectorXd> d(dofs.data(), static_cast<Eigen::Index>(dofs.size()));
  Eigen::Map<Eigen::VectorXd> c(out.data(), static_cast<Eigen::Index>(out.size()));
  c.noalias() = basis_.coeffs * d;
}

std::vector<double> reconstruct_local(const ScalarField& f, const Triangle& tri, const Scheme& scheme) {
  const auto dofs = dof_vector(f, tri, scheme.dofs());
  std::vector<double> out(scheme.space().dim());
  scheme.coefficients_from_dofs(dofs, out);
  return out;
}

Reconstruction::Reconstruction(std::shared_ptr<const Mesh> mesh, std::shared_ptr<const Scheme> scheme)
    : mesh_(std::move(mesh)),
      scheme_(std::move(scheme)),
      ndof_(scheme_->dofs().size()),
      ncoef_(scheme_->space().dim()),
      dofs_(mesh_->size() * ndof_, 0.0),
      coeffs_(mesh_->size() * ncoef_, 0.0) {}

std::span<const double> Reconstruction::dofs(std::size_t tri) const {
  return std::span<const double>(dofs_).subspan(tri * ndof_, ndof_);
}
std::span<const double> Reconstruction::coefficients(std::size_t tri) const {
  return std::span<const double>(coeffs_).subspan(tri * ncoef_, ncoef_);
}
std::span<double> Reconstruction::dofs(std::size_t tri) { return std::span<double>(dofs_).subspan(tri * ndof_, ndof_); }
std::span<double> Reconstruction::coefficients(std::size_t tri) {
  return std::span<double>(coeffs_).subspan(tri * ncoef_, ncoef_);
}

double Reconstruction::evaluate_local(std::size_t tri, const Barycentric& lambda) const {
  return scheme_->space().eval(lambda, coefficients(tri));
}

double Reconstruction::evaluate(const Point2& p) const {
  const auto tri = mesh_->locate(p);
  if (!tri) throw OutOfDomainError("point lies outside the mesh");
  return evaluate_local(*tri, mesh_->triangle(*tri).barycentric(p));
}

Reconstruction classical_ch(const ScalarField& f, std::shared_ptr<const Mesh> mesh, int edge_points) {
  return reconstruct_global(f, std::move(mesh), Scheme::classical(edge_points));
}

}  // namespace histo
