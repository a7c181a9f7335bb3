#include "histo/orthopoly.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "histo/errors.hpp"

namespace histo {

Polynomial1D::Polynomial1D(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial1D::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(i)];
}

double Polynomial1D::operator()(double t) const {
  double v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  return v;
}

Polynomial1D Polynomial1D::scaled(double c) const {
  std::vector<double> out = coeffs_;
  for (double& x : out) x *= c;
  return Polynomial1D(std::move(out));
}

Recurrence jacobi_recurrence(double alpha, double beta, int n) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("Jacobi parameters must satisfy alpha, beta > -1");
  Recurrence r;
  r.a.resize(static_cast<std::size_t>(n));
  r.b.resize(static_cast<std::size_t>(n));
  const double ab = alpha + beta;
  const double d2 = beta * beta - alpha * alpha;
  for (int k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (k == 0) {
      r.a[i] = (beta - alpha) / (ab + 2.0);
      r.b[i] = 1.0;
      continue;
    }
    const double s = 2.0 * k + ab;
    r.a[i] = d2 == 0.0 ? 0.0 : d2 / (s * (s + 2.0));
    if (k == 1) {
      r.b[i] = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      r.b[i] = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  return r;
}

Recurrence chebyshev_recurrence(const std::vector<double>& moments, int n) {
  if (n <= 0) return {};
  if (moments.size() < static_cast<std::size_t>(2 * n)) {
    throw IllConditionedMomentsError("need " + std::to_string(2 * n) + " moments", n);
  }
  using real = long double;
  const int len = 2 * n;
  std::vector<real> sig_prev(static_cast<std::size_t>(len), 0.0L);
  std::vector<real> sig(moments.begin(), moments.begin() + len);
  Recurrence r;
  r.a.push_back(static_cast<double>(sig[1] / sig[0]));
  r.b.push_back(static_cast<double>(sig[0]));
  std::vector<real> a{sig[1] / sig[0]};
  std::vector<real> b{sig[0]};
  for (int k = 1; k < n; ++k) {
    std::vector<real> next(static_cast<std::size_t>(len), 0.0L);
    for (int l = k; l < len - k; ++l) {
      const auto u = static_cast<std::size_t>(l);
      next[u] = sig[u + 1] - a.back() * sig[u] - b.back() * sig_prev[u];
    }
    const auto kk = static_cast<std::size_t>(k);
    if (!(next[kk] > 0.0L) || !(sig[kk - 1] > 0.0L)) {
      throw IllConditionedMomentsError(
          "moment sequence is not Hankel-positive at order " + std::to_string(k), k);
    }
    const real ak = next[kk + 1] / next[kk] - sig[kk] / sig[kk - 1];
    const real bk = next[kk] / sig[kk - 1];
    a.push_back(ak);
    b.push_back(bk);
    r.a.push_back(static_cast<double>(ak));
    r.b.push_back(static_cast<double>(bk));
    sig_prev = std::move(sig);
    sig = std::move(next);
  }
  return r;
}

Recurrence recurrence_for(const Density& density, int n) {
  if (density.is_jacobi_family()) return jacobi_recurrence(density.alpha(), density.beta(), n);
  std::vector<double> m;
  m.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) m.push_back(density.moment(i));
  return chebyshev_recurrence(m, n);
}

namespace {

constexpr double kDegenerateTol = 1e-14;

double variance(double m1, double m2) {
  const double v = m2 - m1 * m1;
  if (!(v > kDegenerateTol)) throw DegenerateDensityError("density is degenerate: m2 - m1^2 <= tolerance");
  return v;
}

}  // namespace

Polynomial1D monic_pi2(const Density& density) {
  const double m1 = density.moment(1);
  const double m2 = density.moment(2);
  const double m3 = density.moment(3);
  const double a = (m3 - m1 * m2) / variance(m1, m2);
  const double b = m2 - a * m1;
  return Polynomial1D({-b, -a, 1.0});
}

double rho2(const Density& density) {
  const double m1 = density.moment(1);
  const double m2 = density.moment(2);
  const double m3 = density.moment(3);
  const double m4 = density.moment(4);
  const double c = m3 - m1 * m2;
  const double r = m4 - m2 * m2 - c * c / variance(m1, m2);
  if (!(r > kDegenerateTol)) throw DegenerateDensityError("rho2 is not positive");
  return r;
}

double rho2_jacobi_closed_form(double a, double b) {
  const double s = a + b;
  return 32.0 * (a + 1.0) * (a + 2.0) * (b + 1.0) * (b + 2.0) /
         ((s + 2.0) * (s + 3.0) * (s + 3.0) * (s + 4.0) * (s + 4.0) * (s + 5.0));
}

double rho2_gegenbauer_closed_form(double g) {
  return 4.0 * (g + 1.0) / ((2.0 * g + 3.0) * (2.0 * g + 3.0) * (2.0 * g + 5.0));
}

GaussRule gauss_rule(const Recurrence& rec, int q) {
  if (q < 1) throw DomainError("Gauss rule needs at least one node");
  if (q > rec.size()) throw DomainError("recurrence too short for a " + std::to_string(q) + "-point rule");
  Eigen::VectorXd diag(q);
  Eigen::VectorXd sub(q > 1 ? q - 1 : 0);
  for (int i = 0; i < q; ++i) diag(i) = rec.a[static_cast<std::size_t>(i)];
  for (int i = 1; i < q; ++i) sub(i - 1) = std::sqrt(rec.b[static_cast<std::size_t>(i)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch eigen-decomposition failed");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(q));
  rule.weights.resize(static_cast<std::size_t>(q));
  const double m0 = rec.b[0];
  for (int i = 0; i < q; ++i) {
    const double v = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = m0 * v * v;
  }
  return rule;
}

GaussRule gauss_rule(const Density& density, int q) { return gauss_rule(recurrence_for(density, q), q); }

OrthoBasis::OrthoBasis(const Density& density, int k) : density_(density) {
  if (k < 0) throw DomainError("orthogonal basis order must be non-negative");
  rec_ = recurrence_for(density, k + 1);
  polys_.reserve(static_cast<std::size_t>(k) + 1);
  norms_.reserve(static_cast<std::size_t>(k) + 1);
  polys_.emplace_back(std::vector<double>{1.0});
  norms_.push_back(rec_.b[0]);
  std::vector<double> prev;
  std::vector<double> cur{1.0};
  for (int n = 0; n < k; ++n) {
    const double an = rec_.a[static_cast<std::size_t>(n)];
    const double bn = rec_.b[static_cast<std::size_t>(n)];
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i];
      next[i] -= an * cur[i];
    }
    if (n > 0) {
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= bn * prev[i];
    }
    prev = std::move(cur);
    cur = std::move(next);
    polys_.emplace_back(cur);
    norms_.push_back(norms_.back() * rec_.b[static_cast<std::size_t>(n + 1)]);
  }
}

double OrthoBasis::rho2() const {
  if (order() < 2) throw DescriptorError("rho2 needs pi_2");
  return norm2(2);
}

double OrthoBasis::eval(int n, double t) const {
  if (n < 0 || n > order()) throw DescriptorError("orthogonal polynomial index out of range");
  double prev = 0.0;
  double cur = 1.0;
  for (int i = 0; i < n; ++i) {
    const double next = (t - rec_.a[static_cast<std::size_t>(i)]) * cur - rec_.b[static_cast<std::size_t>(i)] * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace histo
