#include "histo/density.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "histo/errors.hpp"

namespace histo {

namespace {

// glibc's lgamma writes the global signgam; use the reentrant variant so
// densities can be built concurrently.
double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

void check_jacobi_params(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("Jacobi parameters must satisfy alpha, beta > -1");
  }
}

// Moments of the normalized Jacobi density from integration by parts:
// (a+b+2+n) m_{n+1} = (b-a) m_n + n m_{n-1}.
double jacobi_moment_recurrence(double alpha, double beta, int n) {
  if (n == 0) return 1.0;
  const double s = alpha + beta + 2.0;
  double prev = 1.0;
  double cur = (beta - alpha) / s;
  for (int k = 1; k < n; ++k) {
    const double next = ((beta - alpha) * cur + k * prev) / (s + k);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double beta_fn(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("Beta function requires positive arguments");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double jacobi_normalization(double alpha, double beta) {
  check_jacobi_params(alpha, beta);
  const double log_b = log_gamma(alpha + 1.0) + log_gamma(beta + 1.0) - log_gamma(alpha + beta + 2.0);
  return std::exp(-(alpha + beta + 1.0) * std::log(2.0) - log_b);
}

double jacobi_moment_beta_sum(double alpha, double beta, int n) {
  check_jacobi_params(alpha, beta);
  if (n < 0) throw DomainError("moment order must be non-negative");
  // m_n = sum_i C(n,i) 2^i (-1)^{n-i} B(beta+1+i, alpha+1) / B(beta+1, alpha+1),
  // each ratio built with B(x+1,y) = x/(x+y) B(x,y).
  double sum = 0.0;
  double ratio = 1.0;
  double binom = 1.0;
  for (int i = 0; i <= n; ++i) {
    const double sign = ((n - i) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom * std::ldexp(ratio, i);
    ratio *= (beta + 1.0 + i) / (alpha + beta + 2.0 + i);
    binom = binom * (n - i) / (i + 1);
  }
  return sum;
}

double jacobi_m1(double a, double b) { return (b - a) / (a + b + 2.0); }

double jacobi_m2(double a, double b) {
  const double s = a + b;
  return ((a - b) * (a - b) + (s + 2.0)) / ((s + 2.0) * (s + 3.0));
}

double jacobi_m3(double a, double b) {
  const double s = a + b;
  const double d = a - b;
  return (b - a) * (d * d + 3.0 * s + 8.0) / ((s + 2.0) * (s + 3.0) * (s + 4.0));
}

double jacobi_m4(double a, double b) {
  const double s = a + b;
  const double d2 = (a - b) * (a - b);
  return (d2 * d2 + 6.0 * d2 * s + 20.0 * d2 + 3.0 * s * s + 18.0 * s + 24.0) /
         ((s + 2.0) * (s + 3.0) * (s + 4.0) * (s + 5.0));
}

Density Density::jacobi(double alpha, double beta) {
  check_jacobi_params(alpha, beta);
  Density d;
  d.kind_ = DensityKind::jacobi;
  d.alpha_ = alpha;
  d.beta_ = beta;
  d.norm_ = jacobi_normalization(alpha, beta);
  return d;
}

Density Density::gegenbauer(double gamma) {
  check_jacobi_params(gamma, gamma);
  Density d;
  d.kind_ = DensityKind::gegenbauer;
  d.alpha_ = gamma;
  d.beta_ = gamma;
  d.norm_ = jacobi_normalization(gamma, gamma);
  return d;
}

Density Density::uniform() {
  Density d;
  d.kind_ = DensityKind::uniform;
  d.norm_ = 0.5;
  return d;
}

Density Density::custom(std::string name, MomentProvider moments, Evaluator eval) {
  if (!moments) throw ConfigError("custom density requires a moment provider");
  if (std::abs(moments(0) - 1.0) > 1e-12) throw ConfigError("custom density must have m_0 = 1");
  Density d;
  d.kind_ = DensityKind::custom;
  d.name_ = std::move(name);
  d.norm_ = 1.0;
  d.moments_ = std::make_shared<const MomentProvider>(std::move(moments));
  if (eval) d.eval_ = std::make_shared<const Evaluator>(std::move(eval));
  return d;
}

bool Density::is_symmetric() const {
  switch (kind_) {
    case DensityKind::gegenbauer:
    case DensityKind::uniform:
      return true;
    case DensityKind::jacobi:
      return alpha_ == beta_;
    case DensityKind::custom:
      return false;
  }
  return false;
}

std::string Density::label() const {
  std::ostringstream os;
  switch (kind_) {
    case DensityKind::jacobi:
      os << "jacobi(" << alpha_ << "," << beta_ << ")";
      break;
    case DensityKind::gegenbauer:
      os << "gegenbauer(" << alpha_ << ")";
      break;
    case DensityKind::uniform:
      os << "uniform";
      break;
    case DensityKind::custom:
      os << "custom(" << name_ << ")";
      break;
  }
  return os.str();
}

double Density::operator()(double t, EndpointPolicy policy) const {
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("density evaluated outside [-1,1]");
  if (kind_ == DensityKind::custom) {
    if (!eval_) throw ConfigError("custom density '" + name_ + "' has no pointwise evaluator");
    return (*eval_)(t);
  }
  if (kind_ == DensityKind::uniform) return 0.5;
  const bool singular = (t == 1.0 && alpha_ < 0.0) || (t == -1.0 && beta_ < 0.0);
  if (singular) {
    if (policy == EndpointPolicy::error) throw DomainError("density is unbounded at this endpoint");
    return std::numeric_limits<double>::infinity();
  }
  return norm_ * std::pow(1.0 - t, alpha_) * std::pow(1.0 + t, beta_);
}

double Density::moment(int n) const {
  if (n < 0) throw DomainError("moment order must be non-negative");
  if (n == 0) return 1.0;
  switch (kind_) {
    case DensityKind::uniform:
      return n % 2 == 0 ? 1.0 / (n + 1) : 0.0;
    case DensityKind::gegenbauer:
      if (n % 2 == 1) return 0.0;
      return jacobi_moment_recurrence(alpha_, beta_, n);
    case DensityKind::jacobi:
      if (n % 2 == 1 && alpha_ == beta_) return 0.0;
      return jacobi_moment_recurrence(alpha_, beta_, n);
    case DensityKind::custom:
      return (*moments_)(n);
  }
  return 0.0;
}

MomentSequence::MomentSequence(const Density& density, int max_order) {
  if (max_order < 0) throw DomainError("moment order must be non-negative");
  values_.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int n = 0; n <= max_order; ++n) {
    const double m = density.moment(n);
    if (!std::isfinite(m)) throw DegenerateDensityError("moment " + std::to_string(n) + " is not finite");
    values_.push_back(m);
  }
}

bool MomentSequence::hankel_positive_definite(int s) const {
  if (2 * s > max_order()) throw DomainError("not enough moments for the requested Hankel order");
  Eigen::MatrixXd h(s + 1, s + 1);
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= s; ++j) h(i, j) = values_[static_cast<std::size_t>(i + j)];
  Eigen::LLT<Eigen::MatrixXd> llt(h);
  return llt.info() == Eigen::Success;
}

}  // namespace histo
