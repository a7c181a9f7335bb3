#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace histo {

// Euler Beta function B(x,y) through log-Gamma differences. Throws
// DomainError unless x, y > 0.
double beta_fn(double x, double y);

// a_{alpha,beta} = 1 / (2^{alpha+beta+1} B(alpha+1, beta+1)).
double jacobi_normalization(double alpha, double beta);

// n-th moment of the normalized Jacobi density from the binomial expansion of
// (2u-1)^n against the Beta(beta+1, alpha+1) law, one Beta ratio per term.
// Exact in exact arithmetic but suffers cancellation of order 4^n, so it is
// meant for low orders and cross-checks.
double jacobi_moment_beta_sum(double alpha, double beta, int n);

// Closed forms of the first four Jacobi moments.
double jacobi_m1(double alpha, double beta);
double jacobi_m2(double alpha, double beta);
double jacobi_m3(double alpha, double beta);
double jacobi_m4(double alpha, double beta);

enum class DensityKind { jacobi, gegenbauer, uniform, custom };

// What evaluating at an integrable endpoint singularity does.
enum class EndpointPolicy { infinity, error };

/// Probability density on [-1,1].
///
/// Jacobi-family kinds (jacobi, gegenbauer, uniform) carry closed-form
/// normalization and moments; custom densities must bring their own moment
/// provider. Immutable; copies share the custom callbacks.
class Density {
 public:
  using MomentProvider = std::function<double(int)>;
  using Evaluator = std::function<double(double)>;

  static Density jacobi(double alpha, double beta);
  static Density gegenbauer(double gamma);
  static Density uniform();
  // `moments(0)` must be 1.
  static Density custom(std::string name, MomentProvider moments, Evaluator eval);

  DensityKind kind() const { return kind_; }
  bool is_jacobi_family() const { return kind_ != DensityKind::custom; }
  // Odd moments vanish identically.
  bool is_symmetric() const;
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double normalization() const { return norm_; }
  std::string label() const;

  double operator()(double t, EndpointPolicy policy = EndpointPolicy::infinity) const;
  double moment(int n) const;

 private:
  Density() = default;

  DensityKind kind_ = DensityKind::uniform;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double norm_ = 0.5;
  std::string name_;
  std::shared_ptr<const MomentProvider> moments_;
  std::shared_ptr<const Evaluator> eval_;
};

/// Moments m_0..m_N of a density.
class MomentSequence {
 public:
  MomentSequence(const Density& density, int max_order);

  int max_order() const { return static_cast<int>(values_.size()) - 1; }
  double operator[](int n) const { return values_.at(static_cast<std::size_t>(n)); }
  const std::vector<double>& values() const { return values_; }

  // Hankel matrix [m_{i+j}]_{0<=i,j<=s} is positive definite (Cholesky).
  bool hankel_positive_definite(int s) const;

 private:
  std::vector<double> values_;
};

}  // namespace histo
