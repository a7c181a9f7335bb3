#pragma once

#include <cstddef>
#include <vector>

#include "histo/density.hpp"

namespace histo {

/// Univariate polynomial in the monomial basis, coefficients low to high.
class Polynomial1D {
 public:
  Polynomial1D() : coeffs_{0.0} {}
  explicit Polynomial1D(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  double coefficient(int i) const;
  bool is_monic() const { return coeffs_.back() == 1.0; }

  double operator()(double t) const;
  Polynomial1D scaled(double c) const;

 private:
  std::vector<double> coeffs_;
};

/// Three-term recurrence pi_{n+1} = (t - a_n) pi_n - b_n pi_{n-1} for monic
/// orthogonal polynomials, b_0 = m_0 = 1.
struct Recurrence {
  std::vector<double> a;
  std::vector<double> b;

  int size() const { return static_cast<int>(a.size()); }
};

// Closed-form monic Jacobi coefficients a_0..a_{n-1}, b_0..b_{n-1} for the
// normalized weight.
Recurrence jacobi_recurrence(double alpha, double beta, int n);

// Chebyshev moment-to-recurrence algorithm; needs m_0..m_{2n-1}. Throws
// IllConditionedMomentsError naming the first order where the Hankel
// determinant ratio is not positive.
Recurrence chebyshev_recurrence(const std::vector<double>& moments, int n);

// Closed form for Jacobi-family densities, Chebyshev algorithm otherwise.
Recurrence recurrence_for(const Density& density, int n);

// pi_2 = t^2 - a t - b from the first three moments.
Polynomial1D monic_pi2(const Density& density);

// rho_2 = <pi_2, t^2> through m_4 - m_2^2 - (m_3 - m_1 m_2)^2 / (m_2 - m_1^2).
double rho2(const Density& density);
double rho2_jacobi_closed_form(double alpha, double beta);
double rho2_gegenbauer_closed_form(double gamma);

struct GaussRule {
  std::vector<double> nodes;    // strictly increasing, inside (-1,1)
  std::vector<double> weights;  // positive, summing to 1

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

// q-point Gauss rule for the density via the eigen-decomposition of the
// symmetric tridiagonal Jacobi matrix.
GaussRule gauss_rule(const Recurrence& rec, int q);
GaussRule gauss_rule(const Density& density, int q);

/// Monic orthogonal polynomials pi_0..pi_k of a density.
class OrthoBasis {
 public:
  OrthoBasis(const Density& density, int k);

  const Density& density() const { return density_; }
  int order() const { return static_cast<int>(polys_.size()) - 1; }
  const Polynomial1D& poly(int n) const { return polys_.at(static_cast<std::size_t>(n)); }
  // ||pi_n||^2 = b_0 b_1 ... b_n.
  double norm2(int n) const { return norms_.at(static_cast<std::size_t>(n)); }
  // <pi_2, t^2> = ||pi_2||^2; requires k >= 2.
  double rho2() const;
  const Recurrence& recurrence() const { return rec_; }

  // pi_n(t) through the recurrence.
  double eval(int n, double t) const;

 private:
  Density density_;
  Recurrence rec_;
  std::vector<Polynomial1D> polys_;
  std::vector<double> norms_;
};

}  // namespace histo
