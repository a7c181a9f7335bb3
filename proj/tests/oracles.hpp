#pragma once
// Independent reference computations for the tests: adaptive quadrature of the
// raw Jacobi weight, Gram-Schmidt from quadrature moments, random geometry.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "histo/mesh.hpp"

namespace oracle {

// int_{-1}^{1} g(t) (1-t)^a (1+t)^b dt, tanh-sinh handles the endpoint
// singularities.
template <class G>
double weighted_integral(double a, double b, G&& g) {
  boost::math::quadrature::tanh_sinh<double> ts(15);
  auto integrand = [&](double t, double tc) {
    // tc = 1 - t for t > 0 and -1 - t for t < 0, accurate near the endpoints.
    const double one_minus = t > 0 ? tc : 1.0 - t;
    const double one_plus = t < 0 ? -tc : 1.0 + t;
    return g(t) * std::pow(one_minus, a) * std::pow(one_plus, b);
  };
  return ts.integrate(integrand, -1.0, 1.0);
}

inline double moment(double a, double b, int n) {
  const double mass = weighted_integral(a, b, [](double) { return 1.0; });
  return weighted_integral(a, b, [n](double t) { return std::pow(t, n); }) / mass;
}

// pi_2 = t^2 - p t - q by Gram-Schmidt against {1, t} with quadrature moments.
struct Pi2 {
  double p, q;
  double operator()(double t) const { return t * t - p * t - q; }
};

inline Pi2 pi2(double a, double b) {
  const double m1 = moment(a, b, 1), m2 = moment(a, b, 2), m3 = moment(a, b, 3);
  // [1 m1; m1 m2] (q, p) = (m2, m3)
  const double det = m2 - m1 * m1;
  return {(m3 - m1 * m2) / det, (m2 * m2 - m1 * m3) / det};
}

inline double rho2_quadrature(double a, double b) {
  const Pi2 p = pi2(a, b);
  const double mass = weighted_integral(a, b, [](double) { return 1.0; });
  return weighted_integral(a, b, [&](double t) { return p(t) * t * t; }) / mass;
}

// Printed closed forms, retyped here so that the library copies are checked
// against an independent transcription.
inline double m1_printed(double a, double b) { return (b - a) / (a + b + 2); }
inline double m2_printed(double a, double b) {
  return ((a - b) * (a - b) + (a + b + 2)) / ((a + b + 2) * (a + b + 3));
}
inline double m3_printed(double a, double b) {
  return (b - a) * ((a - b) * (a - b) + 3 * (a + b) + 8) / ((a + b + 2) * (a + b + 3) * (a + b + 4));
}
inline double m4_printed(double a, double b) {
  const double d = a - b, s = a + b;
  return (std::pow(d, 4) + 6 * d * d * s + 20 * d * d + 3 * s * s + 18 * s + 24) /
         ((s + 2) * (s + 3) * (s + 4) * (s + 5));
}
inline double rho2_moments(double m1, double m2, double m3, double m4) {
  return m4 - m2 * m2 - (m3 - m1 * m2) * (m3 - m1 * m2) / (m2 - m1 * m1);
}
inline double rho2_printed(double a, double b) {
  const double s = a + b;
  return 32 * (a + 1) * (a + 2) * (b + 1) * (b + 2) / ((s + 2) * (s + 3) * (s + 3) * (s + 4) * (s + 4) * (s + 5));
}

inline const std::vector<double>& parameter_grid() {
  static const std::vector<double> g{-0.5, 0.0, 0.5, 1.0, 2.0, 5.0};
  return g;
}

inline bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }
// Relative with an absolute floor of `tol` for values at or near zero.
inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

// Random non-degenerate triangle in [-1,1]^2 (area at least 0.05).
inline histo::Triangle random_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    std::array<histo::Point2, 3> v{{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}};
    const double area = 0.5 * std::abs((v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[2].x - v[0].x) * (v[1].y - v[0].y));
    if (area > 0.05) return histo::Triangle({0, 1, 2}, v);
  }
}

inline histo::Barycentric random_barycentric(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = u(rng), b = u(rng);
  if (a + b > 1.0) a = 1.0 - a, b = 1.0 - b;
  return {1.0 - a - b, a, b};
}

// Barycentric monomial value l0^e0 l1^e1 l2^e2.
inline double bary_monomial(const histo::Barycentric& l, int e0, int e1, int e2) {
  return std::pow(l[0], e0) * std::pow(l[1], e1) * std::pow(l[2], e2);
}

}  // namespace oracle
