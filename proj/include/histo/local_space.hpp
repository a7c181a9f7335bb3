#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "histo/mesh.hpp"

namespace histo {

// scale * l0^a l1^b l2^c
struct BaryMonomial {
  std::array<int, 3> exponents;
  double scale = 1.0;

  int degree() const { return exponents[0] + exponents[1] + exponents[2]; }
};

/// A declared polynomial basis on a triangle, written in barycentric
/// coordinates so that it is the same on every triangle.
class LocalSpace {
 public:
  LocalSpace(std::string name, std::vector<BaryMonomial> terms);

  // Bernstein basis of degree k: k!/(a!b!c!) l0^a l1^b l2^c, ordered by
  // descending a, then descending b.
  static LocalSpace bernstein(int k);
  // {l0, l1, l2, l0 l1, l0 l2, l1 l2}
  static LocalSpace quadratic_b6();
  // {l0, l1, l2}
  static LocalSpace linear();

  const std::string& name() const { return name_; }
  std::size_t dim() const { return terms_.size(); }
  int degree() const { return degree_; }
  const std::vector<BaryMonomial>& terms() const { return terms_; }

  void eval_basis(const Barycentric& l, std::span<double> out) const;
  double eval(const Barycentric& l, std::span<const double> coeffs) const;

  // Coefficients of the same polynomial in bernstein(k), k >= degree(), by
  // multiplying each term with (l0+l1+l2)^(k - deg).
  std::vector<double> to_bernstein(std::span<const double> coeffs, int k) const;

 private:
  std::string name_;
  std::vector<BaryMonomial> terms_;
  int degree_ = 0;
};

// Index of l0^a l1^b l2^c in LocalSpace::bernstein(a+b+c).
std::size_t bernstein_index(int a, int b, int c);

}  // namespace histo
