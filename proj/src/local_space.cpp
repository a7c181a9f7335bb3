#include "histo/local_space.hpp"

#include <algorithm>
#include <cmath>

#include "histo/errors.hpp"

namespace histo {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double multinomial(int a, int b, int c) { return factorial(a + b + c) / (factorial(a) * factorial(b) * factorial(c)); }

}  // namespace

std::size_t bernstein_index(int a, int b, int c) {
  const int k = a + b + c;
  const int r = k - a;
  return static_cast<std::size_t>(r * (r + 1) / 2 + (r - b));
}

LocalSpace::LocalSpace(std::string name, std::vector<BaryMonomial> terms)
    : name_(std::move(name)), terms_(std::move(terms)) {
  if (terms_.empty()) throw ConfigError("local space needs at least one term");
  for (const auto& t : terms_) degree_ = std::max(degree_, t.degree());
  if (degree_ > 15 || terms_.size() > 64) throw ConfigError("local space too large");
}

LocalSpace LocalSpace::bernstein(int k) {
  if (k < 0) throw DomainError("Bernstein degree must be non-negative");
  std::vector<BaryMonomial> terms;
  for (int a = k; a >= 0; --a) {
    for (int b = k - a; b >= 0; --b) {
      const int c = k - a - b;
      terms.push_back({{a, b, c}, multinomial(a, b, c)});
    }
  }
  return LocalSpace("bernstein" + std::to_string(k), std::move(terms));
}

LocalSpace LocalSpace::quadratic_b6() {
  return LocalSpace("b6", {{{1, 0, 0}, 1.0},
                           {{0, 1, 0}, 1.0},
                           {{0, 0, 1}, 1.0},
                           {{1, 1, 0}, 1.0},
                           {{1, 0, 1}, 1.0},
                           {{0, 1, 1}, 1.0}});
}

LocalSpace LocalSpace::linear() { return LocalSpace("linear", {{{1, 0, 0}, 1.0}, {{0, 1, 0}, 1.0}, {{0, 0, 1}, 1.0}}); }

void LocalSpace::eval_basis(const Barycentric& l, std::span<double> out) const {
  // powers[c][p] = l_c^p
  double powers[3][16];
  const int deg = std::min(degree_, 15);
  for (int c = 0; c < 3; ++c) {
    powers[c][0] = 1.0;
    for (int p = 1; p <= deg; ++p) powers[c][p] = powers[c][p - 1] * l[static_cast<std::size_t>(c)];
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& e = terms_[i].exponents;
    out[i] = terms_[i].scale * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
  }
}

double LocalSpace::eval(const Barycentric& l, std::span<const double> coeffs) const {
  double basis[64];
  eval_basis(l, std::span<double>(basis, terms_.size()));
  double v = 0.0;
  for (std::size_t i = 0; i < terms_.size(); ++i) v += coeffs[i] * basis[i];
  return v;
}

std::vector<double> LocalSpace::to_bernstein(std::span<const double> coeffs, int k) const {
  if (k < degree_) throw DomainError("target Bernstein degree below space degree");
  const std::size_t dim = static_cast<std::size_t>((k + 1) * (k + 2) / 2);
  std::vector<double> monomial(dim, 0.0);  // plain monomial coefficients, Bernstein ordering
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const auto& e = terms_[t].exponents;
    const int lift = k - terms_[t].degree();
    const double c = coeffs[t] * terms_[t].scale;
    for (int i = lift; i >= 0; --i) {
      for (int j = lift - i; j >= 0; --j) {
        const int l = lift - i - j;
        monomial[bernstein_index(e[0] + i, e[1] + j, e[2] + l)] += c * multinomial(i, j, l);
      }
    }
  }
  std::vector<double> out(dim);
  for (int a = k; a >= 0; --a) {
    for (int b = k - a; b >= 0; --b) {
      const int c = k - a - b;
      const std::size_t idx = bernstein_index(a, b, c);
      out[idx] = monomial[idx] / multinomial(a, b, c);
    }
  }
  return out;
}

}  // namespace histo
