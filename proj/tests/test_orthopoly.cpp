#include <doctest.h>

#include <cmath>

#include "histo/density.hpp"
#include "histo/errors.hpp"
#include "histo/orthopoly.hpp"
#include "oracles.hpp"

using namespace histo;

namespace {

std::vector<Density> sample_densities() {
  return {Density::uniform(), Density::gegenbauer(0.5), Density::gegenbauer(2.0), Density::jacobi(1.0, 0.0),
          Density::jacobi(-0.5, 2.0), Density::jacobi(3.0, 8.0), Density::jacobi(-0.9, -0.9)};
}

// <p, q>_omega by tanh-sinh on the raw weight.
double inner(const Density& d, const Polynomial1D& p, const Polynomial1D& q) {
  const double mass = oracle::weighted_integral(d.alpha(), d.beta(), [](double) { return 1.0; });
  return oracle::weighted_integral(d.alpha(), d.beta(), [&](double t) { return p(t) * q(t); }) / mass;
}

}  // namespace

TEST_CASE("monic pi_2") {
  const Polynomial1D u = monic_pi2(Density::uniform());
  CHECK(u.degree() == 2);
  CHECK(u.is_monic());
  CHECK(std::abs(u.coefficient(1)) <= 1e-15);
  CHECK(u.coefficient(0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  for (double g : {0.0, 0.5, 3.0}) CHECK(monic_pi2(Density::gegenbauer(g)).coefficient(1) == 0.0);
  for (const auto& d : sample_densities()) {
    const Polynomial1D p = monic_pi2(d);
    const auto o = oracle::pi2(d.alpha(), d.beta());
    CHECK(std::abs(p.coefficient(1) + o.p) <= 1e-12);
    CHECK(std::abs(p.coefficient(0) + o.q) <= 1e-12);
    CHECK(std::abs(inner(d, p, Polynomial1D({1.0}))) <= 1e-12);
    CHECK(std::abs(inner(d, p, Polynomial1D({0.0, 1.0}))) <= 1e-12);
  }
  const Density point = Density::custom("point", [](int n) { return n == 0 ? 1.0 : 0.0; }, [](double) { return 0.0; });
  CHECK_THROWS_AS(monic_pi2(point), DegenerateDensityError);
  CHECK_THROWS_AS(rho2(point), DegenerateDensityError);
}

TEST_CASE("rho_2") {
  CHECK(rho2(Density::uniform()) == doctest::Approx(4.0 / 45.0).epsilon(1e-14));
  CHECK(rho2_gegenbauer_closed_form(0.0) == doctest::Approx(4.0 / 45.0).epsilon(1e-14));
  for (double g : {-0.5, 0.0, 0.5, 1.0, 2.5, 7.0})
    CHECK(oracle::close_rel(rho2(Density::gegenbauer(g)), rho2_gegenbauer_closed_form(g), 1e-12));
  CHECK(oracle::close_rel(rho2(Density::jacobi(1, 2)), rho2_jacobi_closed_form(1, 2), 1e-12));
  for (double a : {-0.9, -0.5, 0.0, 1.0, 3.0, 8.0})
    for (double b : {-0.9, -0.5, 0.0, 1.0, 3.0, 8.0}) {
      const double r = rho2(Density::jacobi(a, b));
      CHECK(r > 0.0);
      CHECK(oracle::close_rel(r, rho2_jacobi_closed_form(a, b), 1e-11));
      CHECK(oracle::close_rel(r, oracle::rho2_quadrature(a, b), 1e-10));
    }
}

TEST_CASE("recurrence paths agree") {
  for (const auto& d : sample_densities()) {
    const Recurrence closed = jacobi_recurrence(d.alpha(), d.beta(), 8);
    const MomentSequence m(d, 16);
    const Recurrence cheb = chebyshev_recurrence(m.values(), 8);
    for (int n = 0; n < 8; ++n) {
      CHECK(oracle::close(cheb.a[static_cast<std::size_t>(n)], closed.a[static_cast<std::size_t>(n)], 1e-9));
      CHECK(oracle::close_rel(cheb.b[static_cast<std::size_t>(n)], closed.b[static_cast<std::size_t>(n)], 1e-9));
    }
  }
  const Density two_point = Density::custom(
      "two-point", [](int n) { return n % 2 ? 0.0 : std::pow(0.5, n); }, [](double) { return 0.0; });
  try {
    recurrence_for(two_point, 4);
    FAIL("expected ill-conditioned moments");
  } catch (const IllConditionedMomentsError& e) {
    CHECK(e.order() == 2);
  }
}

TEST_CASE("orthogonal basis") {
  const OrthoBasis leg(Density::uniform(), 3);
  CHECK(leg.poly(0).coefficients() == std::vector<double>{1.0});
  CHECK(std::abs(leg.poly(3).coefficient(1) + 0.6) <= 1e-14);
  CHECK(std::abs(leg.poly(3).coefficient(0)) <= 1e-15);
  CHECK(std::abs(leg.poly(3).coefficient(2)) <= 1e-15);
  CHECK(leg.poly(3).coefficient(3) == 1.0);

  const OrthoBasis g2(Density::gegenbauer(2.0), 4);
  for (int n = 1; n <= 4; n += 2)
    for (int i = 0; i <= n; i += 2) CHECK(std::abs(g2.poly(n).coefficient(i)) <= 1e-12);

  for (const auto& d : sample_densities()) {
    const int k = 6;
    const OrthoBasis ob(d, k);
    CHECK(ob.order() == k);
    CHECK(OrthoBasis(d, 0).poly(0).degree() == 0);
    for (int n = 0; n <= k; ++n) {
      CHECK(ob.poly(n).is_monic());
      CHECK(ob.poly(n).degree() == n);
      CHECK(ob.norm2(n) > 0.0);
      for (double t : {-0.9, 0.1, 0.77}) CHECK(ob.eval(n, t) == doctest::Approx(ob.poly(n)(t)).epsilon(1e-12));
      for (int m = 0; m < n; ++m) {
        const double ip = inner(d, ob.poly(n), ob.poly(m));
        CHECK(std::abs(ip) <= 1e-10 * std::sqrt(ob.norm2(n) * ob.norm2(m)));
      }
      CHECK(oracle::close_rel(inner(d, ob.poly(n), ob.poly(n)), ob.norm2(n), 1e-9));
    }
    const Polynomial1D p2 = monic_pi2(d);
    for (int i = 0; i <= 2; ++i) CHECK(std::abs(ob.poly(2).coefficient(i) - p2.coefficient(i)) <= 1e-12);
    CHECK(oracle::close_rel(ob.rho2(), rho2(d), 1e-12));
  }
  CHECK_THROWS(OrthoBasis(Density::uniform(), 1).rho2());
}

TEST_CASE("gauss rules") {
  const GaussRule g1 = gauss_rule(Density::uniform(), 1);
  CHECK(g1.size() == 1);
  CHECK(std::abs(g1.nodes[0]) <= 1e-15);
  CHECK(g1.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  const GaussRule g2 = gauss_rule(Density::uniform(), 2);
  CHECK(g2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(g2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(g2.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(g2.weights[1] == doctest::Approx(0.5).epsilon(1e-14));

  const Density j10 = Density::jacobi(1, 0);
  CHECK(oracle::close(gauss_rule(j10, 5).integrate([](double t) { return std::pow(t, 7); }), j10.moment(7), 1e-12));

  for (const auto& d : sample_densities()) {
    GaussRule prev = gauss_rule(d, 1);
    for (int q = 2; q <= 12; ++q) {
      const GaussRule r = gauss_rule(d, q);
      double sum = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.weights[i] > 0.0);
        CHECK(r.nodes[i] > -1.0);
        CHECK(r.nodes[i] < 1.0);
        if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
        sum += r.weights[i];
      }
      CHECK(std::abs(sum - 1.0) <= 1e-13);
      for (int n = 0; n <= 2 * q - 1; ++n) {
        double scale = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) scale += r.weights[i] * std::pow(std::abs(r.nodes[i]), n);
        const double got = r.integrate([n](double t) { return std::pow(t, n); });
        CHECK(std::abs(got - d.moment(n)) <= 1e-12 * std::max(scale, std::abs(d.moment(n))));
      }
      // Interlacing with the q-1 point rule.
      for (std::size_t i = 0; i < prev.size(); ++i) {
        CHECK(r.nodes[i] < prev.nodes[i]);
        CHECK(prev.nodes[i] < r.nodes[i + 1]);
      }
      prev = r;
    }
  }
  CHECK_THROWS(gauss_rule(Density::uniform(), 0));
  CHECK_THROWS(gauss_rule(jacobi_recurrence(0, 0, 3), 5));
}

TEST_CASE("polynomial helpers") {
  const Polynomial1D p({1.0, -2.0, 3.0});
  CHECK(p(2.0) == 9.0);
  CHECK(p.scaled(2.0).coefficient(2) == 6.0);
  CHECK(p.coefficient(7) == 0.0);
  CHECK_FALSE(p.is_monic());
}
