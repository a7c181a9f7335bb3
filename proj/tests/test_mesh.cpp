#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "histo/errors.hpp"
#include "histo/mesh.hpp"
#include "oracles.hpp"

using namespace histo;

namespace {

// Edges by direct enumeration of sorted vertex pairs.
std::size_t count_edges(const Mesh& m) {
  std::set<std::pair<std::size_t, std::size_t>> e;
  for (const auto& t : m.triangles()) {
    const auto& v = t.vertex_ids();
    for (int i = 0; i < 3; ++i) {
      const auto a = v[static_cast<std::size_t>(i)], b = v[static_cast<std::size_t>((i + 1) % 3)];
      e.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return e.size();
}

}  // namespace

TEST_CASE("friedrichs_keller counts") {
  CHECK(friedrichs_keller(20).size() == 882);
  for (int n : {20, 30, 40, 50}) CHECK(friedrichs_keller(n).size() == static_cast<std::size_t>(2 * (n + 1) * (n + 1)));

  const Mesh m0 = friedrichs_keller(0);
  CHECK(m0.size() == 2);
  CHECK(m0.vertices().size() == 4);
  CHECK(m0.edges().size() == 5);

  const Mesh m3 = friedrichs_keller(3);
  CHECK(m3.size() == 32);
  CHECK(m3.vertices().size() == 25);
  CHECK(count_edges(m3) == 56);
  CHECK(m3.edges().size() == 56);
  // Euler relation on a disc.
  CHECK(static_cast<long>(m3.vertices().size()) - 56 + 32 == 1);
}

TEST_CASE("friedrichs_keller geometry") {
  const Rect dom{0.0, 3.0, -1.0, 1.0};
  const int n = 5;
  const Mesh m = friedrichs_keller(n, dom);
  for (const auto& t : m.triangles()) CHECK(std::abs(t.area() - dom.area() / (2.0 * 36)) <= 1e-12);
  // Interior edges are shared by two triangles, boundary edges by one.
  for (const auto& e : m.edges()) {
    const auto& a = m.vertices()[e.vertices[0]];
    const auto& b = m.vertices()[e.vertices[1]];
    const bool boundary = (a.x == b.x && (a.x == dom.x0 || a.x == dom.x1)) ||
                          (a.y == b.y && (a.y == dom.y0 || a.y == dom.y1));
    CHECK(e.triangles.size() == (boundary ? 1u : 2u));
  }
  CHECK(m.level() == n);
  CHECK_THROWS_AS(friedrichs_keller(2, Rect{1.0, 1.0, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(friedrichs_keller(-1), DomainError);
}

TEST_CASE("triangle orientation and degeneracy") {
  const Triangle cw({0, 1, 2}, {{{0, 0}, {0, 1}, {1, 0}}});
  const auto& v = cw.vertices();
  const double signed_area = (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[2].x - v[0].x) * (v[1].y - v[0].y);
  CHECK(signed_area > 0);
  CHECK(cw.area() == doctest::Approx(0.5));
  CHECK_THROWS_AS(Triangle({0, 1, 2}, {{{0, 0}, {1, 1}, {2, 2}}}), DomainError);
}

TEST_CASE("barycentric coordinates") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Triangle t = oracle::random_triangle(rng);
    for (int i = 0; i < 3; ++i) {
      const auto l = t.barycentric(t.vertex(i));
      for (int k = 0; k < 3; ++k) CHECK(std::abs(l[static_cast<std::size_t>(k)] - (i == k ? 1.0 : 0.0)) <= 1e-12);
    }
    const auto c = t.barycentric(t.centroid());
    for (double x : c) CHECK(std::abs(x - 1.0 / 3.0) <= 1e-12);

    std::uniform_real_distribution<double> u(-2.0, 2.0), s(0.0, 1.0);
    const Point2 p{u(rng), u(rng)}, q{u(rng), u(rng)};
    const double w = s(rng);
    const auto lp = t.barycentric(p), lq = t.barycentric(q);
    const auto lm = t.barycentric({w * p.x + (1 - w) * q.x, w * p.y + (1 - w) * q.y});
    for (int i = 0; i < 3; ++i) {
      const auto k = static_cast<std::size_t>(i);
      CHECK(std::abs(lm[k] - (w * lp[k] + (1 - w) * lq[k])) <= 1e-12);
    }
    CHECK(std::abs(lp[0] + lp[1] + lp[2] - 1.0) <= 1e-12);

    const Barycentric inside = oracle::random_barycentric(rng);
    const auto back = t.barycentric(t.point(inside));
    for (int i = 0; i < 3; ++i) {
      CHECK(back[static_cast<std::size_t>(i)] >= -1e-12);
      CHECK(std::abs(back[static_cast<std::size_t>(i)] - inside[static_cast<std::size_t>(i)]) <= 1e-12);
    }
  }
}

TEST_CASE("edge parametrization") {
  const Triangle t({0, 1, 2}, {{{0, 0}, {2, 0}, {0, 1}}});
  for (int j = 0; j < 3; ++j) {
    const Point2 a = t.edge_point(j, 1.0), b = t.edge_point(j, -1.0), mid = t.edge_point(j, 0.0);
    CHECK(a == t.vertex(j + 1));
    CHECK(b == t.vertex(j + 2));
    CHECK(mid.x == doctest::Approx((t.vertex(j + 1).x + t.vertex(j + 2).x) / 2));
    CHECK(mid.y == doctest::Approx((t.vertex(j + 1).y + t.vertex(j + 2).y) / 2));
    for (double s : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
      const auto l = t.barycentric(t.edge_point(j, s));
      CHECK(std::abs(l[static_cast<std::size_t>(j)]) <= 1e-14);
      CHECK(l[static_cast<std::size_t>((j + 1) % 3)] == doctest::Approx((1 + s) / 2));
    }
  }
  CHECK(t.edge_length(0) == doctest::Approx(std::sqrt(5.0)));
  CHECK_THROWS_AS(t.edge_point(3, 0.0), std::out_of_range);
  CHECK_THROWS_AS(t.edge_point(-1, 0.0), std::out_of_range);
}

TEST_CASE("point location") {
  const Mesh m = friedrichs_keller(4);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Point2 p{u(rng), u(rng)};
    const auto tri = m.locate(p);
    REQUIRE(tri.has_value());
    for (double l : m.triangle(*tri).barycentric(p)) CHECK(l >= -1e-12);
    // Lowest id among all containing triangles.
    for (std::size_t k = 0; k < *tri; ++k) {
      const auto l = m.triangle(k).barycentric(p);
      CHECK_FALSE((l[0] >= -1e-12 && l[1] >= -1e-12 && l[2] >= -1e-12));
    }
  }
  CHECK_FALSE(m.locate({1.5, 0.0}).has_value());
  CHECK(m.locate({-1.0, -1.0}) == std::optional<std::size_t>(0));
  // Same answer from the generic scan.
  const Mesh plain(m.vertices(), [&] {
    std::vector<std::array<std::size_t, 3>> t;
    for (const auto& tri : m.triangles()) t.push_back(tri.vertex_ids());
    return t;
  }());
  for (int i = 0; i < 100; ++i) {
    const Point2 p{u(rng), u(rng)};
    CHECK(plain.locate(p) == m.locate(p));
  }
}

TEST_CASE("mesh io round trip") {
  const Mesh m = friedrichs_keller(2, Rect{-1.0, 0.3, 0.1, 0.7});
  std::stringstream ss;
  write_mesh(m, ss);
  const Mesh r = read_mesh(ss);
  CHECK(r.size() == 18);
  REQUIRE(r.vertices().size() == m.vertices().size());
  for (std::size_t i = 0; i < m.vertices().size(); ++i) CHECK(r.vertices()[i] == m.vertices()[i]);
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(r.triangle(i).vertex_ids() == m.triangle(i).vertex_ids());
}

TEST_CASE("mesh io errors") {
  {
    std::istringstream in("V 0 0\nV 1 0\n# comment\nT 0 1 2\n");
    try {
      read_mesh(in);
      FAIL("expected parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
  }
  {
    std::istringstream in("");
    CHECK_THROWS_AS(read_mesh(in), ParseError);
  }
  {
    std::istringstream in("# only comments\n\n");
    CHECK_THROWS_AS(read_mesh(in), ParseError);
  }
  {
    std::istringstream in("V 0 zero\n");
    CHECK_THROWS_AS(read_mesh(in), ParseError);
  }
  {
    std::istringstream in("Q 1 2\n");
    CHECK_THROWS_AS(read_mesh(in), ParseError);
  }
  CHECK_THROWS(read_mesh(std::string("/nonexistent/mesh.txt")));
}
