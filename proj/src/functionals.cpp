#include "histo/functionals.hpp"

#include <string>

#include "histo/errors.hpp"

namespace histo {

namespace {

Barycentric edge_barycentric(int j, double t) {
  Barycentric l{};
  l[static_cast<std::size_t>(j)] = 0.0;
  l[static_cast<std::size_t>((j + 1) % 3)] = 0.5 * (1.0 + t);
  l[static_cast<std::size_t>((j + 2) % 3)] = 0.5 * (1.0 - t);
  return l;
}

double bary_monomial(const Barycentric& l, const std::array<int, 3>& e) {
  double v = 1.0;
  for (std::size_t c = 0; c < 3; ++c)
    for (int p = 0; p < e[c]; ++p) v *= l[c];
  return v;
}

void check_edge(int j) {
  if (j < 0 || j > 2) throw std::out_of_range("edge index must be 0, 1 or 2");
}

}  // namespace

std::size_t dof_count(int k) { return static_cast<std::size_t>((k + 1) * (k + 2) / 2); }

std::size_t interior_count(int k) { return k < 3 ? 0 : static_cast<std::size_t>((k - 1) * (k - 2) / 2); }

std::vector<DofDescriptor> dof_layout(int k) {
  if (k < 1) throw DescriptorError("order must be at least 1");
  std::vector<DofDescriptor> out;
  for (int j = 0; j < 3; ++j) out.push_back({DofKind::edge_mean, j, 0, 0});
  for (int m = 2; m <= k; ++m)
    for (int j = 0; j < 3; ++j) out.push_back({DofKind::edge_moment, j, m, 0});
  for (std::size_t l = 0; l < interior_count(k); ++l) out.push_back({DofKind::interior, 0, 0, static_cast<int>(l)});
  return out;
}

std::vector<std::array<int, 3>> interior_test_exponents(int k) {
  std::vector<std::array<int, 3>> out;
  if (k < 3) return out;
  const int d = k - 3;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) out.push_back({a, b, d - a - b});
  return out;
}

double edge_mean(const ScalarField& f, const Triangle& tri, int j, const GaussRule& rule) {
  check_edge(j);
  return rule.integrate([&](double t) { return f(tri.edge_point(j, t)); });
}

double edge_moment(const ScalarField& f, const Triangle& tri, int j, int m, const OrthoBasis& basis,
                   const GaussRule& rule) {
  check_edge(j);
  if (m < 2 || m > basis.order()) {
    throw DescriptorError("edge moment order " + std::to_string(m) + " outside 2.." + std::to_string(basis.order()));
  }
  const Polynomial1D& pi = basis.poly(m);
  return rule.integrate([&](double t) { return pi(t) * f(tri.edge_point(j, t)); });
}

double interior_bubble(const ScalarField& f, const Triangle& tri, int ell, int k, const TriangleRule& rule,
                       const InteriorWeight& weight) {
  if (k < 3) throw DescriptorError("no interior degrees of freedom below order 3");
  const auto exps = interior_test_exponents(k);
  if (ell < 0 || static_cast<std::size_t>(ell) >= exps.size()) {
    throw DescriptorError("interior functional index " + std::to_string(ell) + " outside 0.." +
                          std::to_string(exps.size() - 1));
  }
  const auto& e = exps[static_cast<std::size_t>(ell)];
  double s = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const auto& l = rule.points[q];
    const double w = weight ? weight(l) : 1.0;
    s += rule.weights[q] * bary_monomial(l, e) * w * f(tri.point(l));
  }
  return s;
}

DofSet::DofSet(const Density& density, int k, DofOptions options)
    : k_(k), options_(std::move(options)), basis_(density, std::max(k, 1)) {
  if (k < 1 || k > 8) throw DescriptorError("order must lie in 1..8");
  if (options_.edge_points < 1) throw ConfigError("edge_points must be positive");
  edge_rule_ = gauss_rule(density, options_.edge_points);
  if (k >= 3) {
    const int q = options_.interior_points > 0 ? options_.interior_points : k + 2;
    interior_rule_ = subdivide(collapsed_gauss_rule(q), std::max(1, options_.interior_subdivision));
  }
  layout_ = dof_layout(k);

  const std::size_t nq = edge_rule_.size();
  for (int j = 0; j < 3; ++j)
    for (double t : edge_rule_.nodes) points_.push_back(edge_barycentric(j, t));
  const std::size_t interior_offset = points_.size();
  points_.insert(points_.end(), interior_rule_.points.begin(), interior_rule_.points.end());

  weights_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(layout_.size()), static_cast<Eigen::Index>(points_.size()));
  const auto exps = interior_test_exponents(k);
  for (std::size_t r = 0; r < layout_.size(); ++r) {
    const auto& d = layout_[r];
    const auto row = static_cast<Eigen::Index>(r);
    switch (d.kind) {
      case DofKind::edge_mean:
        for (std::size_t i = 0; i < nq; ++i)
          weights_(row, static_cast<Eigen::Index>(d.edge * nq + i)) = edge_rule_.weights[i];
        break;
      case DofKind::edge_moment: {
        const double c = moment_scale(d.moment);
        const Polynomial1D& pi = basis_.poly(d.moment);
        for (std::size_t i = 0; i < nq; ++i)
          weights_(row, static_cast<Eigen::Index>(d.edge * nq + i)) = edge_rule_.weights[i] * c * pi(edge_rule_.nodes[i]);
        break;
      }
      case DofKind::interior: {
        const auto& e = exps[static_cast<std::size_t>(d.bubble)];
        for (std::size_t q = 0; q < interior_rule_.size(); ++q) {
          const auto& l = interior_rule_.points[q];
          const double w = options_.interior_weight ? options_.interior_weight(l) : 1.0;
          weights_(row, static_cast<Eigen::Index>(interior_offset + q)) = interior_rule_.weights[q] * bary_monomial(l, e) * w;
        }
        break;
      }
    }
  }
}

double DofSet::moment_scale(int m) const {
  const auto i = static_cast<std::size_t>(m - 2);
  return i < options_.moment_scale.size() ? options_.moment_scale[i] : 1.0;
}

void DofSet::apply(std::span<const double> values, std::span<double> dofs) const {
  Eigen::Map<const Eigen::VectorXd> v(values.data(), static_cast<Eigen::Index>(values.size()));
  Eigen::Map<Eigen::VectorXd> out(dofs.data(), static_cast<Eigen::Index>(dofs.size()));
  out.noalias() = weights_ * v;
}

std::vector<double> dof_vector(const ScalarField& f, const Triangle& tri, const DofSet& dofs) {
  return dofs.evaluate_barycentric([&](const Barycentric& l) { return f(tri.point(l)); });
}

}  // namespace histo
