#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "histo/density.hpp"
#include "histo/mesh.hpp"
#include "histo/orthopoly.hpp"
#include "histo/quadrature.hpp"

namespace histo {

using ScalarField = std::function<double(const Point2&)>;

// Interior density is W = w(lambda) / |T|; w must be positive inside T.
using InteriorWeight = std::function<double(const Barycentric&)>;

enum class DofKind { edge_mean, edge_moment, interior };

struct DofDescriptor {
  DofKind kind = DofKind::edge_mean;
  int edge = 0;    // 0..2 for edge kinds
  int moment = 0;  // 2..k for edge_moment
  int bubble = 0;  // 0..r_k-1 for interior

  friend bool operator==(const DofDescriptor&, const DofDescriptor&) = default;
};

std::size_t dof_count(int k);       // (k+1)(k+2)/2
std::size_t interior_count(int k);  // (k-1)(k-2)/2, 0 for k < 3

/// Functional ordering for order k: the three edge means, then the three
/// edge moments against pi_2, then against pi_3, ..., then the interior
/// functionals. For k = 2 this is (I_1, I_2, I_3, L_1, L_2, L_3).
std::vector<DofDescriptor> dof_layout(int k);

// Exponents (a,b,c), a+b+c = k-3, of the interior test functions
// g = l0^a l1^b l2^c in ascending lexicographic order.
std::vector<std::array<int, 3>> interior_test_exponents(int k);

// int_{-1}^{1} f(gamma_j(t)) w(t) dt by the Gauss rule of the density.
double edge_mean(const ScalarField& f, const Triangle& tri, int j, const GaussRule& rule);

// int_{-1}^{1} pi_m(t) f(gamma_j(t)) w(t) dt, 2 <= m <= basis.order().
double edge_moment(const ScalarField& f, const Triangle& tri, int j, int m, const OrthoBasis& basis,
                   const GaussRule& rule);

// iint_T g_ell f W with g_ell the ell-th interior test function for order k.
// Throws DescriptorError for k < 3 or ell outside 0..r_k-1.
double interior_bubble(const ScalarField& f, const Triangle& tri, int ell, int k, const TriangleRule& rule,
                       const InteriorWeight& weight = {});

struct DofOptions {
  int edge_points = 16;
  // Collapsed-rule points per direction for interior functionals; 0 picks k+2
  // (exact through degree 2k+3).
  int interior_points = 0;
  // Uniform refinement of the interior rule for non-polynomial targets.
  int interior_subdivision = 1;
  InteriorWeight interior_weight;
  // Optional factors c_m multiplying pi_m, indexed by m-2.
  std::vector<double> moment_scale;
};

/// The full set of degrees of freedom of order k for one edge density.
///
/// Every functional only sees f through barycentric coordinates, so the set is
/// stored as a sampling plan: S barycentric points and a K x S weight matrix.
class DofSet {
 public:
  DofSet(const Density& density, int k, DofOptions options = {});

  int order() const { return k_; }
  std::size_t size() const { return layout_.size(); }
  const Density& density() const { return basis_.density(); }
  const OrthoBasis& basis() const { return basis_; }
  const GaussRule& edge_rule() const { return edge_rule_; }
  const TriangleRule& interior_rule() const { return interior_rule_; }
  const std::vector<DofDescriptor>& layout() const { return layout_; }
  const DofOptions& options() const { return options_; }
  double moment_scale(int m) const;

  const std::vector<Barycentric>& sample_points() const { return points_; }
  const Eigen::MatrixXd& sample_weights() const { return weights_; }

  // dofs = W * values, values[s] = f at sample point s.
  void apply(std::span<const double> values, std::span<double> dofs) const;

  template <class G>
  std::vector<double> evaluate_barycentric(G&& g) const {
    std::vector<double> values(points_.size());
    for (std::size_t s = 0; s < points_.size(); ++s) values[s] = g(points_[s]);
    std::vector<double> dofs(layout_.size());
    apply(values, dofs);
    return dofs;
  }

 private:
  int k_;
  DofOptions options_;
  OrthoBasis basis_;
  GaussRule edge_rule_;
  TriangleRule interior_rule_;
  std::vector<DofDescriptor> layout_;
  std::vector<Barycentric> points_;
  Eigen::MatrixXd weights_;
};

// All K functionals of f on tri in layout order.
std::vector<double> dof_vector(const ScalarField& f, const Triangle& tri, const DofSet& dofs);

}  // namespace histo
