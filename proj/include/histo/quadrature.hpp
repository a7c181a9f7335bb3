#pragma once

#include <vector>

#include "histo/mesh.hpp"

namespace histo {

// Quadrature on a triangle in barycentric coordinates, weights normalized to
// sum to 1 so that  iint_T f = |T| * sum_i w_i f(x_i).
struct TriangleRule {
  std::vector<Barycentric> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

// 7-point symmetric rule, exact for total degree 5.
TriangleRule symmetric_degree5_rule();

// Collapsed (Duffy) tensor rule with q x q points; exact for total degree 2q-1.
TriangleRule collapsed_gauss_rule(int q);

// Composite rule on the s^2 congruent sub-triangles of a uniform refinement.
TriangleRule subdivide(const TriangleRule& rule, int s);

}  // namespace histo
