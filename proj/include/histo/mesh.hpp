#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace histo {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

using Barycentric = std::array<double, 3>;

// Axis-aligned rectangle [x0,x1] x [y0,y1].
struct Rect {
  double x0 = -1.0;
  double x1 = 1.0;
  double y0 = -1.0;
  double y1 = 1.0;

  double area() const { return (x1 - x0) * (y1 - y0); }
};

/// A non-degenerate triangle with counter-clockwise vertices.
///
/// Local indices are 0-based and cyclic: edge j is opposite vertex j and runs
/// between vertices (j+1)%3 and (j+2)%3.
class Triangle {
 public:
  Triangle(std::array<std::size_t, 3> ids, std::array<Point2, 3> vertices);

  const std::array<std::size_t, 3>& vertex_ids() const { return ids_; }
  const std::array<Point2, 3>& vertices() const { return v_; }
  const Point2& vertex(int i) const { return v_[static_cast<std::size_t>(i % 3)]; }
  double area() const { return area_; }
  Point2 centroid() const;

  Barycentric barycentric(const Point2& p) const;
  Point2 point(const Barycentric& lambda) const;

  // gamma_j(t) = (1+t)/2 v_{j+1} + (1-t)/2 v_{j+2}, t in [-1,1]. Throws
  // std::out_of_range for j outside 0..2.
  Point2 edge_point(int j, double t) const;
  double edge_length(int j) const;

 private:
  std::array<std::size_t, 3> ids_;
  std::array<Point2, 3> v_;
  double area_;
  // Affine map p -> (lambda_1, lambda_2); lambda_0 = 1 - lambda_1 - lambda_2.
  double inv_[4];
};

struct Edge {
  std::array<std::size_t, 2> vertices;  // sorted ascending
  std::vector<std::size_t> triangles;   // incident triangle ids, ascending
};

struct StructuredInfo {
  int n = 0;
  Rect domain;
};

class Mesh {
 public:
  // Validates indices, orients every triangle counter-clockwise and builds the
  // edge table. Throws DomainError for degenerate triangles or edges shared
  // by more than two triangles.
  Mesh(std::vector<Point2> vertices, const std::vector<std::array<std::size_t, 3>>& triangles,
       std::optional<StructuredInfo> structured = std::nullopt);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Triangle& triangle(std::size_t id) const { return triangles_.at(id); }
  std::size_t size() const { return triangles_.size(); }

  const std::optional<StructuredInfo>& structured() const { return structured_; }
  std::optional<int> level() const;

  // Lowest-id triangle containing p (closed triangles, relative tolerance
  // 1e-12), or nullopt when p lies outside the mesh.
  std::optional<std::size_t> locate(const Point2& p) const;

 private:
  std::optional<std::size_t> locate_structured(const Point2& p) const;
  bool contains(std::size_t tri, const Point2& p) const;

  std::vector<Point2> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::optional<StructuredInfo> structured_;
};

/// Friedrichs-Keller triangulation: (n+1)^2 cells, each split from its
/// bottom-left to its top-right corner. Vertices are numbered row by row;
/// cell (i,j) owns triangles 2c and 2c+1 with c = j(n+1)+i.
Mesh friedrichs_keller(int n, const Rect& domain = Rect{});

// Plain-text mesh format: "V x y", "T a b c" (0-based), "#" comments.
void write_mesh(const Mesh& mesh, std::ostream& out);
void write_mesh(const Mesh& mesh, const std::string& path);
Mesh read_mesh(std::istream& in);
Mesh read_mesh(const std::string& path);

}  // namespace histo
