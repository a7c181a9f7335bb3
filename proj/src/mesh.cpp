#include "histo/mesh.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

#include "histo/errors.hpp"
#include "histo/format.hpp"

namespace histo {

namespace {

double signed_area(const Point2& a, const Point2& b, const Point2& c) {
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

}  // namespace

Triangle::Triangle(std::array<std::size_t, 3> ids, std::array<Point2, 3> vertices)
    : ids_(ids), v_(vertices) {
  double a = signed_area(v_[0], v_[1], v_[2]);
  if (a < 0.0) {
    std::swap(v_[1], v_[2]);
    std::swap(ids_[1], ids_[2]);
    a = -a;
  }
  const double scale = std::max({std::abs(v_[1].x - v_[0].x), std::abs(v_[1].y - v_[0].y),
                                 std::abs(v_[2].x - v_[0].x), std::abs(v_[2].y - v_[0].y)});
  if (!(a > 1e-14 * scale * scale) || !std::isfinite(a)) {
    throw DomainError("degenerate triangle (collinear vertices)");
  }
  area_ = a;
  const double m00 = v_[1].x - v_[0].x;
  const double m01 = v_[2].x - v_[0].x;
  const double m10 = v_[1].y - v_[0].y;
  const double m11 = v_[2].y - v_[0].y;
  const double det = m00 * m11 - m01 * m10;
  inv_[0] = m11 / det;
  inv_[1] = -m01 / det;
  inv_[2] = -m10 / det;
  inv_[3] = m00 / det;
}

Point2 Triangle::centroid() const {
  return {(v_[0].x + v_[1].x + v_[2].x) / 3.0, (v_[0].y + v_[1].y + v_[2].y) / 3.0};
}

Barycentric Triangle::barycentric(const Point2& p) const {
  const double dx = p.x - v_[0].x;
  const double dy = p.y - v_[0].y;
  const double l1 = inv_[0] * dx + inv_[1] * dy;
  const double l2 = inv_[2] * dx + inv_[3] * dy;
  return {1.0 - l1 - l2, l1, l2};
}

Point2 Triangle::point(const Barycentric& lambda) const {
  return {lambda[0] * v_[0].x + lambda[1] * v_[1].x + lambda[2] * v_[2].x,
          lambda[0] * v_[0].y + lambda[1] * v_[1].y + lambda[2] * v_[2].y};
}

Point2 Triangle::edge_point(int j, double t) const {
  if (j < 0 || j > 2) throw std::out_of_range("edge index must be 0, 1 or 2");
  const Point2& a = v_[static_cast<std::size_t>((j + 1) % 3)];
  const Point2& b = v_[static_cast<std::size_t>((j + 2) % 3)];
  const double wa = 0.5 * (1.0 + t);
  const double wb = 0.5 * (1.0 - t);
  return {wa * a.x + wb * b.x, wa * a.y + wb * b.y};
}

double Triangle::edge_length(int j) const {
  if (j < 0 || j > 2) throw std::out_of_range("edge index must be 0, 1 or 2");
  const Point2& a = v_[static_cast<std::size_t>((j + 1) % 3)];
  const Point2& b = v_[static_cast<std::size_t>((j + 2) % 3)];
  return std::hypot(a.x - b.x, a.y - b.y);
}

Mesh::Mesh(std::vector<Point2> vertices, const std::vector<std::array<std::size_t, 3>>& triangles,
           std::optional<StructuredInfo> structured)
    : vertices_(std::move(vertices)), structured_(structured) {
  for (const auto& p : vertices_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("non-finite vertex coordinate");
  }
  triangles_.reserve(triangles.size());
  std::map<std::array<std::size_t, 2>, std::size_t> edge_index;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& ids = triangles[t];
    for (std::size_t id : ids) {
      if (id >= vertices_.size()) throw DomainError("triangle references missing vertex " + std::to_string(id));
    }
    triangles_.emplace_back(ids, std::array<Point2, 3>{vertices_[ids[0]], vertices_[ids[1]], vertices_[ids[2]]});
    const auto& oriented = triangles_.back().vertex_ids();
    for (int j = 0; j < 3; ++j) {
      std::array<std::size_t, 2> key{oriented[static_cast<std::size_t>((j + 1) % 3)],
                                     oriented[static_cast<std::size_t>((j + 2) % 3)]};
      if (key[0] > key[1]) std::swap(key[0], key[1]);
      auto [it, inserted] = edge_index.try_emplace(key, edges_.size());
      if (inserted) edges_.push_back(Edge{key, {}});
      auto& incident = edges_[it->second].triangles;
      if (incident.size() == 2) throw DomainError("edge shared by more than two triangles");
      incident.push_back(t);
    }
  }
}

std::optional<int> Mesh::level() const {
  if (structured_) return structured_->n;
  return std::nullopt;
}

bool Mesh::contains(std::size_t tri, const Point2& p) const {
  const Barycentric l = triangles_[tri].barycentric(p);
  constexpr double tol = 1e-12;
  return l[0] >= -tol && l[1] >= -tol && l[2] >= -tol;
}

std::optional<std::size_t> Mesh::locate(const Point2& p) const {
  if (structured_) return locate_structured(p);
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    if (contains(t, p)) return t;
  }
  return std::nullopt;
}

std::optional<std::size_t> Mesh::locate_structured(const Point2& p) const {
  const int cells = structured_->n + 1;
  const Rect& d = structured_->domain;
  const double u = (p.x - d.x0) / (d.x1 - d.x0) * cells;
  const double v = (p.y - d.y0) / (d.y1 - d.y0) * cells;
  constexpr double tol = 1e-12;
  if (u < -tol * cells || v < -tol * cells || u > cells * (1 + tol) || v > cells * (1 + tol)) {
    return std::nullopt;
  }
  // Every cell whose closed box may contain p; the lowest-id containing
  // triangle among them is the global answer.
  const double slack = 1e-9;
  const int i_lo = std::clamp(static_cast<int>(std::floor(u - slack)), 0, cells - 1);
  const int i_hi = std::clamp(static_cast<int>(std::floor(u + slack)), 0, cells - 1);
  const int j_lo = std::clamp(static_cast<int>(std::floor(v - slack)), 0, cells - 1);
  const int j_hi = std::clamp(static_cast<int>(std::floor(v + slack)), 0, cells - 1);
  std::optional<std::size_t> best;
  for (int j = j_lo; j <= j_hi; ++j) {
    for (int i = i_lo; i <= i_hi; ++i) {
      const std::size_t c = static_cast<std::size_t>(j * cells + i);
      for (std::size_t t : {2 * c, 2 * c + 1}) {
        if ((!best || t < *best) && contains(t, p)) best = t;
      }
    }
  }
  return best;
}

Mesh friedrichs_keller(int n, const Rect& domain) {
  if (n < 0) throw DomainError("mesh level must be non-negative");
  if (!(domain.x1 > domain.x0) || !(domain.y1 > domain.y0) || !std::isfinite(domain.area())) {
    throw DomainError("invalid domain: rectangle is degenerate");
  }
  const int cells = n + 1;
  const int row = cells + 1;
  std::vector<Point2> vertices;
  vertices.reserve(static_cast<std::size_t>(row * row));
  for (int j = 0; j < row; ++j) {
    // Pin the last row/column to the exact boundary.
    const double y = j == cells ? domain.y1 : domain.y0 + (domain.y1 - domain.y0) * j / cells;
    for (int i = 0; i < row; ++i) {
      const double x = i == cells ? domain.x1 : domain.x0 + (domain.x1 - domain.x0) * i / cells;
      vertices.push_back({x, y});
    }
  }
  std::vector<std::array<std::size_t, 3>> tris;
  tris.reserve(static_cast<std::size_t>(2 * cells * cells));
  for (int j = 0; j < cells; ++j) {
    for (int i = 0; i < cells; ++i) {
      const auto a = static_cast<std::size_t>(j * row + i);
      const std::size_t b = a + 1;
      const std::size_t c = a + static_cast<std::size_t>(row) + 1;
      const std::size_t d = a + static_cast<std::size_t>(row);
      tris.push_back({a, b, c});
      tris.push_back({a, c, d});
    }
  }
  return Mesh(std::move(vertices), tris, StructuredInfo{n, domain});
}

// ---------------------------------------------------------------------------
// Text I/O

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <class T>
T parse_number(std::string_view tok, std::size_t line) {
  T value{};
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError("bad number '" + std::string(tok) + "'", line);
  }
  return value;
}

}  // namespace

void write_mesh(const Mesh& mesh, std::ostream& out) {
  out << "# histo mesh: " << mesh.vertices().size() << " vertices, " << mesh.size() << " triangles\n";
  for (const auto& p : mesh.vertices()) out << "V " << format_double(p.x) << ' ' << format_double(p.y) << '\n';
  for (const auto& t : mesh.triangles()) {
    const auto& id = t.vertex_ids();
    out << "T " << id[0] << ' ' << id[1] << ' ' << id[2] << '\n';
  }
}

void write_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_mesh(mesh, out);
  if (!out) throw IoError("write to '" + path + "' failed");
}

Mesh read_mesh(std::istream& in) {
  std::vector<Point2> vertices;
  std::vector<std::array<std::size_t, 3>> tris;
  std::vector<std::size_t> tri_lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const auto toks = split_ws(std::string_view(line).substr(0, hash));
    if (toks.empty()) continue;
    if (toks[0] == "V") {
      if (toks.size() != 3) throw ParseError("vertex line needs 2 coordinates", lineno);
      const double x = parse_number<double>(toks[1], lineno);
      const double y = parse_number<double>(toks[2], lineno);
      if (!std::isfinite(x) || !std::isfinite(y)) throw ParseError("non-finite coordinate", lineno);
      vertices.push_back({x, y});
    } else if (toks[0] == "T") {
      if (toks.size() != 4) throw ParseError("triangle line needs 3 vertex indices", lineno);
      tris.push_back({parse_number<std::size_t>(toks[1], lineno), parse_number<std::size_t>(toks[2], lineno),
                      parse_number<std::size_t>(toks[3], lineno)});
      tri_lines.push_back(lineno);
    } else {
      throw ParseError("unknown record '" + std::string(toks[0]) + "'", lineno);
    }
  }
  if (vertices.empty() || tris.empty()) throw ParseError("mesh has no vertices or no triangles", lineno);
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (std::size_t id : tris[t]) {
      if (id >= vertices.size()) {
        throw ParseError("triangle references missing vertex " + std::to_string(id), tri_lines[t]);
      }
    }
  }
  try {
    return Mesh(std::move(vertices), tris);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), lineno);
  }
}

Mesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_mesh(in);
}

}  // namespace histo
