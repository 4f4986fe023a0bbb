#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace randcx {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  auto operator<=>(const Edge&) const = default;
};

/// 2-simplex stored with a < b < c.
struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  auto operator<=>(const Triangle&) const = default;

  std::array<Vertex, 3> vertices() const { return {a, b, c}; }
  std::array<Edge, 3> edges() const { return {Edge{a, b}, Edge{a, c}, Edge{b, c}}; }
  bool has_vertex(Vertex v) const { return v == a || v == b || v == c; }
  bool has_edge(const Edge& e) const { return has_vertex(e.a) && has_vertex(e.b); }
  // Vertex opposite to e; e must be an edge of this triangle.
  Vertex apex(const Edge& e) const;
};

// Both throw std::invalid_argument on repeated vertices.
Edge make_edge(Vertex u, Vertex v);
Triangle make_triangle(Vertex u, Vertex v, Vertex w);

std::string to_string(const Edge& e);
std::string to_string(const Triangle& t);

/// A nonnegative integer or infinity. Used for dual distances, collapse
/// levels D(σ), and collapse numbers.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::size_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat infinity() {
    ExtNat r;
    r.value_.reset();
    return r;
  }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }
  // Throws std::logic_error when infinite.
  std::size_t value() const;

  friend constexpr bool operator==(const ExtNat& x, const ExtNat& y) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtNat& x, const ExtNat& y) {
    if (x.is_infinite() || y.is_infinite()) {
      return x.is_infinite() <=> y.is_infinite();
    }
    return *x.value_ <=> *y.value_;
  }

 private:
  std::optional<std::size_t> value_{std::size_t{0}};
};

std::string to_string(const ExtNat& x);

/// Finite 2-dimensional simplicial complex on vertices 0..n_vertices-1.
///
/// Edges are never stored when a triangle induces them; the remaining edges
/// live in extra_edges, or are implied for every vertex pair when the complex
/// carries the full 1-skeleton (random model samples). Immutable after
/// construction.
class Complex2 {
 public:
  Complex2() = default;

  // Validates indices and degenerate simplices, sorts and deduplicates, and
  // drops extra edges that are faces of some triangle.
  static Complex2 from_triangles(std::size_t n_vertices,
                                 std::span<const std::array<Vertex, 3>> triangles,
                                 std::span<const std::array<Vertex, 2>> extra_edges = {});
  static Complex2 from_triangles(std::size_t n_vertices, std::vector<Triangle> triangles,
                                 std::vector<Edge> extra_edges = {});
  // Complex containing every vertex pair as an edge plus the given triangles.
  static Complex2 with_full_skeleton(std::size_t n_vertices, std::vector<Triangle> triangles);

  std::size_t n_vertices() const { return n_vertices_; }
  std::size_t face_count() const { return triangles_.size(); }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  bool has_full_skeleton() const { return full_skeleton_; }

  // Edges not induced by triangles, materialized (all uncovered pairs when the
  // full skeleton flag is set).
  std::vector<Edge> extra_edges() const;
  // Edges induced by triangles with their degrees, sorted by edge.
  const std::vector<std::pair<Edge, std::size_t>>& face_edges() const { return face_edges_; }
  // Every edge of the complex, sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  bool contains(const Triangle& t) const;
  bool has_edge(const Edge& e) const;
  // Index of t in triangles(), if present.
  std::optional<std::size_t> index_of(const Triangle& t) const;
  // Number of triangles containing e; throws std::invalid_argument if e is not
  // an edge of the complex.
  std::size_t edge_degree(const Edge& e) const;
  // Sorted vertices lying in at least one triangle.
  std::vector<Vertex> incident_vertices() const;

  // Subcomplex spanned by the selected triangles (same vertex range, no extra
  // edges).
  Complex2 restricted_to(std::span<const std::size_t> triangle_indices) const;

  friend bool operator==(const Complex2& x, const Complex2& y) {
    // Same simplices; a full-skeleton flag and explicit extras compare equal.
    return x.n_vertices_ == y.n_vertices_ && x.triangles_ == y.triangles_ && x.extra_edges() == y.extra_edges();
  }

 private:
  void index_edges();

  std::size_t n_vertices_ = 0;
  std::vector<Triangle> triangles_;
  std::vector<Edge> extra_edges_;
  bool full_skeleton_ = false;
  std::vector<std::pair<Edge, std::size_t>> face_edges_;
};

// Structural queries.

std::size_t edge_degree(const Complex2& c, const Edge& e);
// Edges of degree exactly one.
std::vector<Edge> boundary(const Complex2& c);
Complex2 pure_part(const Complex2& c);

// Dual graph: triangles (by index) adjacent when they share an edge.
std::vector<std::vector<std::size_t>> dual_adjacency(const Complex2& c);
// BFS distances in the dual graph from the triangle at source_index.
std::vector<ExtNat> dual_distances_from(const Complex2& c, std::size_t source_index);
ExtNat dual_distance(const Complex2& c, const Triangle& from, const Triangle& to);
// Throws std::invalid_argument for a triangle-free complex.
ExtNat diameter(const Complex2& c);
bool is_strongly_connected(const Complex2& c);
// True when every edge lies in a triangle; vertices outside every simplex are
// treated as unused indices.
bool is_pure(const Complex2& c);
bool is_closed(const Complex2& c);
std::size_t max_degree(const Complex2& c);
bool is_pseudo_surface(const Complex2& c, std::size_t r);

std::int64_t euler_characteristic(const Complex2& c);
// dim H_2(c; Z/2) = f - rank of the triangle/edge incidence matrix mod 2.
std::size_t h2_rank_mod2(const Complex2& c);
// Face indices of a nonzero mod-2 2-cycle whose support contains no smaller
// nonzero cycle; empty when H_2 vanishes.
std::vector<std::size_t> minimal_mod2_cycle(const Complex2& c);

// Standard complexes.
Complex2 single_triangle();
Complex2 tetrahedron_boundary();
Complex2 octahedron_boundary();
// Seven-vertex torus (v=7, e=21, f=14).
Complex2 seven_vertex_torus();
// All C(n,3) triangles on n vertices.
Complex2 full_two_skeleton(std::size_t n);

}  // namespace randcx
