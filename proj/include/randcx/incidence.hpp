#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "randcx/complex.hpp"

namespace randcx {

/// Hash-based lookup tables over the triangles of a complex: membership,
/// edge degrees, apexes over each edge, and per-vertex triangle counts.
class Incidence {
 public:
  explicit Incidence(const Complex2& c);

  bool has_triangle(Vertex u, Vertex v, Vertex w) const;
  std::size_t edge_degree(Vertex u, Vertex v) const;
  // Third vertices of the triangles containing {u, v}.
  const std::vector<Vertex>& apexes(Vertex u, Vertex v) const;
  std::size_t vertex_degree(Vertex v) const { return v < vertex_degree_.size() ? vertex_degree_[v] : 0; }
  // Vertices sharing a triangle with v, sorted.
  const std::vector<Vertex>& link(Vertex v) const;

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
  }
  static std::uint64_t key(Vertex u, Vertex v, Vertex w);

  std::unordered_set<std::uint64_t> triangles_;
  std::unordered_map<std::uint64_t, std::vector<Vertex>> apexes_;
  std::vector<std::size_t> vertex_degree_;
  std::vector<std::vector<Vertex>> link_;
};

}  // namespace randcx
