#include "randcx/incidence.hpp"

#include <algorithm>

namespace randcx {

std::uint64_t Incidence::key(Vertex u, Vertex v, Vertex w) {
  auto t = make_triangle(u, v, w);
  return (std::uint64_t{t.a} << 42) | (std::uint64_t{t.b} << 21) | t.c;
}

Incidence::Incidence(const Complex2& c) : vertex_degree_(c.n_vertices(), 0), link_(c.n_vertices()) {
  triangles_.reserve(c.face_count() * 2);
  for (const auto& t : c.triangles()) {
    triangles_.insert(key(t.a, t.b, t.c));
    for (const auto& e : t.edges()) apexes_[key(e.a, e.b)].push_back(t.apex(e));
    for (auto v : t.vertices()) {
      ++vertex_degree_[v];
      for (auto w : t.vertices()) {
        if (w != v) link_[v].push_back(w);
      }
    }
  }
  for (auto& l : link_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
}

bool Incidence::has_triangle(Vertex u, Vertex v, Vertex w) const {
  if (u == v || v == w || u == w) return false;
  return triangles_.contains(key(u, v, w));
}

std::size_t Incidence::edge_degree(Vertex u, Vertex v) const {
  if (u == v) return 0;
  auto it = apexes_.find(key(u, v));
  return it == apexes_.end() ? 0 : it->second.size();
}

const std::vector<Vertex>& Incidence::apexes(Vertex u, Vertex v) const {
  static const std::vector<Vertex> kEmpty;
  if (u == v) return kEmpty;
  auto it = apexes_.find(key(u, v));
  return it == apexes_.end() ? kEmpty : it->second;
}

const std::vector<Vertex>& Incidence::link(Vertex v) const {
  static const std::vector<Vertex> kEmpty;
  return v < link_.size() ? link_[v] : kEmpty;
}

}  // namespace randcx
