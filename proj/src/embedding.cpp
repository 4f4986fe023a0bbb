#include "randcx/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace randcx {

namespace {

struct PatternPlan {
  std::vector<Vertex> order;
  // For order[i]: a pattern triangle {order[i], x, y} with x, y earlier in the
  // order, used to seed candidates from host apexes.
  std::vector<std::optional<std::pair<Vertex, Vertex>>> anchor_edge;
  // For order[i]: some earlier neighbour, used when no anchor edge exists.
  std::vector<std::optional<Vertex>> anchor_vertex;
};

PatternPlan plan(const Complex2& pattern, const Incidence& pi) {
  PatternPlan p;
  auto vertices = pattern.incident_vertices();
  std::vector<bool> placed(pattern.n_vertices(), false);
  std::vector<std::size_t> touches(pattern.n_vertices(), 0);
  std::vector<std::size_t> position(pattern.n_vertices(), 0);
  while (p.order.size() < vertices.size()) {
    std::optional<Vertex> pick;
    for (auto v : vertices) {
      if (placed[v]) continue;
      if (!pick ||
          std::pair(touches[v], pi.vertex_degree(v)) > std::pair(touches[*pick], pi.vertex_degree(*pick))) {
        pick = v;
      }
    }
    const Vertex u = *pick;
    std::optional<std::pair<Vertex, Vertex>> edge;
    std::optional<Vertex> nb;
    for (const auto& t : pattern.triangles()) {
      if (!t.has_vertex(u)) continue;
      std::array<Vertex, 2> others{};
      std::size_t k = 0;
      for (auto w : t.vertices()) {
        if (w != u) others[k++] = w;
      }
      if (placed[others[0]] && placed[others[1]] && !edge) edge = std::pair(others[0], others[1]);
      for (auto w : others) {
        if (placed[w] && !nb) nb = w;
      }
    }
    position[u] = p.order.size();
    p.order.push_back(u);
    p.anchor_edge.push_back(edge);
    p.anchor_vertex.push_back(nb);
    placed[u] = true;
    for (auto w : pi.link(u)) ++touches[w];
  }
  return p;
}

struct EmbedSearch {
  const Complex2& pattern;
  const Incidence& pi;
  const Incidence& host;
  std::size_t host_vertices;
  PatternPlan p;
  std::vector<std::optional<Vertex>> image;
  std::vector<bool> used;
  std::vector<Vertex> all_host;

  bool fits(std::size_t depth, Vertex u, Vertex w) const {
    if (used[w] || host.vertex_degree(w) < pi.vertex_degree(u)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex x = p.order[i];
      const std::size_t d = pi.edge_degree(u, x);
      if (d == 0) continue;
      if (host.edge_degree(w, *image[x]) < d) return false;
      for (auto y : pi.apexes(u, x)) {
        if (image[y] && !host.has_triangle(w, *image[x], *image[y])) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == p.order.size()) return true;
    const Vertex u = p.order[depth];
    const std::vector<Vertex>* candidates = &all_host;
    if (p.anchor_edge[depth]) {
      candidates = &host.apexes(*image[p.anchor_edge[depth]->first], *image[p.anchor_edge[depth]->second]);
    } else if (p.anchor_vertex[depth]) {
      candidates = &host.link(*image[*p.anchor_vertex[depth]]);
    }
    for (auto w : *candidates) {
      if (!fits(depth, u, w)) continue;
      image[u] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      image[u].reset();
      used[w] = false;
    }
    return false;
  }
};

void require_pattern(const Complex2& pattern) {
  if (pattern.face_count() == 0) throw std::invalid_argument("embedding pattern has no triangles");
  if (!is_pure(pattern)) throw std::invalid_argument("embedding pattern is not pure");
}

}  // namespace

std::optional<EmbeddingWitness> embeds(const Complex2& pattern, const Incidence& host, std::size_t host_vertices) {
  require_pattern(pattern);
  Incidence pi(pattern);
  EmbedSearch s{pattern, pi, host, host_vertices, plan(pattern, pi), {}, {}, {}};
  s.image.assign(pattern.n_vertices(), std::nullopt);
  s.used.assign(host_vertices, false);
  s.all_host.resize(host_vertices);
  std::iota(s.all_host.begin(), s.all_host.end(), Vertex{0});
  if (!s.extend(0)) return std::nullopt;
  EmbeddingWitness w;
  for (auto v : s.p.order) w.vertex_map[v] = *s.image[v];
  return w;
}

std::optional<EmbeddingWitness> embeds(const Complex2& pattern, const Complex2& host) {
  return embeds(pattern, Incidence(host), host.n_vertices());
}

bool is_valid_embedding(const Complex2& pattern, const Complex2& host, const EmbeddingWitness& w) {
  std::vector<Vertex> images;
  for (auto v : pattern.incident_vertices()) {
    auto it = w.vertex_map.find(v);
    if (it == w.vertex_map.end() || it->second >= host.n_vertices()) return false;
    images.push_back(it->second);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  for (const auto& t : pattern.triangles()) {
    auto a = w.vertex_map.at(t.a), b = w.vertex_map.at(t.b), c = w.vertex_map.at(t.c);
    if (!host.contains(make_triangle(a, b, c))) return false;
  }
  return true;
}

std::optional<CatalogMatch> contains_any(const Complex2& host, std::span<const Complex2> catalog) {
  std::vector<std::size_t> order(catalog.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return catalog[x].face_count() < catalog[y].face_count(); });
  if (host.face_count() == 0) return std::nullopt;
  Incidence hi(host);
  for (auto i : order) {
    if (catalog[i].face_count() > host.face_count()) continue;
    if (auto w = embeds(catalog[i], hi, host.n_vertices())) return CatalogMatch{i, std::move(*w)};
  }
  return std::nullopt;
}

std::optional<CatalogMatch> contains_any(const Complex2& host, std::span<const PseudoSurface> catalog) {
  std::vector<Complex2> complexes;
  complexes.reserve(catalog.size());
  for (const auto& s : catalog) complexes.push_back(s.complex);
  return contains_any(host, std::span<const Complex2>(complexes));
}

}  // namespace randcx
