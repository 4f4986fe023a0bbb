#include "randcx/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "randcx/incidence.hpp"

namespace randcx {

namespace {

// Pure part relabeled onto 0..m-1 with per-vertex triangle lists.
struct LocalComplex {
  std::vector<Vertex> original;  // local -> original vertex
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<std::vector<std::size_t>> triangles_at;

  explicit LocalComplex(const Complex2& c) : original(c.incident_vertices()) {
    std::vector<std::size_t> local(c.n_vertices(), 0);
    for (std::size_t i = 0; i < original.size(); ++i) local[original[i]] = i;
    triangles_at.resize(original.size());
    for (const auto& t : c.triangles()) {
      triangles.push_back({local[t.a], local[t.b], local[t.c]});
      for (auto v : triangles.back()) triangles_at[v].push_back(triangles.size() - 1);
    }
  }
  std::size_t size() const { return original.size(); }
};

using Coloring = std::vector<std::size_t>;

template <typename Key>
std::size_t rank_by(const std::vector<Key>& keys, Coloring& out) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    out[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return sorted.size();
}

std::size_t count_colors(const Coloring& c) {
  std::vector<std::size_t> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

// Equitable refinement: split color classes by the multiset of colour pairs
// seen across incident triangles. Order-preserving, so label-invariant.
void refine(const LocalComplex& lc, Coloring& colors) {
  std::size_t classes = count_colors(colors);
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;
    std::vector<Signature> sig(lc.size());
    for (std::size_t v = 0; v < lc.size(); ++v) {
      sig[v].first = colors[v];
      for (auto ti : lc.triangles_at[v]) {
        std::array<std::size_t, 2> other{};
        std::size_t k = 0;
        for (auto w : lc.triangles[ti]) {
          if (w != v) other[k++] = colors[w];
        }
        sig[v].second.emplace_back(std::min(other[0], other[1]), std::max(other[0], other[1]));
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::size_t next = rank_by(sig, colors);
    if (next == classes) return;
    classes = next;
  }
}

struct CanonicalSearch {
  const LocalComplex& lc;
  std::optional<std::vector<Triangle>> best;

  void run(Coloring colors) {
    refine(lc, colors);
    // Target cell: smallest colour with more than one member.
    std::vector<std::size_t> count(lc.size(), 0);
    for (auto c : colors) ++count[c];
    std::size_t target = lc.size();
    for (std::size_t c = 0; c < count.size(); ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target == lc.size()) {
      leaf(colors);
      return;
    }
    for (std::size_t v = 0; v < lc.size(); ++v) {
      if (colors[v] != target) continue;
      std::vector<std::size_t> keys(lc.size());
      for (std::size_t w = 0; w < lc.size(); ++w) keys[w] = colors[w] * 2 + ((colors[w] == target && w != v) ? 1 : 0);
      Coloring next(lc.size());
      rank_by(keys, next);
      run(std::move(next));
    }
  }

  void leaf(const Coloring& labels) {
    std::vector<Triangle> tris;
    tris.reserve(lc.triangles.size());
    for (const auto& t : lc.triangles) {
      tris.push_back(make_triangle(static_cast<Vertex>(labels[t[0]]), static_cast<Vertex>(labels[t[1]]),
                                   static_cast<Vertex>(labels[t[2]])));
    }
    std::sort(tris.begin(), tris.end());
    if (!best || tris < *best) best = std::move(tris);
  }
};

void require_triangle(const Complex2& c, const Triangle& t) {
  if (!c.contains(t)) throw std::invalid_argument("anchor " + to_string(t) + " is not a triangle of the complex");
}

}  // namespace

CanonicalForm canonical_form(const Complex2& c, std::optional<Triangle> anchor) {
  if (anchor) require_triangle(c, *anchor);
  LocalComplex lc(c);
  std::vector<std::pair<int, std::size_t>> init(lc.size());
  for (std::size_t v = 0; v < lc.size(); ++v) {
    bool in_anchor = anchor && anchor->has_vertex(lc.original[v]);
    init[v] = {in_anchor ? 0 : 1, lc.triangles_at[v].size()};
  }
  Coloring colors(lc.size());
  rank_by(init, colors);
  CanonicalSearch search{lc, std::nullopt};
  search.run(std::move(colors));
  CanonicalForm out;
  out.n_vertices = lc.size();
  out.triangles = search.best.value_or(std::vector<Triangle>{});
  out.anchored = anchor.has_value();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct IsoSearch {
  const Complex2& a;
  const Complex2& b;
  Incidence ia;
  Incidence ib;
  std::vector<Vertex> order;
  std::vector<Vertex> b_vertices;
  std::vector<bool> a_anchor;  // indexed by original vertex
  std::vector<bool> b_anchor;
  std::vector<std::optional<Vertex>> image;
  std::vector<bool> b_used;

  IsoSearch(const Complex2& a_, const Complex2& b_) : a(a_), b(b_), ia(a_), ib(b_) {}

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex u = order[depth];
    for (auto w : b_vertices) {
      if (b_used[w] || ia.vertex_degree(u) != ib.vertex_degree(w) || a_anchor[u] != b_anchor[w]) continue;
      if (!consistent(u, w, depth)) continue;
      image[u] = w;
      b_used[w] = true;
      if (extend(depth + 1)) return true;
      image[u].reset();
      b_used[w] = false;
    }
    return false;
  }

  // Edge degrees and triangles among already-mapped vertices must agree in
  // both directions.
  bool consistent(Vertex u, Vertex w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex x = order[i];
      const Vertex fx = *image[x];
      if (ia.edge_degree(u, x) != ib.edge_degree(w, fx)) return false;
      for (std::size_t j = i + 1; j < depth; ++j) {
        const Vertex y = order[j];
        if (ia.has_triangle(u, x, y) != ib.has_triangle(w, fx, *image[y])) return false;
      }
    }
    return true;
  }
};

std::vector<std::size_t> sorted_vertex_degrees(const Complex2& c) {
  std::vector<std::size_t> deg(c.n_vertices(), 0);
  for (const auto& t : c.triangles()) {
    for (auto v : t.vertices()) ++deg[v];
  }
  std::erase(deg, 0);
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::vector<std::size_t> sorted_edge_degrees(const Complex2& c) {
  std::vector<std::size_t> out;
  for (const auto& [e, d] : c.face_edges()) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<VertexMap> are_isomorphic(const Complex2& a, const Complex2& b,
                                        std::optional<std::pair<Triangle, Triangle>> anchor) {
  if (anchor) {
    require_triangle(a, anchor->first);
    require_triangle(b, anchor->second);
  }
  if (a.face_count() != b.face_count()) return std::nullopt;
  if (sorted_vertex_degrees(a) != sorted_vertex_degrees(b)) return std::nullopt;
  if (sorted_edge_degrees(a) != sorted_edge_degrees(b)) return std::nullopt;

  IsoSearch s(a, b);
  s.b_vertices = b.incident_vertices();
  s.a_anchor.assign(a.n_vertices(), false);
  s.b_anchor.assign(b.n_vertices(), false);
  if (anchor) {
    for (auto v : anchor->first.vertices()) s.a_anchor[v] = true;
    for (auto v : anchor->second.vertices()) s.b_anchor[v] = true;
  }
  s.image.assign(a.n_vertices(), std::nullopt);
  s.b_used.assign(b.n_vertices(), false);

  // Anchor vertices first, then grow through the link of placed vertices,
  // preferring high triangle-incidence; ties by index.
  auto pending = a.incident_vertices();
  std::vector<bool> placed(a.n_vertices(), false);
  std::vector<std::size_t> touches(a.n_vertices(), 0);
  auto place = [&](Vertex v) {
    s.order.push_back(v);
    placed[v] = true;
    for (auto w : s.ia.link(v)) ++touches[w];
  };
  if (anchor) {
    for (auto v : anchor->first.vertices()) place(v);
  }
  while (s.order.size() < pending.size()) {
    std::optional<Vertex> pick;
    for (auto v : pending) {
      if (placed[v]) continue;
      if (!pick || std::pair(touches[v], s.ia.vertex_degree(v)) > std::pair(touches[*pick], s.ia.vertex_degree(*pick))) {
        pick = v;
      }
    }
    place(*pick);
  }

  if (!s.extend(0)) return std::nullopt;
  VertexMap out;
  for (auto v : s.order) out[v] = *s.image[v];
  return out;
}

}  // namespace randcx
