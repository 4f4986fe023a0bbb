#include "randcx/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "randcx/gf2.hpp"

namespace randcx {

Vertex Triangle::apex(const Edge& e) const {
  if (!has_edge(e)) throw std::invalid_argument("edge " + to_string(e) + " is not in " + to_string(*this));
  if (a != e.a && a != e.b) return a;
  if (b != e.a && b != e.b) return b;
  return c;
}

Edge make_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("degenerate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  return u < v ? Edge{u, v} : Edge{v, u};
}

Triangle make_triangle(Vertex u, Vertex v, Vertex w) {
  if (u == v || v == w || u == w) {
    throw std::invalid_argument("degenerate triangle (" + std::to_string(u) + "," + std::to_string(v) + "," +
                                std::to_string(w) + ")");
  }
  std::array<Vertex, 3> s{u, v, w};
  std::sort(s.begin(), s.end());
  return Triangle{s[0], s[1], s[2]};
}

std::string to_string(const Edge& e) { return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")"; }

std::string to_string(const Triangle& t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
}

std::size_t ExtNat::value() const {
  if (!value_) throw std::logic_error("value() of infinite ExtNat");
  return *value_;
}

std::string to_string(const ExtNat& x) { return x.is_finite() ? std::to_string(x.value()) : std::string("inf"); }

// ---------------------------------------------------------------------------

Complex2 Complex2::from_triangles(std::size_t n_vertices, std::span<const std::array<Vertex, 3>> triangles,
                                  std::span<const std::array<Vertex, 2>> extra_edges) {
  std::vector<Triangle> tris;
  tris.reserve(triangles.size());
  for (const auto& t : triangles) tris.push_back(make_triangle(t[0], t[1], t[2]));
  std::vector<Edge> extras;
  extras.reserve(extra_edges.size());
  for (const auto& e : extra_edges) extras.push_back(make_edge(e[0], e[1]));
  return from_triangles(n_vertices, std::move(tris), std::move(extras));
}

Complex2 Complex2::from_triangles(std::size_t n_vertices, std::vector<Triangle> triangles,
                                  std::vector<Edge> extra_edges) {
  Complex2 c;
  c.n_vertices_ = n_vertices;
  for (auto& t : triangles) {
    t = make_triangle(t.a, t.b, t.c);
    if (t.c >= n_vertices) {
      throw std::out_of_range("triangle " + to_string(t) + " uses a vertex >= " + std::to_string(n_vertices));
    }
  }
  for (auto& e : extra_edges) {
    e = make_edge(e.a, e.b);
    if (e.b >= n_vertices) {
      throw std::out_of_range("edge " + to_string(e) + " uses a vertex >= " + std::to_string(n_vertices));
    }
  }
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
  c.triangles_ = std::move(triangles);
  c.index_edges();

  std::sort(extra_edges.begin(), extra_edges.end());
  extra_edges.erase(std::unique(extra_edges.begin(), extra_edges.end()), extra_edges.end());
  std::erase_if(extra_edges, [&](const Edge& e) { return c.has_edge(e); });
  c.extra_edges_ = std::move(extra_edges);
  return c;
}

Complex2 Complex2::with_full_skeleton(std::size_t n_vertices, std::vector<Triangle> triangles) {
  Complex2 c = from_triangles(n_vertices, std::move(triangles));
  c.full_skeleton_ = true;
  return c;
}

void Complex2::index_edges() {
  std::vector<Edge> all;
  all.reserve(triangles_.size() * 3);
  for (const auto& t : triangles_) {
    for (const auto& e : t.edges()) all.push_back(e);
  }
  std::sort(all.begin(), all.end());
  face_edges_.clear();
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    face_edges_.emplace_back(all[i], j - i);
    i = j;
  }
}

std::vector<Edge> Complex2::extra_edges() const {
  if (!full_skeleton_) return extra_edges_;
  std::vector<Edge> out;
  auto it = face_edges_.begin();
  for (Vertex i = 0; i < n_vertices_; ++i) {
    for (Vertex j = i + 1; j < n_vertices_; ++j) {
      if (it != face_edges_.end() && it->first == Edge{i, j}) {
        ++it;
      } else {
        out.push_back(Edge{i, j});
      }
    }
  }
  return out;
}

std::vector<Edge> Complex2::edges() const {
  std::vector<Edge> out = extra_edges();
  for (const auto& [e, d] : face_edges_) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Complex2::edge_count() const {
  if (full_skeleton_) return n_vertices_ * (n_vertices_ - (n_vertices_ > 0 ? 1 : 0)) / 2;
  return face_edges_.size() + extra_edges_.size();
}

bool Complex2::contains(const Triangle& t) const { return std::binary_search(triangles_.begin(), triangles_.end(), t); }

std::optional<std::size_t> Complex2::index_of(const Triangle& t) const {
  auto it = std::lower_bound(triangles_.begin(), triangles_.end(), t);
  if (it == triangles_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - triangles_.begin());
}

namespace {
const std::pair<Edge, std::size_t>* find_face_edge(const std::vector<std::pair<Edge, std::size_t>>& v, const Edge& e) {
  auto it = std::lower_bound(v.begin(), v.end(), e, [](const auto& p, const Edge& x) { return p.first < x; });
  if (it == v.end() || it->first != e) return nullptr;
  return &*it;
}
}  // namespace

bool Complex2::has_edge(const Edge& e) const {
  if (find_face_edge(face_edges_, e) != nullptr) return true;
  if (full_skeleton_) return e.a < e.b && e.b < n_vertices_;
  return std::binary_search(extra_edges_.begin(), extra_edges_.end(), e);
}

std::size_t Complex2::edge_degree(const Edge& e) const {
  if (const auto* p = find_face_edge(face_edges_, e)) return p->second;
  if (has_edge(e)) return 0;
  throw std::invalid_argument("edge " + to_string(e) + " is not in the complex");
}

std::vector<Vertex> Complex2::incident_vertices() const {
  std::vector<Vertex> out;
  for (const auto& t : triangles_) {
    out.push_back(t.a);
    out.push_back(t.b);
    out.push_back(t.c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Complex2 Complex2::restricted_to(std::span<const std::size_t> triangle_indices) const {
  std::vector<Triangle> tris;
  tris.reserve(triangle_indices.size());
  for (auto i : triangle_indices) tris.push_back(triangles_.at(i));
  return from_triangles(n_vertices_, std::move(tris));
}

// ---------------------------------------------------------------------------

std::size_t edge_degree(const Complex2& c, const Edge& e) { return c.edge_degree(e); }

std::vector<Edge> boundary(const Complex2& c) {
  std::vector<Edge> out;
  for (const auto& [e, d] : c.face_edges()) {
    if (d == 1) out.push_back(e);
  }
  return out;
}

Complex2 pure_part(const Complex2& c) { return Complex2::from_triangles(c.n_vertices(), c.triangles()); }

std::vector<std::vector<std::size_t>> dual_adjacency(const Complex2& c) {
  const auto& tris = c.triangles();
  std::map<Edge, std::vector<std::size_t>> by_edge;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (const auto& e : tris[i].edges()) by_edge[e].push_back(i);
  }
  std::vector<std::vector<std::size_t>> adj(tris.size());
  for (const auto& [e, members] : by_edge) {
    for (auto i : members) {
      for (auto j : members) {
        if (i != j) adj[i].push_back(j);
      }
    }
  }
  // Two distinct triangles share at most one edge, so no duplicates arise.
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

namespace {
std::vector<ExtNat> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t source) {
  std::vector<ExtNat> dist(adj.size(), ExtNat::infinity());
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto w : adj[u]) {
      if (dist[w].is_infinite()) {
        dist[w] = dist[u].value() + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t require_index(const Complex2& c, const Triangle& t) {
  auto i = c.index_of(t);
  if (!i) throw std::invalid_argument("triangle " + to_string(t) + " is not in the complex");
  return *i;
}
}  // namespace

std::vector<ExtNat> dual_distances_from(const Complex2& c, std::size_t source_index) {
  if (source_index >= c.face_count()) throw std::out_of_range("triangle index out of range");
  return bfs(dual_adjacency(c), source_index);
}

ExtNat dual_distance(const Complex2& c, const Triangle& from, const Triangle& to) {
  auto s = require_index(c, from);
  auto t = require_index(c, to);
  return dual_distances_from(c, s)[t];
}

ExtNat diameter(const Complex2& c) {
  if (c.face_count() == 0) throw std::invalid_argument("diameter of a complex without triangles");
  auto adj = dual_adjacency(c);
  ExtNat best = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    for (const auto& d : bfs(adj, s)) {
      if (d.is_infinite()) return ExtNat::infinity();
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_strongly_connected(const Complex2& c) {
  if (c.face_count() == 0) throw std::invalid_argument("strong connectivity of a complex without triangles");
  auto dist = dual_distances_from(c, 0);
  return std::all_of(dist.begin(), dist.end(), [](const ExtNat& d) { return d.is_finite(); });
}

bool is_pure(const Complex2& c) { return c.edge_count() == c.face_edges().size(); }

bool is_closed(const Complex2& c) { return boundary(c).empty(); }

std::size_t max_degree(const Complex2& c) {
  std::size_t m = 0;
  for (const auto& [e, d] : c.face_edges()) m = std::max(m, d);
  return m;
}

bool is_pseudo_surface(const Complex2& c, std::size_t r) {
  if (c.face_count() == 0) return false;
  return is_pure(c) && max_degree(c) <= r && is_strongly_connected(c);
}

std::int64_t euler_characteristic(const Complex2& c) {
  return static_cast<std::int64_t>(c.n_vertices()) - static_cast<std::int64_t>(c.edge_count()) +
         static_cast<std::int64_t>(c.face_count());
}

namespace {
gf2::Matrix boundary_matrix(const Complex2& c) {
  const auto& fe = c.face_edges();
  gf2::Matrix m(c.face_count(), fe.size());
  for (std::size_t i = 0; i < c.face_count(); ++i) {
    for (const auto& e : c.triangles()[i].edges()) {
      auto it = std::lower_bound(fe.begin(), fe.end(), e, [](const auto& p, const Edge& x) { return p.first < x; });
      m.row(i).set(static_cast<std::size_t>(it - fe.begin()));
    }
  }
  return m;
}
}  // namespace

std::size_t h2_rank_mod2(const Complex2& c) { return c.face_count() - gf2::rank(boundary_matrix(c)); }

std::vector<std::size_t> minimal_mod2_cycle(const Complex2& c) {
  auto kernel = left_kernel(boundary_matrix(c));
  if (kernel.empty()) return {};
  std::vector<std::size_t> support = kernel.front().set_bits();
  // Shrink the support until dropping any single face kills every cycle.
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t drop = 0; drop < support.size(); ++drop) {
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < support.size(); ++i) {
        if (i != drop) rest.push_back(support[i]);
      }
      auto sub = c.restricted_to(rest);
      auto sub_kernel = left_kernel(boundary_matrix(sub));
      if (sub_kernel.empty()) continue;
      std::vector<std::size_t> next;
      for (auto bit : sub_kernel.front().set_bits()) next.push_back(rest[bit]);
      support = std::move(next);
      shrunk = true;
      break;
    }
  }
  return support;
}

// ---------------------------------------------------------------------------

Complex2 single_triangle() { return Complex2::from_triangles(3, std::vector<Triangle>{{0, 1, 2}}); }

Complex2 tetrahedron_boundary() {
  return Complex2::from_triangles(4, std::vector<Triangle>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Complex2 octahedron_boundary() {
  // Antipodal pairs {0,1}, {2,3}, {4,5}; a face picks one vertex from each.
  std::vector<Triangle> tris;
  for (Vertex x : {0U, 1U}) {
    for (Vertex y : {2U, 3U}) {
      for (Vertex z : {4U, 5U}) tris.push_back(make_triangle(x, y, z));
    }
  }
  return Complex2::from_triangles(6, std::move(tris));
}

Complex2 seven_vertex_torus() {
  std::vector<Triangle> tris;
  for (Vertex i = 0; i < 7; ++i) {
    tris.push_back(make_triangle(i, (i + 1) % 7, (i + 3) % 7));
    tris.push_back(make_triangle(i, (i + 2) % 7, (i + 3) % 7));
  }
  return Complex2::from_triangles(7, std::move(tris));
}

Complex2 full_two_skeleton(std::size_t n) {
  std::vector<Triangle> tris;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (Vertex k = j + 1; k < n; ++k) tris.push_back(Triangle{i, j, k});
    }
  }
  return Complex2::from_triangles(n, std::move(tris));
}

}  // namespace randcx
