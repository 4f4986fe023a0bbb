#include "randcx/collapse.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace randcx {

namespace {

// Triangle/edge incidence keyed by positions in c.triangles() and
// c.face_edges().
struct CollapseIndex {
  const Complex2& complex;
  std::vector<std::array<std::size_t, 3>> edges_of;          // triangle -> edge ids
  std::vector<std::vector<std::size_t>> triangles_on;        // edge id -> triangles

  explicit CollapseIndex(const Complex2& c) : complex(c), triangles_on(c.face_edges().size()) {
    const auto& fe = c.face_edges();
    edges_of.reserve(c.face_count());
    for (std::size_t i = 0; i < c.face_count(); ++i) {
      std::array<std::size_t, 3> ids{};
      auto es = c.triangles()[i].edges();
      for (std::size_t k = 0; k < 3; ++k) {
        auto it = std::lower_bound(fe.begin(), fe.end(), es[k], [](const auto& p, const Edge& x) { return p.first < x; });
        ids[k] = static_cast<std::size_t>(it - fe.begin());
        triangles_on[ids[k]].push_back(i);
      }
      edges_of.push_back(ids);
    }
  }

  const Edge& edge(std::size_t id) const { return complex.face_edges()[id].first; }
  std::size_t original_degree(std::size_t id) const { return complex.face_edges()[id].second; }
};

struct Levels {
  std::vector<std::vector<std::size_t>> stages;  // triangle indices per stage
  std::vector<ExtNat> d_values;
  Terminal terminal;
};

Levels compute_levels(const CollapseIndex& idx) {
  const std::size_t f = idx.edges_of.size();
  Levels out;
  out.d_values.assign(f, ExtNat::infinity());
  std::vector<std::size_t> degree(idx.triangles_on.size());
  for (std::size_t e = 0; e < degree.size(); ++e) degree[e] = idx.triangles_on[e].size();

  std::vector<std::size_t> alive(f);
  for (std::size_t i = 0; i < f; ++i) alive[i] = i;
  out.stages.push_back(alive);

  for (std::size_t step = 0;; ++step) {
    if (alive.empty()) {
      out.terminal = Terminal{TerminalKind::Graph, step};
      return out;
    }
    std::vector<std::size_t> free_now;
    std::vector<std::size_t> rest;
    for (auto t : alive) {
      const auto& es = idx.edges_of[t];
      bool is_free = degree[es[0]] == 1 || degree[es[1]] == 1 || degree[es[2]] == 1;
      (is_free ? free_now : rest).push_back(t);
    }
    if (free_now.empty()) {
      out.terminal = Terminal{TerminalKind::ClosedResidue, step};
      return out;
    }
    for (auto t : free_now) {
      out.d_values[t] = step;
      for (auto e : idx.edges_of[t]) --degree[e];
    }
    alive = std::move(rest);
    out.stages.push_back(alive);
  }
}

std::size_t require_index(const Complex2& c, const Triangle& t) {
  auto i = c.index_of(t);
  if (!i) throw std::invalid_argument("triangle " + to_string(t) + " is not in the complex");
  return *i;
}

// Triangles one D-level below `t` sharing edge `edge_id` with it.
template <typename Fn>
void for_each_lower_neighbour(const CollapseIndex& idx, const std::vector<ExtNat>& d, std::size_t t,
                              std::size_t edge_id, Fn&& fn) {
  const std::size_t level = d[t].value();
  for (auto s : idx.triangles_on[edge_id]) {
    if (s != t && d[s].is_finite() && d[s].value() + 1 == level) fn(s);
  }
}

std::vector<Edge> boundary_edges_of_sources(const CollapseIndex& idx, const std::vector<ExtNat>& d,
                                            std::vector<std::size_t> frontier) {
  // Walk down the level DAG; every reached triangle of level 0 contributes its
  // degree-one edges.
  std::vector<bool> seen(idx.edges_of.size(), false);
  for (auto t : frontier) seen[t] = true;
  std::vector<Edge> out;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto t : frontier) {
      if (d[t].value() == 0) {
        for (auto e : idx.edges_of[t]) {
          if (idx.original_degree(e) == 1) out.push_back(idx.edge(e));
        }
        continue;
      }
      for (auto e : idx.edges_of[t]) {
        for_each_lower_neighbour(idx, d, t, e, [&](std::size_t s) {
          if (!seen[s]) {
            seen[s] = true;
            next.push_back(s);
          }
        });
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ExtNat CollapseTrace::d_value(const Triangle& t) const {
  auto it = std::lower_bound(triangles.begin(), triangles.end(), t);
  if (it == triangles.end() || *it != t) throw std::invalid_argument("triangle " + to_string(t) + " is not in the complex");
  return d_values[static_cast<std::size_t>(it - triangles.begin())];
}

ExtNat CollapseTrace::collapse_number() const {
  if (terminal.kind == TerminalKind::ClosedResidue) return ExtNat::infinity();
  return terminal.step;
}

Complex2 collapse_step(const Complex2& c) {
  std::vector<Triangle> keep;
  for (const auto& t : c.triangles()) {
    bool is_free = false;
    for (const auto& e : t.edges()) is_free = is_free || c.edge_degree(e) == 1;
    if (!is_free) keep.push_back(t);
  }
  return Complex2::from_triangles(c.n_vertices(), std::move(keep));
}

Complex2 collapse_step_full(const Complex2& c) {
  std::vector<Triangle> keep;
  std::vector<Edge> dropped;
  for (const auto& t : c.triangles()) {
    std::optional<Edge> first_free;
    for (const auto& e : t.edges()) {
      if (!first_free && c.edge_degree(e) == 1) first_free = e;
    }
    if (first_free) {
      dropped.push_back(*first_free);
    } else {
      keep.push_back(t);
    }
  }
  std::sort(dropped.begin(), dropped.end());
  std::vector<Edge> edges;
  for (const auto& e : c.edges()) {
    if (!std::binary_search(dropped.begin(), dropped.end(), e)) edges.push_back(e);
  }
  return Complex2::from_triangles(c.n_vertices(), std::move(keep), std::move(edges));
}

CollapseTrace collapse_sequence(const Complex2& c) {
  CollapseIndex idx(c);
  Levels lv = compute_levels(idx);
  CollapseTrace trace;
  trace.triangles = c.triangles();
  for (const auto& stage : lv.stages) {
    std::vector<Triangle> tris;
    tris.reserve(stage.size());
    for (auto i : stage) tris.push_back(c.triangles()[i]);
    trace.stages.push_back(std::move(tris));
  }
  trace.d_values = std::move(lv.d_values);
  trace.terminal = lv.terminal;
  return trace;
}

ExtNat d_value(const Complex2& c, const Triangle& sigma) {
  auto i = require_index(c, sigma);
  return compute_levels(CollapseIndex(c)).d_values[i];
}

bool is_collapsible(const Complex2& c, std::size_t k) {
  auto n = collapse_number(c);
  return n.is_finite() && n.value() <= k;
}

ExtNat collapse_number(const Complex2& c) {
  auto lv = compute_levels(CollapseIndex(c));
  if (lv.terminal.kind == TerminalKind::ClosedResidue) return ExtNat::infinity();
  return lv.terminal.step;
}

PathEnumeration collapsing_paths(const Complex2& c, const Triangle& sigma, std::size_t limit) {
  if (limit == 0) throw std::invalid_argument("path limit must be at least 1");
  const auto target = require_index(c, sigma);
  CollapseIndex idx(c);
  const auto d = compute_levels(idx).d_values;
  if (d[target].is_infinite()) {
    throw std::domain_error("D" + to_string(sigma) + " is infinite; no collapsing path ends there");
  }

  PathEnumeration out;
  std::vector<std::size_t> stack{target};  // σ_k, σ_{k-1}, ... built backwards
  auto emit = [&] {
    CollapsingPath p;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) p.simplices.push_back(c.triangles()[*it]);
    out.paths.push_back(std::move(p));
  };
  // Depth-first over the level DAG; returns false once the limit is hit.
  auto descend = [&](auto&& self) -> bool {
    const auto t = stack.back();
    if (d[t].value() == 0) {
      if (out.paths.size() == limit) {
        out.truncated = true;
        return false;
      }
      emit();
      return true;
    }
    std::vector<std::size_t> lower;
    for (auto e : idx.edges_of[t]) for_each_lower_neighbour(idx, d, t, e, [&](std::size_t s) { lower.push_back(s); });
    std::sort(lower.begin(), lower.end());
    for (auto s : lower) {
      stack.push_back(s);
      bool more = self(self);
      stack.pop_back();
      if (!more) return false;
    }
    return true;
  };
  descend(descend);
  return out;
}

std::vector<Edge> accessible_boundary(const Complex2& c, const Triangle& sigma) {
  const auto target = require_index(c, sigma);
  CollapseIndex idx(c);
  const auto d = compute_levels(idx).d_values;
  if (d[target].is_infinite()) return {};
  return boundary_edges_of_sources(idx, d, {target});
}

std::vector<Edge> accessible_boundary_via(const Complex2& c, const Triangle& sigma, const Edge& e) {
  const auto target = require_index(c, sigma);
  if (!sigma.has_edge(e)) throw std::invalid_argument("edge " + to_string(e) + " is not an edge of " + to_string(sigma));
  CollapseIndex idx(c);
  const auto d = compute_levels(idx).d_values;
  if (d[target].is_infinite()) return {};
  if (d[target].value() == 0) throw std::domain_error("accessible boundary through an edge needs D >= 1");

  std::size_t edge_id = 0;
  for (auto id : idx.edges_of[target]) {
    if (idx.edge(id) == e) edge_id = id;
  }
  std::vector<std::size_t> first;
  for_each_lower_neighbour(idx, d, target, edge_id, [&](std::size_t s) { first.push_back(s); });
  if (first.empty()) return {};
  return boundary_edges_of_sources(idx, d, std::move(first));
}

}  // namespace randcx
