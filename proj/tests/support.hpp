#pragma once
// Brute-force oracles and random generators shared by the test binaries.
// Nothing here calls into the collapse, isomorphism, embedding or catalog
// code paths that it is used to check.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "randcx/complex.hpp"

namespace testsupport {

using randcx::Complex2;
using randcx::Triangle;
using randcx::Vertex;

using Tri = std::array<Vertex, 3>;

inline Tri sorted(Vertex a, Vertex b, Vertex c) {
  Tri t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

inline Complex2 make(std::size_t n, std::vector<Tri> tris) {
  std::vector<Triangle> ts;
  for (const auto& t : tris) ts.push_back(randcx::make_triangle(t[0], t[1], t[2]));
  return Complex2::from_triangles(n, std::move(ts));
}

inline std::vector<Tri> tris_of(const Complex2& c) {
  std::vector<Tri> out;
  for (const auto& t : c.triangles()) out.push_back({t.a, t.b, t.c});
  return out;
}

// Degree of every edge, counted directly from the triangle list.
inline std::map<std::pair<Vertex, Vertex>, int> naive_degrees(const std::vector<Tri>& tris) {
  std::map<std::pair<Vertex, Vertex>, int> deg;
  for (const auto& t : tris) {
    ++deg[{t[0], t[1]}];
    ++deg[{t[0], t[2]}];
    ++deg[{t[1], t[2]}];
  }
  return deg;
}

// Reference collapse: per step, drop every triangle with a degree-1 edge.
// Returns, for each input triangle, the step at which it is removed (its D
// value), or -1 when it survives into a closed residue.
inline std::map<Tri, int> naive_d_values(std::vector<Tri> tris) {
  std::map<Tri, int> d;
  for (const auto& t : tris) d[t] = -1;
  for (int step = 0; !tris.empty(); ++step) {
    auto deg = naive_degrees(tris);
    std::vector<Tri> keep;
    for (const auto& t : tris) {
      const bool free = deg[{t[0], t[1]}] == 1 || deg[{t[0], t[2]}] == 1 || deg[{t[1], t[2]}] == 1;
      if (free) {
        d[t] = step;
      } else {
        keep.push_back(t);
      }
    }
    if (keep.size() == tris.size()) break;
    tris = std::move(keep);
  }
  return d;
}

// Smallest k with the complex collapsing to a graph in k steps, or -1.
inline int naive_collapse_number(const std::vector<Tri>& tris) {
  int best = 0;
  for (const auto& [t, d] : naive_d_values(tris)) {
    if (d < 0) return -1;
    best = std::max(best, d + 1);
  }
  return best;
}

inline std::vector<Vertex> used_vertices(const std::vector<Tri>& tris) {
  std::set<Vertex> s;
  for (const auto& t : tris) s.insert(t.begin(), t.end());
  return {s.begin(), s.end()};
}

inline std::set<Tri> image(const std::vector<Tri>& tris, const std::map<Vertex, Vertex>& f) {
  std::set<Tri> out;
  for (const auto& t : tris) out.insert(sorted(f.at(t[0]), f.at(t[1]), f.at(t[2])));
  return out;
}

// Tries every bijection between the used vertex sets. With an anchor, the
// bijection must carry anchor triangle a onto b.
inline bool brute_isomorphic(const Complex2& x, const Complex2& y, std::optional<std::pair<Tri, Tri>> anchor = {}) {
  const auto tx = tris_of(x), ty = tris_of(y);
  if (tx.size() != ty.size()) return false;
  const auto vx = used_vertices(tx);
  auto vy = used_vertices(ty);
  if (vx.size() != vy.size()) return false;
  // Cheap necessary condition before the factorial loop.
  auto profile = [](const std::vector<Tri>& ts) {
    std::vector<int> edge_deg, vert_deg;
    for (const auto& [e, d] : naive_degrees(ts)) edge_deg.push_back(d);
    std::map<Vertex, int> vd;
    for (const auto& t : ts) {
      for (auto v : t) ++vd[v];
    }
    for (const auto& [v, d] : vd) vert_deg.push_back(d);
    std::sort(edge_deg.begin(), edge_deg.end());
    std::sort(vert_deg.begin(), vert_deg.end());
    return std::pair{edge_deg, vert_deg};
  };
  if (profile(tx) != profile(ty)) return false;
  const std::set<Tri> target(ty.begin(), ty.end());
  do {
    std::map<Vertex, Vertex> f;
    for (std::size_t i = 0; i < vx.size(); ++i) f[vx[i]] = vy[i];
    if (anchor) {
      const auto& [a, b] = *anchor;
      if (sorted(f[a[0]], f[a[1]], f[a[2]]) != b) continue;
    }
    if (image(tx, f) == target) return true;
  } while (std::next_permutation(vy.begin(), vy.end()));
  return false;
}

// Every injective map from the pattern's used vertices into 0..host_n-1.
inline bool brute_embeds(const Complex2& pattern, const Complex2& host) {
  const auto tp = tris_of(pattern);
  const auto th = tris_of(host);
  const std::set<Tri> host_set(th.begin(), th.end());
  const auto vp = used_vertices(tp);
  const std::size_t n = host.n_vertices();
  if (vp.size() > n) return false;
  std::vector<Vertex> img(vp.size());
  std::vector<bool> taken(n, false);
  std::map<Vertex, Vertex> f;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == vp.size()) {
      for (const auto& t : tp) {
        if (!host_set.count(sorted(f[t[0]], f[t[1]], f[t[2]]))) return false;
      }
      return true;
    }
    for (Vertex h = 0; h < n; ++h) {
      if (taken[h]) continue;
      taken[h] = true;
      f[vp[i]] = h;
      if (self(self, i + 1)) return true;
      taken[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

// Catalog oracle for k <= 1, built directly from the membership conditions.
// With dual radius <= 1 every non-center triangle shares an edge with the
// center (0,1,2), so a labeled member is the center plus a choice of apex
// vertices over each center edge. Up to relabeling that fixes the center, a
// member is determined by the multiset of "signatures" (which center edges
// an apex vertex is attached to), minimized over the 6 center permutations.
// Returns {anchored type count, unanchored type count}; the unanchored count
// is computed by brute-force isomorphism over the anchored representatives.
struct OracleCatalog {
  std::size_t anchored = 0;
  std::size_t unanchored = 0;
  std::vector<Complex2> members;
};

inline OracleCatalog brute_catalog_k01(std::size_t k, std::size_t r) {
  OracleCatalog out;
  if (k == 0) {
    out.anchored = out.unanchored = 1;
    out.members.push_back(make(3, {{0, 1, 2}}));
    return out;
  }
  // Center edges: 0 = {0,1}, 1 = {0,2}, 2 = {1,2}. Each apex vertex picks a
  // nonempty subset of center edges (bitmask 1..7); edge load must stay <= r-1.
  const std::size_t max_apex = 3 * (r - 1);
  const std::array<std::array<Vertex, 2>, 3> center_edges{{{0, 1}, {0, 2}, {1, 2}}};
  std::set<std::vector<int>> seen;
  std::vector<int> sig;

  auto build = [&](const std::vector<int>& s) {
    std::vector<Tri> tris{{0, 1, 2}};
    Vertex v = 3;
    for (int mask : s) {
      for (int e = 0; e < 3; ++e) {
        if (mask & (1 << e)) tris.push_back(sorted(center_edges[e][0], center_edges[e][1], v));
      }
      ++v;
    }
    return tris;
  };
  // Image of a signature mask under a permutation of the center vertices.
  auto permute_mask = [&](int mask, const std::array<Vertex, 3>& perm) {
    int m = 0;
    for (int e = 0; e < 3; ++e) {
      if (!(mask & (1 << e))) continue;
      std::array<Vertex, 2> pe{perm[center_edges[e][0]], perm[center_edges[e][1]]};
      std::sort(pe.begin(), pe.end());
      for (int f = 0; f < 3; ++f) {
        if (center_edges[f] == pe) m |= 1 << f;
      }
    }
    return m;
  };
  auto canonical = [&](const std::vector<int>& s) {
    std::vector<int> best;
    std::array<Vertex, 3> perm{0, 1, 2};
    do {
      std::vector<int> t;
      for (int m : s) t.push_back(permute_mask(m, perm));
      std::sort(t.begin(), t.end());
      if (best.empty() || t < best) best = t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  auto accept = [&](const std::vector<int>& s) {
    const auto tris = build(s);
    auto deg = naive_degrees(tris);
    for (const auto& [e, d] : deg) {
      if (d > static_cast<int>(r)) return;
    }
    bool closed = true;
    for (const auto& [e, d] : deg) closed = closed && d >= 2;
    // Condition (b): D(center) = 1 unless closed.
    if (!closed && naive_d_values(tris)[Tri{0, 1, 2}] != 1) return;
    if (!seen.insert(canonical(s)).second) return;
    out.members.push_back(make(3 + s.size(), tris));
  };
  // Enumerate labeled choices: apex vertices 3, 4, ... with nondecreasing
  // masks (labels of apexes are interchangeable, so this is the full set up
  // to apex relabeling; center relabeling is quotiented by `canonical`).
  auto rec = [&](auto&& self, int min_mask, std::array<std::size_t, 3> load) -> void {
    accept(sig);
    if (sig.size() == max_apex) return;
    for (int m = min_mask; m <= 7; ++m) {
      auto next = load;
      bool ok = true;
      for (int e = 0; e < 3; ++e) {
        if (m & (1 << e)) ok = ok && ++next[e] <= r - 1;
      }
      if (!ok) continue;
      sig.push_back(m);
      self(self, m, next);
      sig.pop_back();
    }
  };
  rec(rec, 1, {0, 0, 0});
  out.anchored = out.members.size();

  std::vector<Complex2> reps;
  for (const auto& m : out.members) {
    bool dup = false;
    for (const auto& rep : reps) dup = dup || brute_isomorphic(m, rep);
    if (!dup) reps.push_back(m);
  }
  out.unanchored = reps.size();
  return out;
}

// Random complex with each triangle on n vertices kept with probability p.
inline Complex2 random_complex(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Tri> tris;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (keep(rng)) tris.push_back({a, b, c});
      }
    }
  }
  return make(n, tris);
}

// Random complex on n vertices with maximum edge degree <= r, grown by
// adding random triangles that keep the cap.
inline Complex2 random_capped(std::mt19937_64& rng, std::size_t n, std::size_t r, std::size_t target) {
  std::vector<Tri> all;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) all.push_back({a, b, c});
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::map<std::pair<Vertex, Vertex>, std::size_t> deg;
  std::vector<Tri> tris;
  for (const auto& t : all) {
    if (tris.size() == target) break;
    const std::array<std::pair<Vertex, Vertex>, 3> es{{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
    if (std::any_of(es.begin(), es.end(), [&](const auto& e) { return deg[e] >= r; })) continue;
    for (const auto& e : es) ++deg[e];
    tris.push_back(t);
  }
  return make(n, tris);
}

// Complex obtained by renaming vertex v to perm[v].
inline Complex2 relabel(const Complex2& c, const std::vector<Vertex>& perm) {
  std::vector<Tri> tris;
  for (const auto& t : c.triangles()) tris.push_back(sorted(perm[t.a], perm[t.b], perm[t.c]));
  return make(c.n_vertices(), tris);
}

inline std::vector<Vertex> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Random subcomplex: each triangle kept with probability q.
inline Complex2 random_subcomplex(std::mt19937_64& rng, const Complex2& c, double q) {
  std::bernoulli_distribution keep(q);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.face_count(); ++i) {
    if (keep(rng)) idx.push_back(i);
  }
  return c.restricted_to(idx);
}

}  // namespace testsupport
