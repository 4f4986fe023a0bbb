#include "randcx/catalog.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "randcx/collapse.hpp"
#include "randcx/embedding.hpp"
#include "randcx/isomorphism.hpp"

namespace randcx {

PseudoSurface s_k(std::size_t k) {
  std::vector<Triangle> tris{{0, 1, 2}};
  Vertex next = 3;
  for (std::size_t step = 0; step < k; ++step) {
    auto current = Complex2::from_triangles(next, tris);
    for (const auto& e : boundary(current)) tris.push_back(Triangle{e.a, e.b, next++});
  }
  return PseudoSurface{Complex2::from_triangles(next, std::move(tris)), Triangle{0, 1, 2}, k, 2};
}

MembershipCheck verify_membership(const PseudoSurface& s) {
  const auto& c = s.complex;
  auto fail = [](std::string why) { return MembershipCheck{false, std::move(why)}; };
  if (!c.contains(s.center)) return fail("center " + to_string(s.center) + " is not a triangle");
  if (!is_pure(c)) return fail("not pure");
  if (max_degree(c) > s.r) return fail("degree " + std::to_string(max_degree(c)) + " exceeds r = " + std::to_string(s.r));
  if (!is_strongly_connected(c)) return fail("not strongly connected");
  auto dist = dual_distances_from(c, *c.index_of(s.center));
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] > ExtNat(s.k)) {
      return fail("triangle " + to_string(c.triangles()[i]) + " at distance " + to_string(dist[i]) + " > k = " +
                  std::to_string(s.k));
    }
  }
  if (!is_closed(c)) {
    auto d = d_value(c, s.center);
    if (d != ExtNat(s.k)) return fail("boundary is nonempty and D(center) = " + to_string(d) + " != k");
  }
  return MembershipCheck{true, {}};
}

std::size_t catalog_face_bound(std::size_t k, std::size_t r) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max() / 4;
  std::size_t total = 1;
  std::size_t layer = 3 * (r - 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (layer > kMax || total > kMax) return kMax;
    total += layer;
    if (layer > kMax / (2 * (r - 1) + 1)) return kMax;
    layer *= 2 * (r - 1);
  }
  return total;
}

CatalogLimits default_limits(std::size_t k, std::size_t r) {
  auto f = catalog_face_bound(k, r);
  return CatalogLimits{f, f + 2};
}

namespace {

bool within_distance(const Complex2& c, std::size_t k) {
  auto dist = dual_distances_from(c, *c.index_of(Triangle{0, 1, 2}));
  return std::all_of(dist.begin(), dist.end(), [&](const ExtNat& d) { return d <= ExtNat(k); });
}

bool accepts(const Complex2& c, std::size_t k) {
  return is_closed(c) || d_value(c, Triangle{0, 1, 2}) == ExtNat(k);
}

}  // namespace

Catalog enumerate_l(std::size_t k, std::size_t r, std::optional<CatalogLimits> limits) {
  if (r < 2) throw std::invalid_argument("catalog degree cap r must be at least 2");
  const CatalogLimits lim = limits.value_or(default_limits(k, r));
  const Triangle center{0, 1, 2};

  Catalog out;
  out.k = k;
  out.r = r;

  std::set<CanonicalForm> level{canonical_form(Complex2::from_triangles(3, std::vector<Triangle>{center}), center)};
  while (!level.empty()) {
    std::set<CanonicalForm> next;
    for (const auto& state : level) {
      ++out.states_explored;
      const Complex2 c = state.to_complex();
      if (accepts(c, k)) out.members.push_back(PseudoSurface{c, center, k, r});

      const auto n = static_cast<Vertex>(c.n_vertices());
      for (const auto& [e, deg] : c.face_edges()) {
        if (deg >= r) continue;
        for (Vertex apex = 0; apex <= n; ++apex) {
          if (apex == e.a || apex == e.b) continue;
          const Triangle t = make_triangle(e.a, e.b, apex);
          if (apex < n && c.contains(t)) continue;
          const std::size_t verts = c.n_vertices() + (apex == n ? 1 : 0);
          std::vector<Triangle> tris = c.triangles();
          tris.push_back(t);
          auto grown = Complex2::from_triangles(verts, std::move(tris));
          if (max_degree(grown) > r || !within_distance(grown, k)) continue;
          if (grown.face_count() > lim.max_faces || verts > lim.max_vertices) {
            out.truncated = true;
            continue;
          }
          next.insert(canonical_form(grown, center));
        }
      }
    }
    level = std::move(next);
  }

  std::set<CanonicalForm> unanchored;
  for (const auto& m : out.members) unanchored.insert(canonical_form(m.complex));
  out.unanchored_count = unanchored.size();

  for (std::size_t i = 0; i < out.members.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < out.members.size() && minimal; ++j) {
      const auto& small = out.members[j].complex;
      if (small.face_count() < out.members[i].complex.face_count() && embeds(small, out.members[i].complex)) {
        minimal = false;
      }
    }
    if (minimal) out.minimal.push_back(i);
  }
  return out;
}

std::vector<Complex2> complexes_of(const Catalog& catalog) {
  std::vector<Complex2> out;
  out.reserve(catalog.members.size());
  for (const auto& m : catalog.members) out.push_back(m.complex);
  return out;
}

}  // namespace randcx
