#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "randcx/complex.hpp"

namespace randcx {

/// Centered r-pseudo-surface claimed to belong to the forbidden catalog for
/// step budget k and degree cap r.
struct PseudoSurface {
  Complex2 complex;
  Triangle center;
  std::size_t k = 0;
  std::size_t r = 2;
};

/// Star surface grown k times from a single triangle by attaching a triangle
/// with a fresh apex to every boundary edge. Has 3·2^k vertices and
/// 3·2^k − 2 faces; the center is (0,1,2).
PseudoSurface s_k(std::size_t k);

struct MembershipCheck {
  bool ok = false;
  std::string diagnostic;  // first failed condition, empty when ok
};

/// Re-derives every catalog condition from scratch: pure, strongly
/// connected, degree <= r, every triangle within dual distance k of the center,
/// and D(center) = k unless the surface is closed.
MembershipCheck verify_membership(const PseudoSurface& s);

struct CatalogLimits {
  std::size_t max_faces = 0;
  std::size_t max_vertices = 0;
};

/// Face bound implied by the distance and degree conditions:
/// 1 + 3(r−1)·Σ_{i<k} (2(r−1))^i, saturating on overflow.
std::size_t catalog_face_bound(std::size_t k, std::size_t r);
// max_faces = catalog_face_bound(k, r), max_vertices = max_faces + 2.
CatalogLimits default_limits(std::size_t k, std::size_t r);

struct Catalog {
  std::size_t k = 0;
  std::size_t r = 2;
  // One representative per center-preserving isomorphism type, ordered by
  // face count then canonical form. Members are relabeled with center (0,1,2).
  std::vector<PseudoSurface> members;
  // Set when some growth state was dropped for exceeding the limits.
  bool truncated = false;
  // Number of types when the center is forgotten.
  std::size_t unanchored_count = 0;
  // Indices of members into which no member with fewer faces embeds.
  std::vector<std::size_t> minimal;
  std::size_t states_explored = 0;
};

/// Breadth-first growth from the center: attach triangles along edges of
/// degree < r with a fresh or existing apex, pruning degree and distance
/// violations, deduplicating by anchored canonical form.
///
/// Throws std::invalid_argument for r < 2.
Catalog enumerate_l(std::size_t k, std::size_t r, std::optional<CatalogLimits> limits = std::nullopt);

std::vector<Complex2> complexes_of(const Catalog& catalog);

}  // namespace randcx
