#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "randcx/complex.hpp"

namespace randcx {

using VertexMap = std::map<Vertex, Vertex>;

/// Isomorphism of pure parts: a bijection between the incident vertex sets
/// carrying triangles onto triangles. With an anchor (a_triangle, b_triangle)
/// the first triangle must map onto the second.
///
/// Throws std::invalid_argument when an anchor is not a triangle of its
/// complex.
std::optional<VertexMap> are_isomorphic(const Complex2& a, const Complex2& b,
                                        std::optional<std::pair<Triangle, Triangle>> anchor = std::nullopt);

/// Isomorphism-invariant relabeling of the pure part. Two complexes (with
/// anchors, if given) are isomorphic iff their canonical forms are equal. The
/// anchor, when present, is relabeled to (0,1,2).
struct CanonicalForm {
  std::size_t n_vertices = 0;
  std::vector<Triangle> triangles;
  bool anchored = false;

  auto operator<=>(const CanonicalForm&) const = default;

  Complex2 to_complex() const { return Complex2::from_triangles(n_vertices, triangles); }
};

CanonicalForm canonical_form(const Complex2& c, std::optional<Triangle> anchor = std::nullopt);

}  // namespace randcx
