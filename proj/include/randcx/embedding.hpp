#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "randcx/catalog.hpp"
#include "randcx/complex.hpp"
#include "randcx/incidence.hpp"
#include "randcx/isomorphism.hpp"

namespace randcx {

/// Injective map from the pattern's incident vertices into host vertices that
/// carries every pattern triangle onto a host triangle.
struct EmbeddingWitness {
  VertexMap vertex_map;
};

/// Backtracking search for a simplicial embedding of a pure, nonempty pattern.
/// Host edges outside triangles play no role. Throws std::invalid_argument for
/// a pattern that is not pure or has no triangles.
std::optional<EmbeddingWitness> embeds(const Complex2& pattern, const Complex2& host);
// Same search against a prebuilt host index, for repeated queries.
std::optional<EmbeddingWitness> embeds(const Complex2& pattern, const Incidence& host, std::size_t host_vertices);

// Checks injectivity, domain, and that triangles map to host triangles.
bool is_valid_embedding(const Complex2& pattern, const Complex2& host, const EmbeddingWitness& w);

struct CatalogMatch {
  std::size_t index = 0;  // position in the catalog as given
  EmbeddingWitness witness;
};

/// Tries catalog members in increasing face count (stable), returning the
/// first that embeds into host.
std::optional<CatalogMatch> contains_any(const Complex2& host, std::span<const PseudoSurface> catalog);
std::optional<CatalogMatch> contains_any(const Complex2& host, std::span<const Complex2> catalog);

}  // namespace randcx
