#pragma once

#include <cstddef>
#include <vector>

#include "randcx/complex.hpp"

namespace randcx {

enum class TerminalKind { Graph, ClosedResidue };

/// How a collapse sequence ends. For Graph, `step` is the number of collapse
/// steps performed before no triangle remained; for ClosedResidue it is the
/// index of the first stage with no free triangle.
struct Terminal {
  TerminalKind kind = TerminalKind::Graph;
  std::size_t step = 0;

  friend bool operator==(const Terminal&, const Terminal&) = default;
};

/// Full history of simultaneous free-triangle removal.
///
/// stages[i] holds the triangles of the i-th pure part; stages.front() is the
/// input and stages.back() is empty (Graph) or the closed residue.
/// d_values is aligned with `triangles` (the input's sorted triangle list).
struct CollapseTrace {
  std::vector<Triangle> triangles;
  std::vector<std::vector<Triangle>> stages;
  std::vector<ExtNat> d_values;
  Terminal terminal;

  // Throws std::invalid_argument when t is not a triangle of the input.
  ExtNat d_value(const Triangle& t) const;
  // collapse number: steps until no triangle remains, infinite for a closed residue.
  ExtNat collapse_number() const;
};

/// Pure part after removing every triangle that has an edge of degree one.
Complex2 collapse_step(const Complex2& c);

/// One collapse step on the full complex: each free triangle goes together
/// with its lexicographically smallest free edge; all other edges are kept as
/// extra edges.
Complex2 collapse_step_full(const Complex2& c);

CollapseTrace collapse_sequence(const Complex2& c);

// D(σ): the last stage containing σ. Throws std::invalid_argument if absent.
ExtNat d_value(const Complex2& c, const Triangle& sigma);

// True iff no triangle survives k steps.
bool is_collapsible(const Complex2& c, std::size_t k);
ExtNat collapse_number(const Complex2& c);

/// σ_0, ..., σ_k = σ with D(σ_i) = i and consecutive triangles sharing an edge.
struct CollapsingPath {
  std::vector<Triangle> simplices;

  friend bool operator==(const CollapsingPath&, const CollapsingPath&) = default;
};

struct PathEnumeration {
  std::vector<CollapsingPath> paths;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultPathLimit = 1'000'000;

// Throws std::domain_error when D(σ) is infinite (no collapsing path exists)
// and std::invalid_argument for limit == 0.
PathEnumeration collapsing_paths(const Complex2& c, const Triangle& sigma, std::size_t limit = kDefaultPathLimit);

/// Boundary edges of the initial triangles of all collapsing paths ending at σ.
/// Empty when D(σ) is infinite. Computed by reachability over D-levels, so it
/// never depends on the path limit.
std::vector<Edge> accessible_boundary(const Complex2& c, const Triangle& sigma);

/// Restriction of accessible_boundary to paths whose last step crosses edge e
/// of σ. Throws std::domain_error when D(σ) = 0 and std::invalid_argument if e
/// is not an edge of σ. Empty when D(σ) is infinite.
std::vector<Edge> accessible_boundary_via(const Complex2& c, const Triangle& sigma, const Edge& e);

}  // namespace randcx
