#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "randcx/complex.hpp"
#include "randcx/rational.hpp"

namespace randcx {

enum class MuMethod { Exhaustive, BranchAndBound };

/// Minimum vertex/face density over nonempty face subsets, with a subset
/// attaining it. Witness vertices are those incident to the witness faces.
struct MuResult {
  Rational value;
  std::vector<Triangle> witness;
  MuMethod method = MuMethod::Exhaustive;
  // Search nodes (exhaustive: subsets visited).
  std::size_t nodes = 0;
};

// Face-subset sizes up to which mu_tilde enumerates every subset.
inline constexpr std::size_t kExhaustiveFaceLimit = 22;
inline constexpr std::size_t kExhaustiveHardLimit = 30;

// n_vertices / f, counting every vertex of the complex. Throws
// std::domain_error when f = 0.
Rational mu(const Complex2& c);

// Density of the subcomplex spanned by `faces`: incident vertices / |faces|.
Rational subset_density(std::span<const Triangle> faces);

MuResult mu_tilde(const Complex2& c);
// Gray-code enumeration of all nonempty face subsets; ties go to the
// lexicographically smallest sorted index list. Throws std::domain_error for
// f = 0 or f > kExhaustiveHardLimit.
MuResult mu_tilde_exhaustive(const Complex2& c);
// Exact branch and bound; the witness is the first optimum found.
MuResult mu_tilde_branch_and_bound(const Complex2& c);

bool is_balanced(const Complex2& c);

// Throws std::invalid_argument for an empty catalog.
Rational mu_tilde_max(std::span<const Complex2> catalog);

}  // namespace randcx
