#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "randcx/complex.hpp"

namespace randcx {

/// Parameters of the random 2-complex on n vertices that keeps each triangle
/// independently with probability p on top of the full 1-skeleton.
struct ModelParams {
  std::size_t n = 3;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument unless n >= 3 and 0 <= p <= 1.
void validate(const ModelParams& params);

// Colex rank of i < j < k: C(k,3) + C(j,2) + i.
std::uint64_t triangle_rank(const Triangle& t);

/// Triangle (i,j,k) is kept iff the Philox draw keyed by the seed at counter
/// triangle_rank(i,j,k) falls below p, so samples do not depend on
/// iteration order.
Complex2 sample(const ModelParams& params);

// Seed for trial `index` of a sweep with base seed `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// counts[k] = number of edges of degree k, k in 0..n-2 (or up to the maximum
/// degree for complexes without the full skeleton).
struct DegreeHistogram {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  std::uint64_t weighted_total() const;  // Σ k·counts[k]
};

// Histogram over every edge of c. For complexes with the full skeleton the
// vector has n-1 entries.
DegreeHistogram degree_histogram(const Complex2& c);

// C(n,2)·C(n-2,k)·p^k·(1-p)^(n-2-k), evaluated in log space. Throws
// std::invalid_argument for k > n-2.
double expected_degree_count(std::size_t n, double p, std::size_t k);

// n^(2+r)·p^r / (1 - p·n). Throws std::domain_error when p·n >= 1.
double high_degree_bound(std::size_t n, double p, std::size_t r);

double binomial(std::size_t n, std::size_t k);

}  // namespace randcx
