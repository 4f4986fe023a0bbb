#include "randcx/random_model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "randcx/philox.hpp"

namespace randcx {

namespace {
constexpr std::uint32_t kTriangleStream = 0x7472690A;  // per-triangle draws
constexpr std::uint32_t kTrialStream = 0x7365640B;     // derived trial seeds
}  // namespace

void validate(const ModelParams& params) {
  if (params.n < 3) throw std::invalid_argument("model needs n >= 3");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("model needs 0 <= p <= 1");
}

std::uint64_t triangle_rank(const Triangle& t) {
  const std::uint64_t i = t.a, j = t.b, k = t.c;
  return k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i;
}

Complex2 sample(const ModelParams& params) {
  validate(params);
  std::vector<Triangle> tris;
  for (Vertex k = 2; k < params.n; ++k) {
    for (Vertex j = 1; j < k; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        const Triangle t{i, j, k};
        if (uniform_at(params.seed, triangle_rank(t), kTriangleStream) < params.p) tris.push_back(t);
      }
    }
  }
  return Complex2::with_full_skeleton(params.n, std::move(tris));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return bits_at(seed, index, kTrialStream); }

std::uint64_t DegreeHistogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

std::uint64_t DegreeHistogram::weighted_total() const {
  std::uint64_t s = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) s += k * counts[k];
  return s;
}

DegreeHistogram degree_histogram(const Complex2& c) {
  DegreeHistogram h;
  std::size_t width = max_degree(c) + 1;
  if (c.has_full_skeleton() && c.n_vertices() >= 2) width = std::max(width, c.n_vertices() - 1);
  h.counts.assign(width, 0);
  for (const auto& [e, d] : c.face_edges()) ++h.counts[d];
  h.counts[0] += c.edge_count() - c.face_edges().size();
  return h;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

double expected_degree_count(std::size_t n, double p, std::size_t k) {
  if (n < 2 || k > n - 2) throw std::invalid_argument("degree k out of range 0..n-2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability out of range");
  const std::size_t m = n - 2;
  // p^k (1-p)^(m-k) with the 0^0 = 1 convention at the endpoints.
  if (p == 0.0) return k == 0 ? binomial(n, 2) : 0.0;
  if (p == 1.0) return k == m ? binomial(n, 2) : 0.0;
  const double log_term = std::lgamma(n + 1.0) - std::lgamma(3.0) - std::lgamma(n - 1.0)  // C(n,2)
                          + std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0) +
                          static_cast<double>(k) * std::log(p) + static_cast<double>(m - k) * std::log1p(-p);
  return std::exp(log_term);
}

double high_degree_bound(std::size_t n, double p, std::size_t r) {
  const double pn = p * static_cast<double>(n);
  if (pn >= 1.0) throw std::domain_error("high-degree bound needs p·n < 1");
  if (p == 0.0) return 0.0;
  return std::pow(static_cast<double>(n), 2.0 + static_cast<double>(r)) * std::pow(p, static_cast<double>(r)) / (1.0 - pn);
}

}  // namespace randcx
