#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace randcx {

/// Probability rule p = c·n^(−alpha). A literal probability is stored as
/// c = p, alpha = 0.
struct PRule {
  double c = 1.0;
  double alpha = 0.0;

  double evaluate(std::size_t n) const;
  static PRule literal(double p) { return PRule{p, 0.0}; }
  static PRule power(double c, double alpha) { return PRule{c, alpha}; }
};

enum class ExperimentMode { DirectCollapse, CatalogContainment, Both };

struct ExperimentConfig {
  std::vector<std::size_t> n_values;
  std::vector<PRule> p_rules;
  std::size_t k = 1;
  std::size_t r = 2;  // degree cap for the catalog route
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  ExperimentMode mode = ExperimentMode::DirectCollapse;
  std::size_t threads = 0;  // 0: hardware concurrency
};

// Schema:
//   {"n": [40, ...], "p_rules": [{"c": 1, "alpha": 2.3} | {"p": 0.01}, ...],
//    "k": 1, "r": 2, "trials": 200, "seed": 1,
//    "mode": "direct" | "catalog" | "both", "threads": 0}
// Throws std::invalid_argument with the offending field on bad input.
ExperimentConfig config_from_json(const nlohmann::json& j);
void validate(const ExperimentConfig& config);

/// One (n, p-rule) cell. Optional counts are absent when the mode skips that
/// route.
struct ExperimentRecord {
  std::size_t n = 0;
  double p = 0.0;
  PRule rule;
  std::size_t k = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> collapsible;
  std::optional<std::size_t> contains_forbidden;
  // Mean collapse number over trials that reduce to a graph.
  std::optional<double> mean_steps;
  std::size_t degree_exceeded = 0;  // trials with max edge degree > r
  // Trials with degree <= r where "collapsible in k steps" and "contains a
  // catalog member" are not complementary (mode Both only).
  std::size_t consistency_violations = 0;
  double wall_ms = 0.0;
};

// n,p,c,alpha,k,trials,seed,collapsible,contains_forbidden,mean_steps,degree_exceeded,wall_ms
std::string csv_header();
std::string csv_row(const ExperimentRecord& r);

/// Runs every cell in (n, rule) order. Trial i of every cell uses
/// derive_seed(seed, i), so cells at the same n are coupled monotonically in
/// p. When `csv` is given, the header and each finished record are written
/// and flushed immediately. Throws std::invalid_argument when the catalog
/// route is requested for an unsupported (k, r).
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config, std::ostream* csv = nullptr);

// (k, r) pairs whose catalogs are enumerated without truncation.
bool catalog_supported(std::size_t k, std::size_t r);

struct ScanRow {
  double alpha = 0.0;
  double p = 0.0;
  std::size_t collapsible = 0;
  std::size_t trials = 0;
  double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(collapsible) / static_cast<double>(trials); }
};

struct ScanResult {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<ScanRow> rows;
  // Exponents bracketing the k-step threshold: 1 + 1/(3·2^(k−1) − 1) and 1 + 2/(k+1).
  double lower_exponent = 0.0;
  double upper_exponent = 0.0;
  // Pairs (i, j), i < j, where the fraction drops by more than `z` pooled
  // standard errors from row i to row j.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

// Throws std::invalid_argument unless alphas are sorted ascending and k >= 1.
ScanResult threshold_scan(std::size_t n, std::size_t k, const std::vector<double>& alphas, std::size_t trials,
                          std::uint64_t seed, std::size_t threads = 0);

// Pairs (i, j), i < j, whose collapsible fraction decreases by more than z
// pooled standard errors.
std::vector<std::pair<std::size_t, std::size_t>> monotonicity_violations(const std::vector<ScanRow>& rows, double z);

double lower_threshold_exponent(std::size_t k);
double upper_threshold_exponent(std::size_t k);

}  // namespace randcx
