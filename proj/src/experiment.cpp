#include "randcx/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "randcx/catalog.hpp"
#include "randcx/collapse.hpp"
#include "randcx/embedding.hpp"
#include "randcx/random_model.hpp"

namespace randcx {

using nlohmann::json;

double PRule::evaluate(std::size_t n) const {
  return std::min(1.0, c * std::pow(static_cast<double>(n), -alpha));
}

namespace {

template <typename T>
T get_field(const json& j, const char* name) {
  if (!j.contains(name)) throw std::invalid_argument(std::string("config is missing \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("config field \"") + name + "\" has the wrong type");
  }
}

ExperimentMode parse_mode(const std::string& s) {
  if (s == "direct") return ExperimentMode::DirectCollapse;
  if (s == "catalog") return ExperimentMode::CatalogContainment;
  if (s == "both") return ExperimentMode::Both;
  throw std::invalid_argument("config field \"mode\" must be direct, catalog or both");
}

std::size_t resolve_threads(std::size_t requested, std::size_t work) {
  std::size_t t = requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
  return std::max<std::size_t>(1, std::min(t, work));
}

// Runs fn(i) for i in [0, count) on `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct TrialOutcome {
  bool collapsible = false;
  bool contains = false;
  std::optional<std::size_t> steps;
  bool degree_exceeded = false;
};

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.n_values.empty()) throw std::invalid_argument("config needs at least one n");
  for (auto n : config.n_values) {
    if (n < 3) throw std::invalid_argument("config n values must be >= 3");
  }
  if (config.p_rules.empty()) throw std::invalid_argument("config needs at least one p rule");
  for (const auto& rule : config.p_rules) {
    if (!(rule.c > 0.0)) throw std::invalid_argument("p rule needs c > 0");
    if (rule.alpha < 0.0) throw std::invalid_argument("p rule needs alpha > 0 (or a literal p)");
    if (rule.alpha == 0.0 && rule.c > 1.0) throw std::invalid_argument("literal p must lie in [0, 1]");
  }
  if (config.trials < 1) throw std::invalid_argument("config trials must be >= 1");
  if (config.r < 2) throw std::invalid_argument("config r must be >= 2");
  if (config.mode != ExperimentMode::DirectCollapse && !catalog_supported(config.k, config.r)) {
    throw std::invalid_argument("no catalog available for k = " + std::to_string(config.k) +
                                ", r = " + std::to_string(config.r));
  }
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  ExperimentConfig cfg;
  cfg.n_values = get_field<std::vector<std::size_t>>(j, "n");
  const json& rules = j.contains("p_rules") ? j.at("p_rules") : json();
  if (!rules.is_array()) throw std::invalid_argument("config field \"p_rules\" must be an array");
  for (const auto& r : rules) {
    if (r.contains("p")) {
      cfg.p_rules.push_back(PRule::literal(get_field<double>(r, "p")));
    } else {
      cfg.p_rules.push_back(PRule::power(r.contains("c") ? get_field<double>(r, "c") : 1.0, get_field<double>(r, "alpha")));
      if (!(cfg.p_rules.back().alpha > 0.0)) throw std::invalid_argument("p rule needs alpha > 0");
    }
  }
  cfg.k = get_field<std::size_t>(j, "k");
  if (j.contains("r")) cfg.r = get_field<std::size_t>(j, "r");
  cfg.trials = get_field<std::size_t>(j, "trials");
  if (j.contains("seed")) cfg.seed = get_field<std::uint64_t>(j, "seed");
  if (j.contains("mode")) cfg.mode = parse_mode(get_field<std::string>(j, "mode"));
  if (j.contains("threads")) cfg.threads = get_field<std::size_t>(j, "threads");
  validate(cfg);
  return cfg;
}

bool catalog_supported(std::size_t k, std::size_t r) {
  return (r == 2 && k <= 2) || (k <= 1 && r >= 2 && r <= 4);
}

std::string csv_header() {
  return "n,p,c,alpha,k,trials,seed,collapsible,contains_forbidden,mean_steps,degree_exceeded,wall_ms";
}

std::string csv_row(const ExperimentRecord& r) {
  auto opt = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string(); };
  std::string mean;
  if (r.mean_steps) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *r.mean_steps);
    mean = buf;
  }
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
  return std::to_string(r.n) + "," + format_double(r.p) + "," + format_double(r.rule.c) + "," +
         format_double(r.rule.alpha) + "," + std::to_string(r.k) + "," + std::to_string(r.trials) + "," +
         std::to_string(r.seed) + "," + opt(r.collapsible) + "," + opt(r.contains_forbidden) + "," + mean + "," +
         std::to_string(r.degree_exceeded) + "," + wall;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config, std::ostream* csv) {
  validate(config);
  const bool direct = config.mode != ExperimentMode::CatalogContainment;
  const bool containment = config.mode != ExperimentMode::DirectCollapse;
  std::vector<Complex2> catalog;
  if (containment) catalog = complexes_of(enumerate_l(config.k, config.r));

  if (csv) *csv << csv_header() << '\n' << std::flush;
  std::vector<ExperimentRecord> records;
  for (auto n : config.n_values) {
    for (const auto& rule : config.p_rules) {
      const auto start = std::chrono::steady_clock::now();
      ExperimentRecord rec;
      rec.n = n;
      rec.rule = rule;
      rec.p = rule.evaluate(n);
      rec.k = config.k;
      rec.trials = config.trials;
      rec.seed = config.seed;

      std::vector<TrialOutcome> outcomes(config.trials);
      parallel_for(config.trials, resolve_threads(config.threads, config.trials), [&](std::size_t i) {
        const auto y = sample(ModelParams{n, rec.p, derive_seed(config.seed, i)});
        TrialOutcome& o = outcomes[i];
        o.degree_exceeded = max_degree(y) > config.r;
        if (direct) {
          auto steps = collapse_number(y);
          if (steps.is_finite()) o.steps = steps.value();
          o.collapsible = steps.is_finite() && steps.value() <= config.k;
        }
        if (containment) o.contains = contains_any(y, std::span<const Complex2>(catalog)).has_value();
      });

      std::size_t collapsible = 0, contains = 0, finite = 0, step_sum = 0;
      for (const auto& o : outcomes) {
        collapsible += o.collapsible;
        contains += o.contains;
        rec.degree_exceeded += o.degree_exceeded;
        if (o.steps) {
          ++finite;
          step_sum += *o.steps;
        }
        if (direct && containment && !o.degree_exceeded && o.collapsible == o.contains) ++rec.consistency_violations;
      }
      if (direct) {
        rec.collapsible = collapsible;
        if (finite > 0) rec.mean_steps = static_cast<double>(step_sum) / static_cast<double>(finite);
      }
      if (containment) rec.contains_forbidden = contains;
      rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (csv) *csv << csv_row(rec) << '\n' << std::flush;
      records.push_back(rec);
    }
  }
  return records;
}

double lower_threshold_exponent(std::size_t k) {
  if (k == 0) throw std::invalid_argument("threshold exponents need k >= 1");
  return 1.0 + 1.0 / (3.0 * std::pow(2.0, static_cast<double>(k) - 1.0) - 1.0);
}

double upper_threshold_exponent(std::size_t k) { return 1.0 + 2.0 / (static_cast<double>(k) + 1.0); }

std::vector<std::pair<std::size_t, std::size_t>> monotonicity_violations(const std::vector<ScanRow>& rows, double z) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const double ti = static_cast<double>(rows[i].trials), tj = static_cast<double>(rows[j].trials);
      const double pooled = static_cast<double>(rows[i].collapsible + rows[j].collapsible) / (ti + tj);
      const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / ti + 1.0 / tj));
      if (rows[i].fraction() - rows[j].fraction() > z * se) out.emplace_back(i, j);
    }
  }
  return out;
}

ScanResult threshold_scan(std::size_t n, std::size_t k, const std::vector<double>& alphas, std::size_t trials,
                          std::uint64_t seed, std::size_t threads) {
  if (!std::is_sorted(alphas.begin(), alphas.end())) throw std::invalid_argument("alphas must be sorted ascending");
  if (alphas.empty()) throw std::invalid_argument("threshold scan needs at least one alpha");
  ExperimentConfig cfg;
  cfg.n_values = {n};
  for (auto a : alphas) cfg.p_rules.push_back(PRule::power(1.0, a));
  cfg.k = k;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.mode = ExperimentMode::DirectCollapse;
  cfg.threads = threads;

  ScanResult out;
  out.n = n;
  out.k = k;
  out.lower_exponent = lower_threshold_exponent(k);
  out.upper_exponent = upper_threshold_exponent(k);
  for (const auto& rec : run_experiment(cfg)) {
    out.rows.push_back(ScanRow{rec.rule.alpha, rec.p, *rec.collapsible, rec.trials});
  }
  out.violations = monotonicity_violations(out.rows, 3.0);
  return out;
}

}  // namespace randcx
