#include <doctest.h>

#include <sstream>

#include "randcx/experiment.hpp"

using namespace randcx;
using nlohmann::json;

namespace {

// CSV with the trailing wall_ms column removed from every line.
std::string strip_timing(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

}  // namespace

TEST_CASE("config parsing") {
  auto cfg = config_from_json(json::parse(R"({
    "n": [8, 9], "p_rules": [{"c": 2, "alpha": 1.5}, {"p": 0.05}],
    "k": 1, "r": 2, "trials": 10, "seed": 3, "mode": "both", "threads": 2})"));
  CHECK(cfg.n_values == std::vector<std::size_t>{8, 9});
  REQUIRE(cfg.p_rules.size() == 2);
  CHECK(cfg.p_rules[0].c == 2.0);
  CHECK(cfg.p_rules[1].alpha == 0.0);
  CHECK(cfg.p_rules[1].evaluate(100) == 0.05);
  CHECK(cfg.mode == ExperimentMode::Both);

  CHECK_THROWS_AS(config_from_json(json::parse(R"({"n": [8], "p_rules": [], "k": 1, "trials": 1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"n": [8], "p_rules": [{"alpha": -1}], "k": 1, "trials": 1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"n": [8], "p_rules": [{"p": 0.1}], "k": 1, "trials": 0})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"n": [8], "p_rules": [{"p": 0.1}], "k": 1, "trials": 1,
                                                   "mode": "sideways"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"n": [8], "p_rules": [{"p": 0.1}], "k": 5, "r": 5, "trials": 1,
                                                   "mode": "catalog"})")),
                  std::invalid_argument);
}

TEST_CASE("csv layout") {
  CHECK(csv_header() == "n,p,c,alpha,k,trials,seed,collapsible,contains_forbidden,mean_steps,degree_exceeded,wall_ms");
  ExperimentRecord r;
  r.n = 10;
  r.p = 0.5;
  r.rule = PRule::literal(0.5);
  r.k = 1;
  r.trials = 4;
  r.seed = 7;
  r.collapsible = 3;
  r.degree_exceeded = 1;
  CHECK(strip_timing(csv_row(r) + "\n") == "10,0.5,0.5,0,1,4,7,3,,,1\n");
}

TEST_CASE("runs are reproducible and independent of thread count") {
  ExperimentConfig cfg;
  cfg.n_values = {9, 12};
  cfg.p_rules = {PRule::power(1.0, 1.5), PRule::literal(0.02)};
  cfg.k = 1;
  cfg.trials = 40;
  cfg.seed = 99;
  cfg.mode = ExperimentMode::Both;
  std::ostringstream a, b, c;
  cfg.threads = 1;
  auto ra = run_experiment(cfg, &a);
  run_experiment(cfg, &b);
  cfg.threads = 4;
  run_experiment(cfg, &c);
  CHECK(strip_timing(a.str()) == strip_timing(b.str()));
  CHECK(strip_timing(a.str()) == strip_timing(c.str()));
  REQUIRE(ra.size() == 4);
  CHECK(ra[0].n == 9);
  CHECK(ra[1].rule.alpha == 0.0);
  CHECK(ra[2].n == 12);
}

TEST_CASE("both routes agree on the degree-capped subsample") {
  ExperimentConfig cfg;
  cfg.n_values = {7, 8, 9};
  cfg.p_rules = {PRule::literal(0.03), PRule::literal(0.08), PRule::literal(0.15)};
  cfg.k = 1;
  cfg.r = 2;
  cfg.trials = 100;
  cfg.seed = 5;
  cfg.mode = ExperimentMode::Both;
  for (const auto& rec : run_experiment(cfg)) {
    CHECK(rec.consistency_violations == 0);
    REQUIRE(rec.collapsible);
    REQUIRE(rec.contains_forbidden);
    CHECK(*rec.collapsible <= rec.trials);
    CHECK(*rec.contains_forbidden <= rec.trials);
    if (rec.degree_exceeded == 0) CHECK(*rec.collapsible + *rec.contains_forbidden == rec.trials);
  }
}

TEST_CASE("threshold scan") {
  auto res = threshold_scan(30, 1, {1.1, 1.5, 2.0, 2.5, 4.0}, 60, 11);
  CHECK(res.lower_exponent == doctest::Approx(1.5));
  CHECK(res.upper_exponent == doctest::Approx(2.0));
  REQUIRE(res.rows.size() == 5);
  CHECK(res.violations.empty());
  CHECK(res.rows.back().fraction() == 1.0);  // expected face count far below 1
  // Nested samples: fractions are nondecreasing in alpha exactly.
  for (std::size_t i = 1; i < res.rows.size(); ++i) CHECK(res.rows[i].collapsible >= res.rows[i - 1].collapsible);
  CHECK_THROWS_AS(threshold_scan(30, 1, {2.0, 1.0}, 5, 1), std::invalid_argument);
  CHECK(lower_threshold_exponent(2) == doctest::Approx(1.2));
  CHECK(upper_threshold_exponent(2) == doctest::Approx(5.0 / 3.0));
}

TEST_CASE("monotonicity check flags large drops only") {
  std::vector<ScanRow> rows{{1.0, 0.1, 10, 100}, {2.0, 0.01, 12, 100}, {3.0, 0.001, 90, 100}, {4.0, 1e-4, 20, 100}};
  auto v = monotonicity_violations(rows, 3.0);
  CHECK(std::find(v.begin(), v.end(), std::pair<std::size_t, std::size_t>{2, 3}) != v.end());
  CHECK(std::find(v.begin(), v.end(), std::pair<std::size_t, std::size_t>{0, 1}) == v.end());
}
