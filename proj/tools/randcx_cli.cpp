// randcx: command-line front end for the collapse, density, catalog,
// embedding and random-model routines.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "randcx/catalog.hpp"
#include "randcx/collapse.hpp"
#include "randcx/complex_json.hpp"
#include "randcx/embedding.hpp"
#include "randcx/experiment.hpp"
#include "randcx/mu.hpp"
#include "randcx/random_model.hpp"

using namespace randcx;
using nlohmann::json;

namespace {

json ext_json(const ExtNat& x) { return x.is_finite() ? json(x.value()) : json("inf"); }

std::string key_of(const Triangle& t) {
  return std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c);
}

json triangles_json(const std::vector<Triangle>& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back(to_json(t));
  return out;
}

json edges_json(const std::vector<Edge>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back(to_json(e));
  return out;
}

Triangle parse_triangle(const std::string& s) {
  std::vector<Vertex> v;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) v.push_back(static_cast<Vertex>(std::stoul(part)));
  if (v.size() != 3) throw std::invalid_argument("--sigma expects i,j,k");
  return make_triangle(v[0], v[1], v[2]);
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(std::stod(part));
  return out;
}

int cmd_collapse(const std::string& path, const std::string& sigma, bool full, std::size_t path_limit) {
  const Complex2 c = read_complex(path);
  if (!sigma.empty()) {
    const Triangle t = parse_triangle(sigma);
    if (!c.contains(t)) throw std::invalid_argument("triangle " + to_string(t) + " is not in the complex");
    json out;
    out["sigma"] = to_json(t);
    const ExtNat d = d_value(c, t);
    out["D"] = ext_json(d);
    if (d.is_finite()) {
      const auto paths = collapsing_paths(c, t, path_limit);
      json ps = json::array();
      for (const auto& p : paths.paths) ps.push_back(triangles_json(p.simplices));
      out["paths"] = ps;
      out["paths_truncated"] = paths.truncated;
    } else {
      out["paths"] = json::array();
      out["paths_truncated"] = false;
    }
    out["accessible_boundary"] = edges_json(accessible_boundary(c, t));
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  const CollapseTrace trace = collapse_sequence(c);
  json out;
  json stages = json::array();
  if (full) {
    // Stage-by-stage complexes including the retained 1-skeleton.
    Complex2 cur = c;
    stages.push_back(to_json(cur));
    for (std::size_t i = 1; i < trace.stages.size(); ++i) {
      cur = collapse_step_full(cur);
      stages.push_back(to_json(cur));
    }
  } else {
    for (const auto& s : trace.stages) stages.push_back(triangles_json(s));
  }
  out["stages"] = stages;
  json d = json::object();
  for (std::size_t i = 0; i < trace.triangles.size(); ++i) d[key_of(trace.triangles[i])] = ext_json(trace.d_values[i]);
  out["d_values"] = d;
  out["terminal"] = {{"kind", trace.terminal.kind == TerminalKind::Graph ? "graph" : "closed_residue"},
                     {"step", trace.terminal.step}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_mu(const std::string& path) {
  const Complex2 c = read_complex(path);
  const MuResult r = mu_tilde(c);
  json out;
  out["mu"] = mu(c).to_string();
  out["mu_tilde"] = r.value.to_string();
  out["method"] = r.method == MuMethod::Exhaustive ? "exhaustive" : "branch_and_bound";
  out["witness"] = triangles_json(r.witness);
  out["balanced"] = r.value == mu(c);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_catalog(std::size_t k, std::size_t r, const std::string& limits, const std::string& out_dir) {
  std::optional<CatalogLimits> lim;
  if (!limits.empty()) {
    const auto v = parse_doubles(limits);
    if (v.size() != 2) throw std::invalid_argument("--limits expects faces,vertices");
    lim = CatalogLimits{static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1])};
  }
  const Catalog cat = enumerate_l(k, r, lim);
  const auto complexes = complexes_of(cat);

  json members = json::array();
  for (std::size_t i = 0; i < cat.members.size(); ++i) {
    const auto& m = cat.members[i];
    json entry;
    entry["complex"] = to_json(m.complex);
    entry["center"] = to_json(m.center);
    entry["v"] = m.complex.n_vertices();
    entry["f"] = m.complex.face_count();
    const Rational mt = mu_tilde(m.complex).value;
    entry["mu_tilde"] = mt.to_string();
    entry["balanced"] = mt == mu(m.complex);
    members.push_back(entry);
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      std::ofstream(std::filesystem::path(out_dir) / ("member_" + std::to_string(i) + ".json")) << entry.dump(2) << '\n';
    }
  }

  std::ostringstream summary;
  summary << "k,r,count,unanchored_count,truncated,mu_tilde_max\n";
  summary << k << ',' << r << ',' << cat.members.size() << ',' << cat.unanchored_count << ','
          << (cat.truncated ? 1 : 0) << ',' << (complexes.empty() ? std::string() : mu_tilde_max(complexes).to_string())
          << '\n';
  if (!out_dir.empty()) {
    std::ofstream(std::filesystem::path(out_dir) / "summary.csv") << summary.str();
    json meta = {{"k", k}, {"r", r}, {"minimal", cat.minimal}, {"states_explored", cat.states_explored}};
    std::ofstream(std::filesystem::path(out_dir) / "catalog.json") << meta.dump(2) << '\n';
  } else {
    json out = {{"k", k}, {"r", r}, {"truncated", cat.truncated}, {"unanchored_count", cat.unanchored_count},
                {"minimal", cat.minimal}, {"members", members}};
    std::cout << out.dump(2) << '\n';
  }
  std::cout << summary.str();
  if (cat.truncated) std::cerr << "warning: enumeration hit the size limits; the catalog may be incomplete\n";
  return 0;
}

int cmd_embed(const std::string& pattern, const std::string& host) {
  const auto w = embeds(read_complex(pattern), read_complex(host));
  if (!w) {
    std::cout << "none\n";
    return 0;
  }
  json m = json::object();
  for (const auto& [a, b] : w->vertex_map) m[std::to_string(a)] = b;
  std::cout << json{{"vertex_map", m}}.dump(2) << '\n';
  return 0;
}

int cmd_generate(std::size_t n, double p, std::uint64_t seed, const std::string& out) {
  const Complex2 c = sample(ModelParams{n, p, seed});
  if (out.empty()) {
    std::cout << to_json(c).dump() << '\n';
  } else {
    write_complex(out, c);
  }
  return 0;
}

int cmd_degrees(std::size_t n, double p, std::uint64_t seed, std::size_t trials) {
  std::vector<std::uint64_t> sums(n - 1, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto h = degree_histogram(sample(ModelParams{n, p, derive_seed(seed, t)}));
    for (std::size_t k = 0; k < h.counts.size(); ++k) sums[k] += h.counts[k];
  }
  std::printf("k,observed,expected\n");
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::printf("%zu,%.6f,%.6f\n", k, static_cast<double>(sums[k]) / static_cast<double>(trials),
                expected_degree_count(n, p, k));
  }
  return 0;
}

int cmd_experiment_run(const std::string& config_path, std::string out) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open " + config_path);
  const json j = json::parse(in);
  const ExperimentConfig cfg = config_from_json(j);
  if (out.empty() && j.contains("output")) out = j.at("output").get<std::string>();

  std::ofstream file;
  std::ostream* csv = &std::cout;
  if (!out.empty()) {
    file.open(out, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + out);
    csv = &file;
  }
  std::size_t violations = 0;
  for (const auto& rec : run_experiment(cfg, csv)) {
    if (rec.consistency_violations > 0) {
      std::cerr << "consistency violation: n=" << rec.n << " p=" << rec.p << " count=" << rec.consistency_violations
                << '\n';
    }
    violations += rec.consistency_violations;
  }
  return violations == 0 ? 0 : 3;
}

int cmd_experiment_scan(std::size_t n, std::size_t k, const std::string& alphas, std::size_t trials,
                        std::uint64_t seed) {
  const ScanResult res = threshold_scan(n, k, parse_doubles(alphas), trials, seed);
  std::printf("# n=%zu k=%zu lower_exponent=%.6f upper_exponent=%.6f\n", res.n, res.k, res.lower_exponent,
              res.upper_exponent);
  std::printf("alpha,p,collapsible,trials,fraction\n");
  for (const auto& row : res.rows) {
    std::printf("%.6g,%.17g,%zu,%zu,%.6f\n", row.alpha, row.p, row.collapsible, row.trials, row.fraction());
  }
  for (const auto& [i, j] : res.violations) {
    std::fprintf(stderr, "monotonicity: fraction drops from alpha=%g to alpha=%g\n", res.rows[i].alpha,
                 res.rows[j].alpha);
  }
  return res.violations.empty() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collapsibility of random 2-complexes"};
  app.require_subcommand(1);

  std::string input, sigma;
  bool full = false;
  std::size_t path_limit = kDefaultPathLimit;
  auto* collapse = app.add_subcommand("collapse", "collapse trace of a JSON complex");
  collapse->add_option("input", input, "complex JSON")->required()->check(CLI::ExistingFile);
  collapse->add_option("--sigma", sigma, "triangle i,j,k: print D, collapsing paths and accessible boundary");
  collapse->add_flag("--full", full, "emit full complexes per stage (keeps unused edges)");
  collapse->add_option("--path-limit", path_limit, "cap on enumerated collapsing paths");

  auto* mu_cmd = app.add_subcommand("mu", "density invariants of a JSON complex");
  mu_cmd->add_option("input", input, "complex JSON")->required()->check(CLI::ExistingFile);

  std::size_t k = 1, r = 2;
  std::string limits, out_dir;
  auto* catalog = app.add_subcommand("catalog", "enumerate the forbidden pseudo-surfaces");
  catalog->add_option("--k", k)->required();
  catalog->add_option("--r", r)->required();
  catalog->add_option("--limits", limits, "faces,vertices");
  catalog->add_option("--out-dir", out_dir, "write member JSON files and summary.csv here");

  std::string pattern, host;
  auto* embed = app.add_subcommand("embed", "find a simplicial embedding");
  embed->add_option("--pattern", pattern)->required()->check(CLI::ExistingFile);
  embed->add_option("--host", host)->required()->check(CLI::ExistingFile);

  std::size_t n = 10, trials = 1;
  double p = 0.1;
  std::uint64_t seed = 0;
  std::string out;
  auto* generate = app.add_subcommand("generate", "sample the random 2-complex");
  generate->add_option("--n", n)->required();
  generate->add_option("--p", p)->required();
  generate->add_option("--seed", seed);
  generate->add_option("--out", out);

  auto* degrees = app.add_subcommand("degrees", "edge-degree histogram against its expectation");
  degrees->add_option("--n", n)->required()->check(CLI::Range(3, 1 << 20));
  degrees->add_option("--p", p)->required();
  degrees->add_option("--seed", seed);
  degrees->add_option("--trials", trials)->check(CLI::PositiveNumber);

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo sweeps");
  experiment->require_subcommand(1);
  std::string config;
  auto* run = experiment->add_subcommand("run", "run a config-driven sweep");
  run->add_option("--config", config)->required()->check(CLI::ExistingFile);
  run->add_option("--out", out, "CSV path (default: config \"output\" or stdout)");
  std::string alphas;
  std::size_t scan_trials = 200;
  auto* scan = experiment->add_subcommand("scan", "collapsible fraction across p = n^-alpha");
  scan->add_option("--n", n)->required();
  scan->add_option("--k", k)->required();
  scan->add_option("--alphas", alphas, "comma-separated, ascending")->required();
  scan->add_option("--trials", scan_trials);
  scan->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*collapse) return cmd_collapse(input, sigma, full, path_limit);
    if (*mu_cmd) return cmd_mu(input);
    if (*catalog) return cmd_catalog(k, r, limits, out_dir);
    if (*embed) return cmd_embed(pattern, host);
    if (*generate) return cmd_generate(n, p, seed, out);
    if (*degrees) return cmd_degrees(n, p, seed, trials);
    if (*run) return cmd_experiment_run(config, out);
    if (*scan) return cmd_experiment_scan(n, k, alphas, scan_trials, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
