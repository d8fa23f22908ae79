// Copyright 2026 The Theseus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "theseus/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "theseus/errors.hpp"
#include "theseus/objective.hpp"
#include "theseus/serialize.hpp"
#include "theseus/srv.hpp"
#include "theseus/state.hpp"
#include "theseus/target_parser.hpp"
#include "theseus/theseus.hpp"

namespace theseus {
namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

PrunePolicy parse_policy(const std::string& name, double temperature) {
  static const std::map<std::string, PruneKind> kinds{
      {"uniform", PruneKind::uniform_random}, {"uniform_random", PruneKind::uniform_random},
      {"greedy", PruneKind::greedy_min_weight}, {"greedy_min_weight", PruneKind::greedy_min_weight},
      {"boltzmann", PruneKind::boltzmann}};
  auto it = kinds.find(name);
  if (it == kinds.end()) throw UsageError("--policy: unknown policy '" + name + "'");
  return PrunePolicy{it->second, temperature};
}

DetectorModel parse_detector(const std::string& name) {
  if (name == "number_resolving" || name == "number_resolving_one") return DetectorModel::number_resolving_one;
  if (name == "threshold" || name == "threshold_at_least_one") return DetectorModel::threshold_at_least_one;
  throw UsageError("--detector: unknown detector model '" + name + "'");
}

Target parse_target_flag(const std::string& text) {
  try {
    return parse_target(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--target: ") + e.what());
  } catch (const InvalidParameters& e) {
    throw UsageError(std::string("--target: ") + e.what());
  }
}

ColoredGraph load_graph(const std::string& path) {
  try {
    return json_to_graph(read_file(path));
  } catch (const SchemaError& e) {
    throw UsageError("--graph: " + std::string(e.what()));
  }
}

// Flat key/value document mirroring OptimizerConfig.
void apply_config_file(const std::string& path, OptimizerConfig& cfg, std::map<std::string, bool>& set) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("--config: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw UsageError("--config: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    auto number = [&]() {
      if (!value.is_number()) throw UsageError("--config: '" + key + "' must be a number");
      return value.get<double>();
    };
    auto integer = [&]() {
      if (!value.is_number_integer()) throw UsageError("--config: '" + key + "' must be an integer");
      return value.get<long long>();
    };
    if (key == "alpha") cfg.alpha = number();
    else if (key == "F_limit") cfg.F_limit = number();
    else if (key == "omega_limit") cfg.omega_limit = number();
    else if (key == "c_limit") cfg.c_limit = static_cast<int>(integer());
    else if (key == "max_iterations") cfg.max_iterations = static_cast<int>(integer());
    else if (key == "gradient_tolerance") cfg.gradient_tolerance = number();
    else if (key == "function_tolerance") cfg.function_tolerance = number();
    else if (key == "init_range") cfg.init_range = number();
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(integer());
    else if (key == "l1") {
      const std::string s = value.is_string() ? value.get<std::string>() : "";
      if (s == "componentwise") cfg.l1 = L1Norm::componentwise;
      else if (s == "modulus") cfg.l1 = L1Norm::modulus;
      else throw UsageError("--config: 'l1' must be \"componentwise\" or \"modulus\"");
    } else if (key == "weight_norm") {
      const std::string s = value.is_string() ? value.get<std::string>() : "";
      if (s == "max_component") cfg.weight_norm = WeightNorm::max_component;
      else if (s == "max_modulus") cfg.weight_norm = WeightNorm::max_modulus;
      else throw UsageError("--config: 'weight_norm' must be \"max_component\" or \"max_modulus\"");
    } else {
      throw UsageError("--config: unknown key '" + key + "'");
    }
    set[key] = true;
  }
}

struct OptimizerFlags {
  std::string config;
  double alpha = 0.0;
  double flimit = 0.0;
  double omega_limit = 0.0;
  int climit = 0;
  int max_iterations = 0;
  std::uint64_t seed = 0;
  std::string policy = "greedy";
  double temperature = 1.0;
  CLI::Option* o_alpha = nullptr;
  CLI::Option* o_flimit = nullptr;
  CLI::Option* o_omega = nullptr;
  CLI::Option* o_climit = nullptr;
  CLI::Option* o_iter = nullptr;
  CLI::Option* o_seed = nullptr;

  void add(CLI::App* app) {
    app->add_option("--config", config, "JSON file of optimizer settings");
    o_alpha = app->add_option("--alpha", alpha, "L1 coefficient");
    o_flimit = app->add_option("--flimit", flimit, "fidelity needed to accept a graph");
    o_omega = app->add_option("--omega-limit", omega_limit, "largest weight component allowed");
    o_climit = app->add_option("--climit", climit, "restarts per topology");
    o_iter = app->add_option("--max-iterations", max_iterations, "iterations per optimization");
    o_seed = app->add_option("--seed", seed, "random seed (default: THESEUS_SEED or 0)");
    app->add_option("--policy", policy, "edge selection: uniform, greedy or boltzmann");
    app->add_option("--temperature", temperature, "boltzmann temperature");
  }

  // Flags override the config file, which overrides THESEUS_SEED and defaults.
  OptimizerConfig resolve() const {
    OptimizerConfig cfg;
    std::map<std::string, bool> set;
    if (const char* env = std::getenv("THESEUS_SEED")) {
      try {
        cfg.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError("THESEUS_SEED: not an unsigned integer");
      }
    }
    if (!config.empty()) apply_config_file(config, cfg, set);
    if (o_alpha->count()) cfg.alpha = alpha;
    if (o_flimit->count()) cfg.F_limit = flimit;
    if (o_omega->count()) cfg.omega_limit = omega_limit;
    if (o_climit->count()) cfg.c_limit = climit;
    if (o_iter->count()) cfg.max_iterations = max_iterations;
    if (o_seed->count()) cfg.seed = seed;
    try {
      cfg.validate();
    } catch (const InvalidParameters& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
};

struct ConditioningFlags {
  std::vector<int> heralds;
  std::string detector = "threshold";
  int max_pairs = -1;
  bool postselect_outputs = false;

  void add(CLI::App* app) {
    app->add_option("--heralds", heralds, "herald vertices, comma separated")->delimiter(',');
    app->add_option("--detector", detector, "herald detectors: threshold or number_resolving");
    app->add_option("--max-pairs", max_pairs, "truncation in pair-creation events");
    app->add_flag("--postselect-outputs", postselect_outputs, "require one photon per output vertex");
  }

  ConditioningSpec resolve(const ColoredGraph& g) const {
    for (int h : heralds)
      if (h < 0 || h >= g.num_vertices() || g.is_virtual(h))
        throw UsageError("--heralds: " + std::to_string(h) + " is not a real vertex");
    ConditioningSpec c = heralds.empty()
                             ? postselection(g)
                             : heralding(g, heralds, parse_detector(detector),
                                         max_pairs >= 0 ? std::optional<int>(max_pairs) : std::nullopt);
    if (heralds.empty() && max_pairs >= 0) c.max_pairs = max_pairs;
    if (postselect_outputs) c.postselect_outputs = true;
    try {
      c.validate(g);
    } catch (const InvalidParameters& e) {
      throw UsageError(std::string("--heralds: ") + e.what());
    }
    return c;
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

int discover(const std::string& target_text, int vertices, int dims, const ConditioningFlags& cf,
             const OptimizerFlags& of, int step_budget, const std::string& out_prefix, std::ostream& out,
             std::ostream& err) {
  const Target target = parse_target_flag(target_text);
  const OptimizerConfig cfg = of.resolve();
  const PrunePolicy policy = parse_policy(of.policy, of.temperature);
  if (vertices < 2) throw UsageError("--vertices: need at least 2");
  if (dims < 1 || dims > 10) throw UsageError("--dims: must lie in 1..10");
  const ColoredGraph start = starting_graph(target, vertices, dims);
  const ConditioningSpec c = cf.resolve(start);
  try {
    CompiledObjective probe(start, target, c);
  } catch (const InvalidParameters& e) {
    throw UsageError(std::string("--target: ") + e.what());
  }

  std::ofstream trace(out_prefix + ".trace.jsonl", std::ios::binary);
  if (!trace) throw UsageError("--out: cannot write '" + out_prefix + ".trace.jsonl'");
  SearchOptions opt;
  if (step_budget >= 0) opt.step_budget = step_budget;
  opt.on_record = [&](const TraceRecord& r) { trace << trace_record_json(r) << '\n'; };

  Solution sol;
  int code = kExitOk;
  try {
    sol = run_theseus(target, start, c, cfg, policy, opt);
  } catch (const SearchFailed& e) {
    sol = e.best();
    code = kExitSearchFailed;
    err << "search failed: " << e.what() << '\n';
  }
  write_file(out_prefix + ".json", solution_to_json(sol, format_target(target)));
  write_file(out_prefix + ".dot", graph_to_dot(sol.graph));
  out << (sol.qualified ? "qualified" : "not qualified") << ": fidelity " << fmt(sol.fidelity) << ", "
      << sol.graph.num_edges() << " edges, " << sol.trace.size() << " optimizations\n"
      << "wrote " << out_prefix << ".json, " << out_prefix << ".dot, " << out_prefix << ".trace.jsonl\n";
  return code;
}

int evaluate(const std::string& graph_path, const std::string& target_text, const ConditioningFlags& cf,
             double rep_rate, std::ostream& out, std::ostream& err) {
  const ColoredGraph g = load_graph(graph_path);
  const Target target = parse_target_flag(target_text);
  const ConditioningSpec c = cf.resolve(g);
  if (!(rep_rate >= 0.0)) throw UsageError("--rep-rate: must be non-negative");
  double f = 0.0;
  try {
    const CompiledObjective obj(g, target, c);
    f = obj.fidelity(g.parameters());
  } catch (const InvalidParameters& e) {
    throw UsageError(std::string("--target: ") + e.what());
  }
  if (std::isnan(f)) {
    err << "conditioned state vanishes; fidelity undefined\n";
    return kExitSearchFailed;
  }
  out << "fidelity: " << fmt(f) << '\n';
  if (g.virtual_vertices().empty()) {
    const double p = event_probability(g, c);
    out << "event_probability: " << fmt(p) << '\n';
    if (p <= 1.0) out << "count_rate_hz: " << fmt(count_rate(p, rep_rate)) << '\n';
  }
  return kExitOk;
}

int benchmark_srv(int max_dim, double budget, const OptimizerFlags& of, const std::string& out_path,
                  std::ostream& out) {
  const OptimizerConfig cfg = of.resolve();
  const PrunePolicy policy = parse_policy(of.policy, of.temperature);
  if (max_dim < 2 || max_dim > 10) throw UsageError("--max-dim: must lie in 2..10");
  if (!(budget > 0.0)) throw UsageError("--budget: must be positive");
  const SrvBenchmarkReport report = srv_benchmark(max_dim, budget, cfg, policy, [&](const SchmidtRankVector& s, bool ok) {
    out << s.to_string() << ' ' << (ok ? "found" : "not found") << std::endl;
  });
  out << report.achieved.size() << " of " << report.achieved.size() + report.missed.size()
      << " classes found in " << fmt(report.seconds) << " s\n";
  if (!out_path.empty()) {
    nlohmann::json doc{{"max_dim", max_dim}, {"achieved", nlohmann::json::array()}, {"missed", nlohmann::json::array()}};
    for (const SrvResult& r : report.achieved)
      doc["achieved"].push_back({{"srv", r.verified.ranks},
                                 {"fidelity", r.solution.fidelity},
                                 {"num_edges", r.solution.graph.num_edges()},
                                 {"graph", nlohmann::json::parse(graph_to_json(r.solution.graph))}});
    for (const SchmidtRankVector& s : report.missed) doc["missed"].push_back(s.ranks);
    write_file(out_path, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int export_graph(const std::string& graph_path, const std::string& format, std::ostream& out) {
  const ColoredGraph g = load_graph(graph_path);
  if (format == "json")
    out << graph_to_json(g);
  else if (format == "dot")
    out << graph_to_dot(g);
  else
    throw UsageError("--format: expected dot or json, got '" + format + "'");
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverse design of quantum-optics experiment graphs", "theseus"};
  app.require_subcommand(1);

  OptimizerFlags of;
  ConditioningFlags cf;

  std::string target_text, out_prefix = "solution", graph_path, format = "json", srv_out;
  int vertices = 0, dims = 0, step_budget = -1, max_dim = 4;
  double rep_rate = 8e7, budget = 1800.0;

  CLI::App* disc = app.add_subcommand("discover", "search for a minimal graph producing a target");
  disc->add_option("--target", target_text, "target expression")->required();
  disc->add_option("--vertices", vertices, "real vertices")->required();
  disc->add_option("--dims", dims, "modes per vertex")->required();
  disc->add_option("--step-budget", step_budget, "prune attempts (default 5 x edges)");
  disc->add_option("--out", out_prefix, "output prefix for .json, .dot and .trace.jsonl");
  cf.add(disc);
  of.add(disc);

  ConditioningFlags ecf;
  CLI::App* eval = app.add_subcommand("evaluate", "fidelity and rates of a graph");
  eval->add_option("--graph", graph_path, "graph JSON file")->required();
  eval->add_option("--target", target_text, "target expression")->required();
  eval->add_option("--rep-rate", rep_rate, "pump repetition rate in Hz");
  ecf.add(eval);

  CLI::App* bench = app.add_subcommand("benchmark", "benchmarks");
  bench->require_subcommand(1);
  OptimizerFlags bof;
  CLI::App* srv = bench->add_subcommand("srv", "Schmidt-rank-vector classes on six vertices");
  srv->add_option("--max-dim", max_dim, "largest local dimension");
  srv->add_option("--budget", budget, "wall-clock seconds for all classes");
  srv->add_option("--out", srv_out, "write a JSON report here");
  bof.add(srv);

  CLI::App* exp = app.add_subcommand("export", "convert a graph file");
  exp->add_option("--graph", graph_path, "graph JSON file")->required();
  exp->add_option("--format", format, "dot or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*disc) return discover(target_text, vertices, dims, cf, of, step_budget, out_prefix, out, err);
    if (*eval) return evaluate(graph_path, target_text, ecf, rep_rate, out, err);
    if (*srv) return benchmark_srv(max_dim, budget, bof, srv_out, out);
    if (*exp) return export_graph(graph_path, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitSearchFailed;
  }
  return kExitUsage;
}

}  // namespace theseus
