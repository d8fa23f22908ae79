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

#include "theseus/theseus.hpp"

#include <chrono>
#include <cmath>

namespace theseus {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), 0x7e5eu};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::vector<double> without_edge(std::span<const double> params, std::size_t edge) {
  std::vector<double> out;
  out.reserve(params.size() - 2);
  for (std::size_t i = 0; i < params.size(); ++i)
    if (i / 2 != edge) out.push_back(params[i]);
  return out;
}

}  // namespace

ColoredGraph starting_graph(const Target& target, int n_real, int d) {
  const auto inputs = static_cast<int>(target_input_count(target));
  if (inputs > 0) return complete_graph_with_inputs(n_real, inputs, d);
  return complete_graph(n_real, d);
}

Solution run_theseus(const Target& target, const ColoredGraph& start, const ConditioningSpec& c,
                     const OptimizerConfig& cfg, const PrunePolicy& policy, const SearchOptions& opt) {
  cfg.validate();
  if (start.num_edges() == 0) throw NoEdges("starting graph has no edges");
  if (policy.kind == PruneKind::boltzmann && !(policy.temperature > 0.0))
    throw InvalidParameters("boltzmann temperature must be positive");
  const auto t0 = Clock::now();
  std::mt19937_64 rng(derived_seed(cfg.seed, 0xed9e));
  const int budget = opt.step_budget.value_or(5 * static_cast<int>(start.num_edges()));

  Solution sol;
  auto record = [&](TraceRecord r) {
    r.time = seconds_since(t0);
    sol.trace.push_back(r);
    if (opt.on_record) opt.on_record(sol.trace.back());
  };

  const CompiledObjective first(start, target, c);
  OptimizerConfig step_cfg = cfg;
  step_cfg.seed = derived_seed(cfg.seed, 0);
  RestartResult res = optimize_with_restarts(make_problem(first, step_cfg), first.num_parameters(), step_cfg);
  sol.graph = start.with_parameters(res.x);
  sol.fidelity = res.fidelity;
  sol.loss = res.loss;
  sol.qualified = res.qualified;
  record(TraceRecord{0, std::nullopt, res.qualified, res.fidelity, res.loss, res.restarts_used,
                     static_cast<int>(start.num_edges()), 0.0});
  if (!res.qualified) {
    sol.wall_time = seconds_since(t0);
    throw SearchFailed(std::move(sol));
  }

  std::vector<char> untried(sol.graph.num_edges(), 1);
  for (int step = 1; step <= budget; ++step) {
    if (opt.time_budget_seconds && seconds_since(t0) >= *opt.time_budget_seconds) break;
    if (sol.graph.num_edges() <= 1) break;
    std::vector<std::size_t> candidates;
    std::vector<double> moduli;
    for (std::size_t i = 0; i < untried.size(); ++i) {
      if (!untried[i]) continue;
      candidates.push_back(i);
      moduli.push_back(std::abs(sol.graph.edge(i).weight));
    }
    if (candidates.empty()) break;
    const std::size_t idx = candidates[select_edge_to_prune(moduli, policy, rng)];

    const ColoredGraph trial = remove_edge(sol.graph, idx);
    const CompiledObjective obj(trial, target, c);
    const std::vector<double> warm = without_edge(sol.graph.parameters(), idx);
    step_cfg.seed = derived_seed(cfg.seed, static_cast<std::uint64_t>(step));
    res = optimize_with_restarts(make_problem(obj, step_cfg), obj.num_parameters(), step_cfg,
                                 std::span<const double>(warm));

    TraceRecord r{step, sol.graph.edge(idx), res.qualified, res.fidelity, res.loss, res.restarts_used,
                  static_cast<int>(res.qualified ? trial.num_edges() : sol.graph.num_edges()), 0.0};
    if (res.qualified) {
      sol.graph = trial.with_parameters(res.x);
      sol.fidelity = res.fidelity;
      sol.loss = res.loss;
      untried.assign(sol.graph.num_edges(), 1);
    } else {
      untried[idx] = 0;
    }
    record(r);
  }
  sol.wall_time = seconds_since(t0);
  return sol;
}

}  // namespace theseus
