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

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "theseus/errors.hpp"
#include "theseus/graph.hpp"
#include "theseus/optimizer.hpp"
#include "theseus/state.hpp"
#include "theseus/target.hpp"

namespace theseus {

enum class PruneKind { uniform_random, greedy_min_weight, boltzmann };

struct PrunePolicy {
  PruneKind kind = PruneKind::greedy_min_weight;
  double temperature = 1.0;  ///< boltzmann only
};

/// Picks an index into `moduli`. Throws NoEdges when empty and
/// InvalidParameters for a non-positive boltzmann temperature.
std::size_t select_edge_to_prune(std::span<const double> moduli, const PrunePolicy& policy,
                                 std::mt19937_64& rng);
/// Selection probabilities used by the boltzmann policy.
std::vector<double> boltzmann_probabilities(std::span<const double> moduli, double temperature);

/// One optimization in the search: step 0 is the initial graph; later steps
/// are prune attempts, accepted or rolled back.
struct TraceRecord {
  int step = 0;
  std::optional<Edge> edge;  ///< removed edge (weight as before removal)
  bool accepted = false;
  double fidelity = 0.0;
  double loss = 0.0;
  int restarts = 0;
  int edges_left = 0;
  double time = 0.0;  ///< seconds since the search started
};

struct Solution {
  ColoredGraph graph;
  double fidelity = 0.0;
  double loss = 0.0;
  bool qualified = false;
  std::vector<TraceRecord> trace;
  double wall_time = 0.0;
};

/// Raised when even the starting graph cannot be brought above F_limit.
class SearchFailed : public Error {
 public:
  explicit SearchFailed(Solution best)
      : Error("no qualified solution on the starting graph"), best_(std::move(best)) {}
  const Solution& best() const { return best_; }

 private:
  Solution best_;
};

struct SearchOptions {
  /// Prune attempts; unset means 5 * initial edge count.
  std::optional<int> step_budget;
  /// Stop pruning (keeping the current qualified graph) after this long.
  std::optional<double> time_budget_seconds;
  /// Called after each trace record is appended.
  std::function<void(const TraceRecord&)> on_record;
};

/// Weights of `start` are ignored; every run begins from random points.
Solution run_theseus(const Target& target, const ColoredGraph& start, const ConditioningSpec& c,
                     const OptimizerConfig& cfg, const PrunePolicy& policy, const SearchOptions& opt = {});

/// Starting graph for a target: the complete graph on `n_real` real vertices
/// with `d` modes, plus one virtual vertex per gate input.
ColoredGraph starting_graph(const Target& target, int n_real, int d);

}  // namespace theseus
