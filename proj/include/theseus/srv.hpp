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

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "theseus/optimizer.hpp"
#include "theseus/state.hpp"
#include "theseus/target.hpp"
#include "theseus/theseus.hpp"

namespace theseus {

/// Ranks of the three single-party reduced density matrices, non-increasing.
struct SchmidtRankVector {
  std::array<int, 3> ranks{1, 1, 1};
  std::string to_string() const;
  friend auto operator<=>(const SchmidtRankVector&, const SchmidtRankVector&) = default;
};

/// Throws InvalidState unless the state is normalized, tripartite and within
/// `dims`.
SchmidtRankVector srv_of_state(const std::map<KetTerm, Complex>& state, std::array<int, 3> dims);

/// Throws InvalidParameters for ranks that are not sorted, below 1, above
/// max_dim, or violate r1 <= r2 * r3.
void validate_srv_class(const SchmidtRankVector& srv, int max_dim);

/// Genuinely tripartite-entangled classes (every rank >= 2) up to max_dim.
std::vector<SchmidtRankVector> srv_classes(int max_dim);

/// sum_{i<r1} |i, b_i, c_i> / sqrt(r1) with distinct pairs (b_i, c_i) that
/// use every value below r2 and r3 respectively.
TargetState srv_target(const SchmidtRankVector& srv);

/// Six vertices: three outputs carrying r1, r2, r3 modes and three
/// single-mode heralds, every vertex detected with exactly one photon.
struct SrvSetup {
  ColoredGraph start;
  ConditioningSpec conditioning;
};
SrvSetup srv_setup(const SchmidtRankVector& srv);

/// Normalized conditioned output of a solution graph for the srv setup.
std::map<KetTerm, Complex> srv_output_state(const ColoredGraph& g, const ConditioningSpec& c);

struct SrvResult {
  SchmidtRankVector requested;
  SchmidtRankVector verified;
  Solution solution;
  double seconds = 0.0;
};

struct SrvBenchmarkReport {
  std::vector<SrvResult> achieved;
  std::vector<SchmidtRankVector> missed;
  double seconds = 0.0;
};

/// Runs the search per class in srv_classes(max_dim) order, sharing the
/// wall-clock budget. A class counts as achieved when the search qualifies
/// and the re-computed ranks equal the request.
SrvBenchmarkReport srv_benchmark(int max_dim, double budget_seconds, const OptimizerConfig& cfg,
                                 const PrunePolicy& policy,
                                 const std::function<void(const SchmidtRankVector&, bool)>& progress = {});

}  // namespace theseus
