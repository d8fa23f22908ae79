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

#include <span>
#include <vector>

#include "theseus/graph.hpp"
#include "theseus/target.hpp"

namespace theseus {

struct ScalingRow {
  double omega = 0.0;
  double infidelity = 0.0;   ///< 1 - F
  double probability = 0.0;  ///< post-selected event probability
};

/// Sets every edge in `small_edges` to weight omega (keeping its phase),
/// then evaluates the post-selected fidelity against `target` and the event
/// probability. Throws InvalidParameters unless omegas are positive and
/// strictly decreasing.
std::vector<ScalingRow> ghz63_scaling_study(const ColoredGraph& g, std::span<const std::size_t> small_edges,
                                            const TargetState& target, std::span<const double> omegas);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace theseus
