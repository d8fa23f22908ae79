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

#include <vector>

#include "theseus/graph.hpp"
#include "theseus/state.hpp"
#include "theseus/target.hpp"

namespace theseus {

/// Four-qubit GHZ cycle: ab and cd in mode 0, ac and bd in mode 1, unit weights.
ColoredGraph ghz4_cycle();

/// Heralded three-dimensional Bell source. Paths a=0 and b=1 are the outputs,
/// 2..7 are single-mode heralds. Edges touching a or b have modulus v, the
/// herald-herald edges modulus w.
ColoredGraph heralded_bell_graph(double v, double w);
std::vector<int> heralded_bell_heralds();
/// (|00> - |11> - |22>) / sqrt 3, the state produced with the built-in phases.
TargetState heralded_bell_target();

/// Six-photon three-dimensional GHZ source: two triangles joined by rungs.
/// The rungs carry weight omega, every other edge weight 1.
struct PrismGraph {
  ColoredGraph graph;
  std::vector<std::size_t> rungs;  ///< edge indices of the small-weight class
};
PrismGraph ghz63_prism(double omega);

/// Two-qubit CNOT with virtual inputs 4 (control) and 5 (target), outputs
/// a=0, b=1 and heralds 2, 3.
ColoredGraph cnot_graph();
/// Coincidence on a and b, exactly one photon on each herald.
ConditioningSpec cnot_conditioning(const ColoredGraph& g);

}  // namespace theseus
