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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "theseus/fock.hpp"
#include "theseus/graph.hpp"
#include "theseus/state.hpp"

namespace theseus {

/// Edge index raised to a power inside a monomial of edge weights.
struct EdgePower {
  std::uint32_t edge = 0;
  std::uint32_t power = 0;
};

/// Per-vertex photon-number rules applied while enumerating multi-pair terms.
struct ExpansionRules {
  int max_pairs = 0;                ///< bound on real-real edge multiplicity sum
  std::vector<int> cap;             ///< max photons per vertex, -1 unbounded
  std::vector<int> required;        ///< exact photons per vertex at a leaf, -1 free
  std::vector<int> at_least;        ///< minimum photons per vertex at a leaf
  std::vector<int> allowed_color;   ///< only this color at the vertex, -1 any
  std::vector<char> skip_vertex;    ///< edges touching the vertex are not used
};

/// Rules for the conditioned state of `g` under `c`, optionally for one input
/// assignment of the virtual vertices.
ExpansionRules make_rules(const ColoredGraph& g, const ConditioningSpec& c,
                          const InputAssignment* input);

/// Rules that accept every term up to `max_pairs` real pairs.
ExpansionRules unconstrained_rules(const ColoredGraph& g, int max_pairs);

/// Visits every edge multiset allowed by `rules`. The coefficient passed is the
/// bosonic one: prod 1/k_e! times prod sqrt(n_vc!) over occupied slots, so the
/// amplitude of the term is coefficient * prod w_e^k_e.
using TermVisitor =
    std::function<void(const FockOccupation&, double coefficient, std::span<const EdgePower>)>;
void enumerate_terms(const ColoredGraph& g, const ExpansionRules& rules, const TermVisitor& visit);

}  // namespace theseus
