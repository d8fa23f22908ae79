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

#include <map>
#include <variant>
#include <vector>

#include "theseus/graph.hpp"
#include "theseus/state.hpp"

namespace theseus {

/// Normalized superposition of output kets.
struct TargetState {
  std::map<KetTerm, Complex> terms;

  /// Number of output slots per ket; 0 for an empty target.
  std::size_t arity() const { return terms.empty() ? 0 : terms.begin()->first.size(); }
  /// Largest mode used plus one.
  int min_modes() const;
  double squared_norm() const;

  friend bool operator==(const TargetState&, const TargetState&) = default;
};

/// Throws InvalidParameters for mixed ket lengths, negative modes, or zero norm.
TargetState make_target(std::map<KetTerm, Complex> terms);

/// Desired output for each basis input of the virtual vertices.
struct TargetGate {
  std::vector<InputAssignment> inputs;
  std::vector<TargetState> outputs;

  friend bool operator==(const TargetGate&, const TargetGate&) = default;
};

/// Throws InvalidParameters for duplicate inputs, size mismatches or
/// inconsistent output arity.
TargetGate make_gate(std::vector<InputAssignment> inputs, std::vector<TargetState> outputs);

using Target = std::variant<TargetState, TargetGate>;

/// (1/sqrt d) sum_i |i,i,...,i>, n parties.
TargetState ghz(int n, int d);
/// ghz(2, d).
TargetState bell(int d);
/// Control of dimension dc, target of dimension dt; |a,b> -> |a, (a+b) mod dt>.
TargetGate cnot(int dc, int dt);

/// Output arity of a target (ket length).
std::size_t target_arity(const Target& t);
int target_min_modes(const Target& t);
/// Number of virtual inputs a gate needs, 0 for states.
std::size_t target_input_count(const Target& t);

/// Max |a - b| over all coefficients (missing entries count as 0).
double target_distance(const TargetState& a, const TargetState& b);

}  // namespace theseus
