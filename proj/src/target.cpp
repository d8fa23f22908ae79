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

#include "theseus/target.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "theseus/errors.hpp"

namespace theseus {

int TargetState::min_modes() const {
  int m = 0;
  for (const auto& [ket, c] : terms)
    for (int x : ket) m = std::max(m, x + 1);
  return m;
}

double TargetState::squared_norm() const {
  double s = 0.0;
  for (const auto& [ket, c] : terms) s += std::norm(c);
  return s;
}

TargetState make_target(std::map<KetTerm, Complex> terms) {
  TargetState t;
  std::size_t len = 0;
  bool first = true;
  for (auto& [ket, c] : terms) {
    if (first) len = ket.size();
    first = false;
    if (ket.size() != len) throw InvalidParameters("kets of a target must all have the same length");
    for (int x : ket)
      if (x < 0) throw InvalidParameters("ket modes must be non-negative");
    if (c != Complex{}) t.terms.emplace(ket, c);
  }
  const double norm = std::sqrt(t.squared_norm());
  if (!(norm > 0.0)) throw InvalidParameters("target has zero norm");
  for (auto& [ket, c] : t.terms) c /= norm;
  return t;
}

TargetGate make_gate(std::vector<InputAssignment> inputs, std::vector<TargetState> outputs) {
  if (inputs.empty()) throw InvalidParameters("gate needs at least one input");
  if (inputs.size() != outputs.size()) throw InvalidParameters("gate needs one output per input");
  std::set<InputAssignment> seen;
  for (const auto& in : inputs) {
    if (in.size() != inputs.front().size()) throw InvalidParameters("gate inputs differ in length");
    if (!seen.insert(in).second) throw InvalidParameters("gate inputs must be distinct");
  }
  for (const auto& out : outputs) {
    if (out.arity() != outputs.front().arity()) throw InvalidParameters("gate outputs differ in length");
    if (std::abs(out.squared_norm() - 1.0) > 1e-12) throw InvalidParameters("gate output is not normalized");
  }
  return TargetGate{std::move(inputs), std::move(outputs)};
}

TargetState ghz(int n, int d) {
  if (n < 1 || d < 1 || d > 10) throw InvalidParameters("ghz needs n >= 1 and 1 <= d <= 10");
  std::map<KetTerm, Complex> terms;
  for (int i = 0; i < d; ++i) terms[KetTerm(static_cast<std::size_t>(n), i)] = 1.0;
  return make_target(std::move(terms));
}

TargetState bell(int d) { return ghz(2, d); }

TargetGate cnot(int dc, int dt) {
  if (dc < 1 || dt < 1 || dc > 10 || dt > 10) throw InvalidParameters("cnot dimensions must lie in 1..10");
  std::vector<InputAssignment> inputs;
  std::vector<TargetState> outputs;
  for (int a = 0; a < dc; ++a) {
    for (int b = 0; b < dt; ++b) {
      inputs.push_back({a, b});
      outputs.push_back(make_target({{{a, (a + b) % dt}, 1.0}}));
    }
  }
  return make_gate(std::move(inputs), std::move(outputs));
}

std::size_t target_arity(const Target& t) {
  if (const auto* s = std::get_if<TargetState>(&t)) return s->arity();
  return std::get<TargetGate>(t).outputs.front().arity();
}

int target_min_modes(const Target& t) {
  if (const auto* s = std::get_if<TargetState>(&t)) return s->min_modes();
  const auto& g = std::get<TargetGate>(t);
  int m = 0;
  for (const auto& o : g.outputs) m = std::max(m, o.min_modes());
  for (const auto& in : g.inputs)
    for (int x : in) m = std::max(m, x + 1);
  return m;
}

std::size_t target_input_count(const Target& t) {
  if (std::holds_alternative<TargetState>(t)) return 0;
  return std::get<TargetGate>(t).inputs.front().size();
}

double target_distance(const TargetState& a, const TargetState& b) {
  double worst = 0.0;
  for (const auto& [ket, c] : a.terms) {
    auto it = b.terms.find(ket);
    worst = std::max(worst, std::abs(c - (it == b.terms.end() ? Complex{} : it->second)));
  }
  for (const auto& [ket, c] : b.terms)
    if (!a.terms.contains(ket)) worst = std::max(worst, std::abs(c));
  return worst;
}

}  // namespace theseus
