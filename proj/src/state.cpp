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

#include "theseus/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "theseus/errors.hpp"
#include "theseus/expansion.hpp"

namespace theseus {
namespace {

bool sorted_unique(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

Complex monomial_value(const ColoredGraph& g, std::span<const EdgePower> factors) {
  Complex p{1.0, 0.0};
  for (const EdgePower& f : factors) {
    const Complex w = g.edge(f.edge).weight;
    for (std::uint32_t k = 0; k < f.power; ++k) p *= w;
  }
  return p;
}

HeraldedState conditioned(const ColoredGraph& g, const ConditioningSpec& c,
                          const InputAssignment* input) {
  const ExpansionRules rules = make_rules(g, c, input);
  HeraldedState out;
  enumerate_terms(g, rules, [&](const FockOccupation& occ, double coef,
                                std::span<const EdgePower> factors) {
    const Complex amp = coef * monomial_value(g, factors);
    FockOccupation herald = occ.restricted_to(c.heralds);
    FockOccupation output = occ.restricted_to(c.outputs);
    auto [it, inserted] = out.branches.try_emplace(std::move(herald));
    it->second.add(output, amp);
  });
  for (auto it = out.branches.begin(); it != out.branches.end();) {
    it->second.prune();
    if (it->second.size() == 0)
      it = out.branches.erase(it);
    else
      ++it;
  }
  return out;
}

}  // namespace

void ConditioningSpec::validate(const ColoredGraph& g) const {
  if (!sorted_unique(outputs) || !sorted_unique(heralds))
    throw InvalidParameters("output and herald vertex lists must be sorted and unique");
  std::vector<int> all;
  for (int v : outputs) all.push_back(v);
  for (int v : heralds) all.push_back(v);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InvalidParameters("output and herald vertex sets overlap");
  if (all != g.real_vertices())
    throw InvalidParameters("outputs and heralds must together cover every real vertex");
  if (max_pairs && *max_pairs < 0) throw InvalidParameters("max_pairs must be non-negative");
}

int ConditioningSpec::leading_pairs(const ColoredGraph& g) const {
  const int photons = static_cast<int>(outputs.size() + heralds.size());
  const int from_inputs = static_cast<int>(g.virtual_vertices().size());
  return std::max(0, (photons - from_inputs + 1) / 2);
}

int ConditioningSpec::resolved_max_pairs(const ColoredGraph& g) const {
  if (max_pairs) return *max_pairs;
  return leading_pairs(g) + 2;
}

ConditioningSpec postselection(const ColoredGraph& g) {
  ConditioningSpec c;
  c.outputs = g.real_vertices();
  c.postselect_outputs = true;
  return c;
}

ConditioningSpec heralding(const ColoredGraph& g, std::vector<int> heralds,
                           DetectorModel detector, std::optional<int> max_pairs) {
  std::sort(heralds.begin(), heralds.end());
  ConditioningSpec c;
  for (int v : g.real_vertices())
    if (!std::binary_search(heralds.begin(), heralds.end(), v)) c.outputs.push_back(v);
  c.heralds = std::move(heralds);
  c.detector = detector;
  c.max_pairs = max_pairs;
  return c;
}

FockOccupation ket_occupation(std::span<const int> outputs, const KetTerm& t) {
  if (t.size() != outputs.size())
    throw InvalidParameters("ket length " + std::to_string(t.size()) + " does not match " +
                            std::to_string(outputs.size()) + " output vertices");
  std::vector<ModeCount> slots;
  for (std::size_t i = 0; i < t.size(); ++i) slots.push_back(ModeCount{outputs[i], t[i], 1});
  return FockOccupation(std::move(slots));
}

Complex term_amplitude(const ColoredGraph& g, const KetTerm& t) {
  const std::vector<int> reals = g.real_vertices();
  if (t.size() != reals.size())
    throw InvalidParameters("ket term must assign one mode per real vertex");
  std::vector<int> mode_of(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < reals.size(); ++i) mode_of[static_cast<std::size_t>(reals[i])] = t[i];

  // Keep only edges whose colors agree with the term; every perfect matching of
  // that subgraph contributes its weight product.
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (g.is_virtual(e.u) || g.is_virtual(e.v)) continue;
    if (mode_of[static_cast<std::size_t>(e.u)] == e.cu && mode_of[static_cast<std::size_t>(e.v)] == e.cv)
      kept.push_back(e);
  }
  const ColoredGraph sub(g.num_vertices(), g.num_modes(), std::move(kept),
                         std::vector<VertexKind>(g.kinds().begin(), g.kinds().end()));
  Complex total{};
  for (const Matching& m : enumerate_perfect_matchings(sub, reals)) {
    Complex p{1.0, 0.0};
    for (std::size_t ei : m.edges) p *= sub.edge(ei).weight;
    total += p;
  }
  return total;
}

PostselectedState postselected_state(const ColoredGraph& g) {
  const std::vector<int> reals = g.real_vertices();
  if (reals.size() % 2 != 0) throw InvalidParameters("post-selection needs an even number of real vertices");
  std::vector<int> slot(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < reals.size(); ++i) slot[static_cast<std::size_t>(reals[i])] = static_cast<int>(i);

  PostselectedState out;
  KetTerm key(reals.size(), 0);
  for (const Matching& m : enumerate_perfect_matchings(g, reals)) {
    Complex p{1.0, 0.0};
    for (std::size_t ei : m.edges) {
      const Edge& e = g.edge(ei);
      p *= e.weight;
      key[static_cast<std::size_t>(slot[static_cast<std::size_t>(e.u)])] = e.cu;
      key[static_cast<std::size_t>(slot[static_cast<std::size_t>(e.v)])] = e.cv;
    }
    out.amplitudes[key] += p;
  }
  double sq = 0.0;
  for (auto it = out.amplitudes.begin(); it != out.amplitudes.end();) {
    if (std::abs(it->second) < kAmplitudeFloor) {
      it = out.amplitudes.erase(it);
    } else {
      sq += std::norm(it->second);
      ++it;
    }
  }
  if (out.amplitudes.empty()) throw DegenerateState("post-selected state has no nonzero term");
  out.norm = std::sqrt(sq);
  return out;
}

FockState expand_phi(const ColoredGraph& g, int max_pairs) {
  if (max_pairs < 0) throw InvalidParameters("max_pairs must be non-negative");
  FockState state;
  enumerate_terms(g, unconstrained_rules(g, max_pairs),
                  [&](const FockOccupation& occ, double coef, std::span<const EdgePower> factors) {
                    state.add(occ, coef * monomial_value(g, factors));
                  });
  state.prune();
  return state;
}

double HeraldedState::squared_norm() const {
  double s = 0.0;
  for (const auto& [record, branch] : branches) s += branch.squared_norm();
  return s;
}

double HeraldedState::norm() const { return std::sqrt(squared_norm()); }

const FockState* HeraldedState::find_branch(const FockOccupation& herald_record) const {
  auto it = branches.find(herald_record);
  return it == branches.end() ? nullptr : &it->second;
}

HeraldedState heralded_state(const ColoredGraph& g, const ConditioningSpec& c) {
  HeraldedState s = conditioned(g, c, nullptr);
  if (s.branches.empty()) throw DegenerateState("no herald-satisfying term within the truncation");
  return s;
}

std::vector<HeraldedState> transformation_outputs(const ColoredGraph& g,
                                                  std::span<const InputAssignment> inputs,
                                                  const ConditioningSpec& c) {
  const std::vector<int> virtuals = g.virtual_vertices();
  for (const InputAssignment& in : inputs) {
    if (in.size() != virtuals.size())
      throw InvalidParameters("input assignment length must equal the number of virtual vertices");
    for (std::size_t k = 0; k < virtuals.size(); ++k) {
      const bool has_edge = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return e.touches(virtuals[k]) && e.color_at(virtuals[k]) == in[k];
      });
      if (!has_edge)
        throw InvalidParameters("virtual vertex " + std::to_string(virtuals[k]) +
                                " has no edge for input mode " + std::to_string(in[k]));
    }
  }
  std::vector<HeraldedState> out;
  bool any = false;
  for (const InputAssignment& in : inputs) {
    out.push_back(conditioned(g, c, &in));
    any = any || !out.back().branches.empty();
  }
  if (!any) throw DegenerateState("every transformation output vanishes");
  return out;
}

double event_probability(const ColoredGraph& g, const ConditioningSpec& c) {
  if (!g.virtual_vertices().empty())
    throw InvalidParameters("event_probability expects a graph without virtual vertices");
  return conditioned(g, c, nullptr).squared_norm();
}

double count_rate(double probability, double repetition_rate_hz) {
  if (!(probability >= 0.0 && probability <= 1.0))
    throw InvalidParameters("probability must lie in [0, 1]");
  return probability * repetition_rate_hz;
}

}  // namespace theseus
