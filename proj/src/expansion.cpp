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

#include "theseus/expansion.hpp"

#include <algorithm>
#include <cmath>

#include "theseus/errors.hpp"

namespace theseus {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

class TermEnumerator {
 public:
  TermEnumerator(const ColoredGraph& g, const ExpansionRules& rules, const TermVisitor& visit)
      : g_(g), rules_(rules), visit_(visit) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    const auto d = static_cast<std::size_t>(g.num_modes());
    counts_.assign(n * d, 0);
    photons_.assign(n, 0);
    last_incident_.assign(n, -1);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edge(i);
      bool ok = true;
      for (int x : {e.u, e.v}) {
        const auto xi = static_cast<std::size_t>(x);
        if (rules.skip_vertex[xi]) ok = false;
        if (rules.allowed_color[xi] >= 0 && e.color_at(x) != rules.allowed_color[xi]) ok = false;
        if (rules.cap[xi] == 0) ok = false;
      }
      if (!ok) continue;
      usable_.push_back(i);
      real_pair_.push_back(!g.is_virtual(e.u) && !g.is_virtual(e.v));
      for (int x : {e.u, e.v})
        last_incident_[static_cast<std::size_t>(x)] = static_cast<int>(usable_.size()) - 1;
    }
    for (std::size_t v = 0; v < n; ++v) {
      need_.push_back(rules.required[v] >= 0 ? rules.required[v] : rules.at_least[v]);
    }
  }

  void run() { descend(0); }

 private:
  void descend(std::size_t first) {
    if (leaf_ok()) emit();
    if (!can_complete(first)) return;
    for (std::size_t j = first; j < usable_.size(); ++j) {
      const Edge& e = g_.edge(usable_[j]);
      const bool pair = real_pair_[j];
      if (pair && pairs_used_ >= rules_.max_pairs) continue;
      if (!fits(e.u) || !fits(e.v)) continue;
      apply(e, +1);
      if (pair) ++pairs_used_;
      stack_.push_back(j);
      descend(j);
      stack_.pop_back();
      if (pair) --pairs_used_;
      apply(e, -1);
    }
  }

  bool fits(int x) const {
    const int c = rules_.cap[static_cast<std::size_t>(x)];
    return c < 0 || photons_[static_cast<std::size_t>(x)] < c;
  }

  void apply(const Edge& e, int delta) {
    const auto d = static_cast<std::size_t>(g_.num_modes());
    counts_[static_cast<std::size_t>(e.u) * d + static_cast<std::size_t>(e.cu)] += delta;
    counts_[static_cast<std::size_t>(e.v) * d + static_cast<std::size_t>(e.cv)] += delta;
    photons_[static_cast<std::size_t>(e.u)] += delta;
    photons_[static_cast<std::size_t>(e.v)] += delta;
  }

  bool leaf_ok() const {
    for (std::size_t v = 0; v < photons_.size(); ++v) {
      if (rules_.required[v] >= 0 && photons_[v] != rules_.required[v]) return false;
      if (photons_[v] < rules_.at_least[v]) return false;
    }
    return true;
  }

  // Upper bound on what further edges (index >= first) can still supply.
  bool can_complete(std::size_t first) const {
    int deficit = 0;
    int open_virtual = 0;
    for (std::size_t v = 0; v < photons_.size(); ++v) {
      const int missing = need_[v] - photons_[v];
      if (missing > 0) {
        if (last_incident_[v] < static_cast<int>(first)) return false;
        deficit += missing;
      }
      if (g_.is_virtual(static_cast<int>(v)) && photons_[v] == 0) ++open_virtual;
    }
    // A virtual edge puts one photon on a real vertex and one on the input.
    return deficit <= 2 * (rules_.max_pairs - pairs_used_) + 2 * open_virtual;
  }

  void emit() {
    factors_.clear();
    double coefficient = 1.0;
    for (std::size_t k = 0; k < stack_.size();) {
      std::size_t m = k;
      while (m < stack_.size() && stack_[m] == stack_[k]) ++m;
      const auto power = static_cast<std::uint32_t>(m - k);
      factors_.push_back(EdgePower{static_cast<std::uint32_t>(usable_[stack_[k]]), power});
      coefficient /= factorial(static_cast<int>(power));
      k = m;
    }
    std::vector<ModeCount> slots;
    const int d = g_.num_modes();
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (counts_[i] == 0) continue;
      slots.push_back(ModeCount{static_cast<int>(i) / d, static_cast<int>(i) % d, counts_[i]});
      if (counts_[i] > 1) coefficient *= std::sqrt(factorial(counts_[i]));
    }
    visit_(FockOccupation(std::move(slots)), coefficient, factors_);
  }

  const ColoredGraph& g_;
  const ExpansionRules& rules_;
  const TermVisitor& visit_;
  std::vector<std::size_t> usable_;
  std::vector<char> real_pair_;
  std::vector<int> last_incident_;
  std::vector<int> need_;
  std::vector<int> counts_;
  std::vector<int> photons_;
  std::vector<std::size_t> stack_;
  std::vector<EdgePower> factors_;
  int pairs_used_ = 0;
};

}  // namespace

ExpansionRules unconstrained_rules(const ColoredGraph& g, int max_pairs) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  ExpansionRules r;
  r.max_pairs = max_pairs;
  r.cap.assign(n, -1);
  r.required.assign(n, -1);
  r.at_least.assign(n, 0);
  r.allowed_color.assign(n, -1);
  r.skip_vertex.assign(n, 0);
  for (int v : g.virtual_vertices()) r.skip_vertex[static_cast<std::size_t>(v)] = 1;
  return r;
}

ExpansionRules make_rules(const ColoredGraph& g, const ConditioningSpec& c,
                          const InputAssignment* input) {
  c.validate(g);
  ExpansionRules r = unconstrained_rules(g, c.resolved_max_pairs(g));
  const std::vector<int> virtuals = g.virtual_vertices();
  if (input) {
    if (input->size() != virtuals.size())
      throw InvalidParameters("input assignment length must equal the number of virtual vertices");
    for (std::size_t k = 0; k < virtuals.size(); ++k) {
      const auto v = static_cast<std::size_t>(virtuals[k]);
      const int mode = (*input)[k];
      if (mode < 0 || mode >= g.num_modes()) throw InvalidParameters("input mode out of range");
      r.skip_vertex[v] = 0;
      r.cap[v] = 1;
      r.required[v] = 1;
      r.allowed_color[v] = mode;
    }
  }
  const bool exact_outputs = c.outputs_postselected();
  for (int v : c.outputs) {
    if (exact_outputs) {
      r.cap[static_cast<std::size_t>(v)] = 1;
      r.required[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int v : c.heralds) {
    const auto vi = static_cast<std::size_t>(v);
    if (c.detector == DetectorModel::number_resolving_one) {
      r.cap[vi] = 1;
      r.required[vi] = 1;
    } else {
      r.at_least[vi] = 1;
    }
  }
  return r;
}

void enumerate_terms(const ColoredGraph& g, const ExpansionRules& rules, const TermVisitor& visit) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (rules.cap.size() != n || rules.required.size() != n || rules.at_least.size() != n ||
      rules.allowed_color.size() != n || rules.skip_vertex.size() != n)
    throw InvalidParameters("expansion rules do not match the graph");
  if (rules.max_pairs < 0) throw InvalidParameters("max_pairs must be non-negative");
  TermEnumerator(g, rules, visit).run();
}

}  // namespace theseus
