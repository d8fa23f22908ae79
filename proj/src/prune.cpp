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

#include <algorithm>
#include <cmath>

#include "theseus/theseus.hpp"

namespace theseus {

std::vector<double> boltzmann_probabilities(std::span<const double> moduli, double temperature) {
  if (moduli.empty()) throw NoEdges("no edge to prune");
  if (!(temperature > 0.0)) throw InvalidParameters("boltzmann temperature must be positive");
  const double lo = *std::min_element(moduli.begin(), moduli.end());
  std::vector<double> p(moduli.size());
  double total = 0.0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    p[i] = std::exp(-(moduli[i] - lo) / temperature);
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

std::size_t select_edge_to_prune(std::span<const double> moduli, const PrunePolicy& policy,
                                 std::mt19937_64& rng) {
  if (moduli.empty()) throw NoEdges("no edge to prune");
  switch (policy.kind) {
    case PruneKind::uniform_random:
      return std::uniform_int_distribution<std::size_t>(0, moduli.size() - 1)(rng);
    case PruneKind::greedy_min_weight:
      return static_cast<std::size_t>(std::min_element(moduli.begin(), moduli.end()) - moduli.begin());
    case PruneKind::boltzmann: {
      const std::vector<double> p = boltzmann_probabilities(moduli, policy.temperature);
      const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      double acc = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        if (u < acc) return i;
      }
      return p.size() - 1;
    }
  }
  return 0;
}

}  // namespace theseus
