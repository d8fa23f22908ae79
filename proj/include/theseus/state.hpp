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
#include <optional>
#include <span>
#include <vector>

#include "theseus/fock.hpp"
#include "theseus/graph.hpp"

namespace theseus {

/// One mode per output vertex, in ascending vertex order.
using KetTerm = std::vector<int>;

enum class DetectorModel {
  number_resolving_one,    ///< herald clicks on exactly one photon
  threshold_at_least_one,  ///< herald clicks on one or more photons
};

/// How a graph's multi-pair state is conditioned.
///
/// With no heralds the outputs are always post-selected on one photon each
/// (coincidence detection in every path). With heralds the outputs are left
/// unmeasured unless `postselect_outputs` is set.
struct ConditioningSpec {
  std::vector<int> outputs;
  std::vector<int> heralds;
  DetectorModel detector = DetectorModel::threshold_at_least_one;
  /// Truncation in pair-creation events between real vertices. Unset means
  /// leading order + 2.
  std::optional<int> max_pairs;
  bool postselect_outputs = false;

  bool outputs_postselected() const { return postselect_outputs || heralds.empty(); }
  /// Throws InvalidParameters unless outputs and heralds are disjoint, sorted,
  /// real and together cover every real vertex of `g`.
  void validate(const ColoredGraph& g) const;
  /// Pair-creation events needed for one photon per output and per herald.
  int leading_pairs(const ColoredGraph& g) const;
  int resolved_max_pairs(const ColoredGraph& g) const;
};

/// Post-selection on one photon in every real vertex.
ConditioningSpec postselection(const ColoredGraph& g);
/// Outputs are the real vertices not listed as heralds.
ConditioningSpec heralding(const ColoredGraph& g, std::vector<int> heralds,
                           DetectorModel detector = DetectorModel::threshold_at_least_one,
                           std::optional<int> max_pairs = std::nullopt);

/// Sum over perfect matchings of real vertices whose colors agree with `t`
/// of the product of edge weights.
Complex term_amplitude(const ColoredGraph& g, const KetTerm& t);

struct PostselectedState {
  std::map<KetTerm, Complex> amplitudes;  ///< unnormalized
  double norm = 0.0;                      ///< sqrt of summed |amplitude|^2
};

/// Throws DegenerateState when every amplitude vanishes.
PostselectedState postselected_state(const ColoredGraph& g);

/// Fock expansion of the pair-creation state up to `max_pairs` events between
/// real vertices. Edges touching virtual vertices are ignored here; see
/// transformation_outputs.
FockState expand_phi(const ColoredGraph& g, int max_pairs);

/// Conditioned state split into branches by the full herald record. Branches
/// are mutually incoherent; amplitudes within a branch add coherently.
struct HeraldedState {
  std::map<FockOccupation, FockState> branches;  ///< herald record -> output state
  double squared_norm() const;
  double norm() const;
  /// Output state of the branch with this herald record, or null.
  const FockState* find_branch(const FockOccupation& herald_record) const;
};

/// Throws DegenerateState when no herald-satisfying term survives.
HeraldedState heralded_state(const ColoredGraph& g, const ConditioningSpec& c);

/// Assignment of one input mode per virtual vertex, ascending vertex order.
using InputAssignment = std::vector<int>;

/// Conditioned output for each input assignment. Throws DegenerateState when
/// every output vanishes and InvalidParameters when a virtual vertex lacks an
/// edge of a requested input mode.
std::vector<HeraldedState> transformation_outputs(const ColoredGraph& g,
                                                  std::span<const InputAssignment> inputs,
                                                  const ConditioningSpec& c);

/// Total squared norm of all herald-satisfying branches (unnormalized).
double event_probability(const ColoredGraph& g, const ConditioningSpec& c);
/// Events per second. Throws InvalidParameters unless p is in [0, 1].
double count_rate(double probability, double repetition_rate_hz);

/// Occupation with one photon per output vertex in the modes of `t`.
FockOccupation ket_occupation(std::span<const int> outputs, const KetTerm& t);

}  // namespace theseus
