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
#include <span>
#include <vector>

#include "theseus/graph.hpp"
#include "theseus/state.hpp"
#include "theseus/target.hpp"

namespace theseus {

enum class L1Norm {
  componentwise,  ///< sum |Re w| + |Im w|
  modulus,        ///< sum |w|
};

struct LossOptions {
  double alpha = 0.0;
  L1Norm l1 = L1Norm::componentwise;
};

/// Fidelity of the conditioned output against a target, compiled once per
/// topology. Every output amplitude is a polynomial in the edge weights; the
/// polynomials are stored so that fidelity and its gradient can be evaluated
/// for any weights on the same edges.
///
/// F = sum_b |S_b|^2 / (k N^2) where S_b = sum over inputs and outputs of
/// conj(target) * amplitude within herald branch b, k is the number of
/// inputs (1 for a state) and N^2 the total squared norm.
class CompiledObjective {
 public:
  CompiledObjective(const ColoredGraph& g, const Target& target, const ConditioningSpec& c);

  const ColoredGraph& graph() const { return graph_; }
  std::size_t num_parameters() const { return 2 * graph_.num_edges(); }
  std::size_t num_monomials() const { return monomials_.size(); }
  /// True when every amplitude is a homogeneous polynomial of one degree, so
  /// fidelity does not change under a common rescaling of the weights.
  bool scale_invariant() const { return scale_invariant_; }
  /// Per vertex, the photon number it carries in every amplitude term, or -1
  /// when that number varies. Scaling all edges at a vertex with a fixed
  /// count by a common factor leaves the fidelity unchanged.
  const std::vector<int>& gauge_photons() const { return gauge_photons_; }

  /// NaN when the conditioned state vanishes.
  double fidelity(std::span<const double> params) const;
  /// Writes dF/dparams; returns F (NaN when degenerate).
  double fidelity_gradient(std::span<const double> params, std::span<double> grad) const;

  double loss(std::span<const double> params, const LossOptions& opt) const;
  double loss_gradient(std::span<const double> params, const LossOptions& opt,
                       std::span<double> grad) const;

 private:
  struct Monomial {
    std::uint32_t slot;
    double coefficient;
    std::uint32_t first_factor;
    std::uint32_t num_factors;
  };
  struct Factor {
    std::uint32_t edge;
    std::uint32_t power;
  };

  void amplitudes(std::span<const double> params, std::vector<Complex>& amps) const;
  double from_amplitudes(const std::vector<Complex>& amps, std::vector<Complex>* dF_dA) const;

  ColoredGraph graph_;
  double inputs_ = 1.0;
  std::vector<Monomial> monomials_;
  std::vector<Factor> factors_;
  std::vector<Complex> slot_target_;       ///< conj(target coefficient) per slot
  std::vector<std::uint32_t> slot_branch_;
  std::size_t num_branches_ = 0;
  bool scale_invariant_ = false;
  std::vector<int> gauge_photons_;
};

/// L1 penalty alpha * |params| under the chosen norm.
double l1_penalty(std::span<const double> params, const LossOptions& opt);
/// Adds the L1 subgradient (sign(0) = 0) to `grad`.
void add_l1_gradient(std::span<const double> params, const LossOptions& opt, std::span<double> grad);

/// Throws DegenerateState when the conditioned state vanishes.
double fidelity(const ColoredGraph& g, const TargetState& t, const ConditioningSpec& c);
double gate_fidelity(const ColoredGraph& g, const TargetGate& t, const ConditioningSpec& c);
/// Throws InvalidParameters unless 0 <= alpha < 1.
double loss(const ColoredGraph& g, const Target& t, const ConditioningSpec& c, double alpha,
            L1Norm l1 = L1Norm::componentwise);
/// Gradient with respect to (Re w_0, Im w_0, Re w_1, ...).
std::vector<double> loss_gradient(const ColoredGraph& g, const Target& t, const ConditioningSpec& c,
                                  double alpha, L1Norm l1 = L1Norm::componentwise);

}  // namespace theseus
