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
#include <optional>
#include <span>
#include <vector>

#include "theseus/objective.hpp"

namespace theseus {

/// How "magnitude of the weights" is measured for the omega_limit check.
enum class WeightNorm {
  max_component,  ///< max |x_i| over the flat real vector
  max_modulus,    ///< max |w_e| over edges
};

struct OptimizerConfig {
  double alpha = 0.05;
  double F_limit = 0.95;
  double omega_limit = 1.0;
  int c_limit = 10;
  int max_iterations = 500;
  double gradient_tolerance = 1e-8;
  /// Stop when a step lowers the loss by less than this, relative to max(1, |L|).
  double function_tolerance = 1e-10;
  double init_range = 1.0;
  std::uint64_t seed = 0;
  L1Norm l1 = L1Norm::componentwise;
  WeightNorm weight_norm = WeightNorm::max_component;

  /// Throws InvalidParameters when a field is out of range.
  void validate() const;
  LossOptions loss_options() const { return LossOptions{alpha, l1}; }
};

/// Value and gradient at x. The gradient buffer has the length of x.
using LossFunction = std::function<double(std::span<const double> x, std::span<double> grad)>;

/// i.i.d. uniform on [-init_range, init_range]. `stream` selects an
/// independent sequence for the same seed.
std::vector<double> random_init(std::size_t len, const OptimizerConfig& cfg, std::uint64_t stream = 0);

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// BFGS with a dense inverse-Hessian approximation and a strong-Wolfe line
/// search. Returns the best point seen, so value <= f(x0). A non-finite f or
/// gradient at x0 returns x0 unconverged; non-finite trial points inside the
/// line search shorten the step.
MinimizeResult minimize(const LossFunction& f, std::span<const double> x0, const OptimizerConfig& cfg);

struct RestartProblem {
  LossFunction loss;
  std::function<double(std::span<const double>)> fidelity;
  /// Optional map applied to each run's result before it is judged, e.g. a
  /// rescaling that leaves the fidelity unchanged.
  std::function<void(std::vector<double>&)> canonicalize;
};

struct RestartResult {
  std::vector<double> x;
  double loss = 0.0;
  double fidelity = 0.0;
  int restarts_used = 0;
  bool qualified = false;
};

double weight_magnitude(std::span<const double> x, WeightNorm norm);

/// Up to c_limit restarts; returns the first qualifying one (F >= F_limit and
/// weight magnitude <= omega_limit), else the lowest-loss run. A warm start,
/// when given, replaces the random point of the first restart.
RestartResult optimize_with_restarts(const RestartProblem& p, std::size_t len, const OptimizerConfig& cfg,
                                     std::optional<std::span<const double>> warm_start = std::nullopt);

/// Scales x so that weight_magnitude(x) equals `magnitude`; zero vectors are
/// left alone.
void rescale_weights(std::vector<double>& x, double magnitude, WeightNorm norm);

/// Uses the fidelity-preserving rescalings of `obj` to bring x to a
/// canonical scale. Vertices with a fixed photon count are rescaled, keeping
/// every amplitude, to the point of least L1 norm; for scale-invariant
/// objectives the whole vector is then scaled to weight magnitude
/// `magnitude`.
void balance_weights(const CompiledObjective& obj, std::vector<double>& x, double magnitude, WeightNorm norm);

/// Binds a compiled objective. The L1 term alone would shrink weights along
/// directions that leave the fidelity unchanged, so each result is passed
/// through balance_weights (with omega_limit) before it is judged.
RestartProblem make_problem(const CompiledObjective& obj, const OptimizerConfig& cfg);

}  // namespace theseus
