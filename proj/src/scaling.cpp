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

#include "theseus/scaling.hpp"

#include <cmath>

#include "theseus/errors.hpp"
#include "theseus/objective.hpp"
#include "theseus/state.hpp"

namespace theseus {

std::vector<ScalingRow> ghz63_scaling_study(const ColoredGraph& g, std::span<const std::size_t> small_edges,
                                            const TargetState& target, std::span<const double> omegas) {
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (!(omegas[i] > 0.0)) throw InvalidParameters("omega values must be positive");
    if (i > 0 && !(omegas[i] < omegas[i - 1])) throw InvalidParameters("omega values must decrease");
  }
  std::vector<ScalingRow> rows;
  for (double omega : omegas) {
    std::vector<Complex> w = g.weights();
    for (std::size_t e : small_edges) {
      if (e >= w.size()) throw InvalidParameters("edge index out of range");
      const double phase = std::abs(w[e]) > 0.0 ? std::arg(w[e]) : 0.0;
      w[e] = std::polar(omega, phase);
    }
    const ColoredGraph scaled = g.with_weights(w);
    const ConditioningSpec c = postselection(scaled);
    rows.push_back(ScalingRow{omega, 1.0 - fidelity(scaled, target, c), event_probability(scaled, c)});
  }
  return rows;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidParameters("slope needs two or more paired points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw InvalidParameters("log-log fit needs positive values");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw InvalidParameters("slope needs distinct x values");
  return sxy / sxx;
}

}  // namespace theseus
