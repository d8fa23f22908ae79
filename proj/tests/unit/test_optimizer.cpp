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

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "theseus/errors.hpp"
#include "theseus/objective.hpp"
#include "theseus/optimizer.hpp"
#include "theseus/reference.hpp"

using namespace theseus;

namespace {

double quadratic(std::span<const double> x, std::span<double> g) {
  double f = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    f += (x[i] - 3.0) * (x[i] - 3.0);
    g[i] = 2.0 * (x[i] - 3.0);
  }
  return f;
}

double rosenbrock(std::span<const double> x, std::span<double> g) {
  const double a = 1.0 - x[0];
  const double b = x[1] - x[0] * x[0];
  g[0] = -2.0 * a - 400.0 * x[0] * b;
  g[1] = 200.0 * b;
  return a * a + 100.0 * b * b;
}

}  // namespace

TEST_CASE("config validation") {
  OptimizerConfig c;
  CHECK_NOTHROW(c.validate());
  c.F_limit = 0.0;
  CHECK_THROWS_AS(c.validate(), InvalidParameters);
  c = {};
  c.alpha = 1.0;
  CHECK_THROWS_AS(c.validate(), InvalidParameters);
  c = {};
  c.c_limit = 0;
  CHECK_THROWS_AS(c.validate(), InvalidParameters);
}

TEST_CASE("random_init") {
  OptimizerConfig cfg;
  cfg.seed = 42;
  CHECK(random_init(48, cfg) == random_init(48, cfg));
  CHECK(random_init(48, cfg, 1) != random_init(48, cfg, 0));
  cfg.init_range = 0.5;
  for (double v : random_init(1000, cfg)) {
    CHECK(v >= -0.5);
    CHECK(v <= 0.5);
  }
  CHECK_THROWS_AS(random_init(0, cfg), InvalidParameters);

  cfg.init_range = 1.0;
  const std::size_t n = 100000;
  const auto x = random_init(n, cfg);
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double sigma = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(mean) < 3.0 * sigma / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("minimize a quadratic") {
  OptimizerConfig cfg;
  const std::vector<double> x0(5, 0.0);
  const MinimizeResult r = minimize(quadratic, x0, cfg);
  CHECK(r.converged);
  for (double v : r.x) CHECK(std::abs(v - 3.0) < 1e-6);
  CHECK(r.value <= 45.0);
}

TEST_CASE("minimize Rosenbrock") {
  OptimizerConfig cfg;
  cfg.function_tolerance = 0.0;
  const std::vector<double> x0{-1.2, 1.0};
  const MinimizeResult r = minimize(rosenbrock, x0, cfg);
  CHECK(std::abs(r.x[0] - 1.0) < 1e-4);
  CHECK(std::abs(r.x[1] - 1.0) < 1e-4);
}

TEST_CASE("best point is never worse than the start") {
  OptimizerConfig cfg;
  cfg.max_iterations = 3;
  const std::vector<double> x0{-1.2, 1.0};
  std::vector<double> g(2);
  const double f0 = rosenbrock(x0, g);
  const MinimizeResult r = minimize(rosenbrock, x0, cfg);
  CHECK(r.value <= f0);
  CHECK(rosenbrock(r.x, g) == r.value);
}

TEST_CASE("non-finite start is reported unconverged") {
  OptimizerConfig cfg;
  const LossFunction f = [](std::span<const double>, std::span<double> g) {
    std::fill(g.begin(), g.end(), 0.0);
    return std::nan("");
  };
  const std::vector<double> x0{1.0};
  const MinimizeResult r = minimize(f, x0, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.x == x0);
}

TEST_CASE("non-finite regions shorten the step") {
  OptimizerConfig cfg;
  // Defined only on x < 2; the minimum of (x-3)^2 there sits at the boundary.
  const LossFunction f = [](std::span<const double> x, std::span<double> g) {
    if (x[0] >= 2.0) {
      g[0] = std::nan("");
      return std::nan("");
    }
    g[0] = 2.0 * (x[0] - 3.0);
    return (x[0] - 3.0) * (x[0] - 3.0);
  };
  const std::vector<double> x0{0.0};
  const MinimizeResult r = minimize(f, x0, cfg);
  CHECK(std::isfinite(r.value));
  CHECK(r.value < 9.0);
  CHECK(r.x[0] < 2.0);
}

TEST_CASE("minimize is deterministic") {
  const ColoredGraph g = complete_graph(4, 2);
  const CompiledObjective obj(g, ghz(4, 2), postselection(g));
  OptimizerConfig cfg;
  cfg.seed = 3;
  const RestartProblem p = make_problem(obj, cfg);
  const auto x0 = random_init(obj.num_parameters(), cfg);
  const MinimizeResult a = minimize(p.loss, x0, cfg);
  const MinimizeResult b = minimize(p.loss, x0, cfg);
  CHECK(a.x == b.x);
  CHECK(a.value == b.value);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("GHZ(4,2) on the complete graph qualifies within the restart limit") {
  const ColoredGraph g = complete_graph(4, 2);
  const CompiledObjective obj(g, ghz(4, 2), postselection(g));
  OptimizerConfig cfg;
  const RestartResult r = optimize_with_restarts(make_problem(obj, cfg), obj.num_parameters(), cfg);
  CHECK(r.qualified);
  CHECK(r.fidelity >= 0.95);
  CHECK(r.restarts_used <= cfg.c_limit);
  CHECK(weight_magnitude(r.x, cfg.weight_norm) <= cfg.omega_limit + 1e-12);

  const RestartResult again = optimize_with_restarts(make_problem(obj, cfg), obj.num_parameters(), cfg);
  CHECK(again.x == r.x);
  CHECK(again.restarts_used == r.restarts_used);
}

TEST_CASE("a satisfied warm start uses one restart") {
  const ColoredGraph g = ghz4_cycle();
  const CompiledObjective obj(g, ghz(4, 2), postselection(g));
  OptimizerConfig cfg;
  const std::vector<double> warm = g.parameters();
  const RestartResult r = optimize_with_restarts(make_problem(obj, cfg), obj.num_parameters(), cfg,
                                                 std::span<const double>(warm));
  CHECK(r.qualified);
  CHECK(r.restarts_used == 1);
}

TEST_CASE("impossible target exhausts the restarts") {
  // Two disjoint edges in mode 0 can only make |0000>, so F <= 1/2.
  const ColoredGraph g(4, 2, {Edge{0, 1, 0, 0, 1.0}, Edge{2, 3, 0, 0, 1.0}});
  const CompiledObjective obj(g, ghz(4, 2), postselection(g));
  OptimizerConfig cfg;
  cfg.c_limit = 4;
  const RestartResult r = optimize_with_restarts(make_problem(obj, cfg), obj.num_parameters(), cfg);
  CHECK_FALSE(r.qualified);
  CHECK(r.restarts_used == 4);
  CHECK(r.fidelity == doctest::Approx(0.5));
}

TEST_CASE("weight magnitude norms and rescaling") {
  const std::vector<double> x{0.6, -0.8, 0.1, 0.0};
  CHECK(weight_magnitude(x, WeightNorm::max_component) == doctest::Approx(0.8));
  CHECK(weight_magnitude(x, WeightNorm::max_modulus) == doctest::Approx(1.0));
  std::vector<double> y = x;
  rescale_weights(y, 2.0, WeightNorm::max_modulus);
  CHECK(weight_magnitude(y, WeightNorm::max_modulus) == doctest::Approx(2.0));
}

TEST_CASE("balancing keeps the fidelity") {
  const ColoredGraph g = complete_graph(4, 2);
  const CompiledObjective obj(g, ghz(4, 2), postselection(g));
  OptimizerConfig cfg;
  cfg.seed = 8;
  std::vector<double> x = random_init(obj.num_parameters(), cfg);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] *= (i % 3 == 0) ? 1e-4 : 0.5;
  const double f = obj.fidelity(x);
  balance_weights(obj, x, 1.0, WeightNorm::max_component);
  CHECK(obj.fidelity(x) == doctest::Approx(f).epsilon(1e-12));
  CHECK(weight_magnitude(x, WeightNorm::max_component) == doctest::Approx(1.0));
}
