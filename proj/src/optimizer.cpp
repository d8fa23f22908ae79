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

#include "theseus/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "theseus/errors.hpp"

namespace theseus {
namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

constexpr double kC1 = 1e-4;
constexpr double kC2 = 0.9;
constexpr int kMaxLineEvals = 40;

bool finite(const Vec& v) { return v.allFinite(); }

struct Point {
  double alpha = 0.0;
  double f = 0.0;
  double slope = 0.0;  // directional derivative
  Vec x;
  Vec g;
};

class LineSearch {
 public:
  LineSearch(const LossFunction& f, const Vec& x, const Vec& p, double f0, double slope0)
      : f_(f), x_(x), p_(p), f0_(f0), slope0_(slope0) {}

  // Strong Wolfe search. Returns false when no acceptable point was found;
  // `best` then holds the lowest finite trial, if any improved on f0.
  bool run(double alpha_init, Point& out) {
    Point prev{0.0, f0_, slope0_, x_, {}};
    double alpha = alpha_init;
    for (int i = 0; i < kMaxLineEvals; ++i) {
      Point cur = eval(alpha);
      if (!std::isfinite(cur.f) || !std::isfinite(cur.slope)) {
        alpha = 0.5 * (prev.alpha + alpha);
        if (alpha - prev.alpha < 1e-16) return false;
        continue;
      }
      if (cur.f > f0_ + kC1 * alpha * slope0_ || (i > 0 && cur.f >= prev.f))
        return zoom(prev, cur, out);
      if (std::abs(cur.slope) <= -kC2 * slope0_) {
        out = std::move(cur);
        return true;
      }
      if (cur.slope >= 0.0) return zoom(cur, prev, out);
      prev = std::move(cur);
      alpha *= 2.0;
    }
    return false;
  }

  const Point* best() const { return best_.x.size() ? &best_ : nullptr; }

 private:
  Point eval(double alpha) {
    Point p;
    p.alpha = alpha;
    p.x = x_ + alpha * p_;
    p.g.resize(p.x.size());
    p.f = f_(std::span<const double>(p.x.data(), static_cast<std::size_t>(p.x.size())),
             std::span<double>(p.g.data(), static_cast<std::size_t>(p.g.size())));
    p.slope = finite(p.g) ? p.g.dot(p_) : std::nan("");
    if (std::isfinite(p.f) && std::isfinite(p.slope) && p.f < f0_ && (!best_.x.size() || p.f < best_.f))
      best_ = p;
    return p;
  }

  bool zoom(Point lo, Point hi, Point& out) {
    for (int i = 0; i < kMaxLineEvals; ++i) {
      const double a = lo.alpha;
      const double b = hi.alpha;
      const double width = std::abs(b - a);
      if (width < 1e-16 * std::max(1.0, std::abs(a))) break;
      // Cubic interpolation, safeguarded to the interior of [a, b].
      double t = 0.5 * (a + b);
      if (std::isfinite(hi.f)) {
        const double d1 = lo.slope + hi.slope - 3.0 * (lo.f - hi.f) / (a - b);
        const double disc = d1 * d1 - lo.slope * hi.slope;
        if (disc >= 0.0) {
          const double d2 = std::copysign(std::sqrt(disc), b - a);
          const double c = b - (b - a) * (hi.slope + d2 - d1) / (hi.slope - lo.slope + 2.0 * d2);
          if (std::isfinite(c)) t = c;
        }
      }
      const double lo_edge = std::min(a, b) + 0.1 * width;
      const double hi_edge = std::max(a, b) - 0.1 * width;
      t = std::clamp(t, lo_edge, hi_edge);

      Point cur = eval(t);
      if (!std::isfinite(cur.f) || !std::isfinite(cur.slope)) {
        hi = std::move(cur);
        hi.f = std::numeric_limits<double>::infinity();
        continue;
      }
      if (cur.f > f0_ + kC1 * t * slope0_ || cur.f >= lo.f) {
        hi = std::move(cur);
      } else {
        if (std::abs(cur.slope) <= -kC2 * slope0_) {
          out = std::move(cur);
          return true;
        }
        if (cur.slope * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
        lo = std::move(cur);
      }
    }
    return false;
  }

  const LossFunction& f_;
  const Vec& x_;
  const Vec& p_;
  double f0_;
  double slope0_;
  Point best_;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(F_limit > 0.0 && F_limit <= 1.0)) throw InvalidParameters("F_limit must lie in (0, 1]");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidParameters("alpha must lie in [0, 1)");
  if (c_limit < 1) throw InvalidParameters("c_limit must be at least 1");
  if (max_iterations < 0) throw InvalidParameters("max_iterations must be non-negative");
  if (!(omega_limit > 0.0)) throw InvalidParameters("omega_limit must be positive");
  if (!(init_range > 0.0)) throw InvalidParameters("init_range must be positive");
  if (!(gradient_tolerance >= 0.0) || !(function_tolerance >= 0.0))
    throw InvalidParameters("tolerances must be non-negative");
}

std::vector<double> random_init(std::size_t len, const OptimizerConfig& cfg, std::uint64_t stream) {
  if (len == 0) throw InvalidParameters("random_init needs a positive length");
  std::mt19937_64 rng(mix(cfg.seed, stream));
  std::uniform_real_distribution<double> dist(-cfg.init_range, cfg.init_range);
  std::vector<double> x(len);
  for (double& v : x) v = dist(rng);
  return x;
}

MinimizeResult minimize(const LossFunction& f, std::span<const double> x0, const OptimizerConfig& cfg) {
  const auto n = static_cast<Eigen::Index>(x0.size());
  MinimizeResult res;
  Vec x = Eigen::Map<const Vec>(x0.data(), n);
  Vec g(n);
  double fx = f(x0, std::span<double>(g.data(), x0.size()));
  res.x.assign(x0.begin(), x0.end());
  res.value = fx;
  if (!std::isfinite(fx) || !finite(g)) return res;

  Mat H = Mat::Identity(n, n);
  bool fresh = true;
  for (res.iterations = 0; res.iterations < cfg.max_iterations; ++res.iterations) {
    if (g.lpNorm<Eigen::Infinity>() < cfg.gradient_tolerance) {
      res.converged = true;
      break;
    }
    Vec p = -H * g;
    double slope = g.dot(p);
    if (!(slope < 0.0)) {
      H.setIdentity();
      fresh = true;
      p = -g;
      slope = -g.squaredNorm();
    }
    const double alpha0 = fresh ? std::min(1.0, 1.0 / std::max(g.norm(), 1e-300)) : 1.0;
    LineSearch ls(f, x, p, fx, slope);
    Point next;
    if (!ls.run(alpha0, next)) {
      if (const Point* b = ls.best()) {
        next = *b;
      } else if (!fresh) {
        H.setIdentity();
        fresh = true;
        continue;
      } else {
        break;
      }
    }
    const Vec s = next.x - x;
    const Vec y = next.g - g;
    const double decrease = fx - next.f;
    x = next.x;
    g = next.g;
    fx = next.f;
    if (fx < res.value) {
      res.value = fx;
      res.x.assign(x.data(), x.data() + n);
    }

    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm() && sy > 0.0) {
      if (fresh) H *= sy / y.squaredNorm();
      const double rho = 1.0 / sy;
      const Vec Hy = H * y;
      H += (rho * rho * y.dot(Hy) + rho) * (s * s.transpose()) - rho * (Hy * s.transpose() + s * Hy.transpose());
      fresh = false;
    }
    if (decrease <= cfg.function_tolerance * std::max(1.0, std::abs(fx))) {
      res.converged = true;
      ++res.iterations;
      break;
    }
  }
  return res;
}

double weight_magnitude(std::span<const double> x, WeightNorm norm) {
  double m = 0.0;
  if (norm == WeightNorm::max_component) {
    for (double v : x) m = std::max(m, std::abs(v));
  } else {
    for (std::size_t e = 0; e + 1 < x.size(); e += 2) m = std::max(m, std::hypot(x[e], x[e + 1]));
  }
  return m;
}

RestartResult optimize_with_restarts(const RestartProblem& p, std::size_t len, const OptimizerConfig& cfg,
                                     std::optional<std::span<const double>> warm_start) {
  cfg.validate();
  if (warm_start && warm_start->size() != len) throw InvalidParameters("warm start has wrong length");
  RestartResult best;
  bool have_best = false;
  for (int r = 0; r < cfg.c_limit; ++r) {
    std::vector<double> x0 = (r == 0 && warm_start)
                                 ? std::vector<double>(warm_start->begin(), warm_start->end())
                                 : random_init(len, cfg, static_cast<std::uint64_t>(r));
    MinimizeResult m = minimize(p.loss, x0, cfg);
    if (p.canonicalize && std::isfinite(m.value)) {
      p.canonicalize(m.x);
      std::vector<double> g(len);
      m.value = p.loss(m.x, g);
    }
    const double fid = std::isfinite(m.value) ? p.fidelity(m.x) : std::nan("");
    const bool qualified = std::isfinite(fid) && fid >= cfg.F_limit &&
                           weight_magnitude(m.x, cfg.weight_norm) <= cfg.omega_limit;
    const bool better = std::isfinite(m.value) && (!have_best || m.value < best.loss);
    if (qualified || better) {
      best.x = std::move(m.x);
      best.loss = m.value;
      best.fidelity = fid;
      have_best = true;
    }
    best.restarts_used = r + 1;
    if (qualified) {
      best.qualified = true;
      return best;
    }
  }
  if (!have_best) {
    best.x.assign(len, 0.0);
    best.loss = std::nan("");
    best.fidelity = std::nan("");
  }
  return best;
}

void rescale_weights(std::vector<double>& x, double magnitude, WeightNorm norm) {
  const double m = weight_magnitude(x, norm);
  if (!(m > 0.0) || !std::isfinite(m)) return;
  for (double& v : x) v *= magnitude / m;
}

void balance_weights(const CompiledObjective& obj, std::vector<double>& x, double magnitude, WeightNorm norm) {
  const ColoredGraph& g = obj.graph();
  if (x.size() != obj.num_parameters()) throw InvalidParameters("parameter vector has wrong length");
  const std::vector<int>& photons = obj.gauge_photons();
  const auto n = static_cast<std::size_t>(g.num_vertices());

  // Vertex scalings s_v with prod s_v^{n_v} = 1 keep every amplitude. Among
  // them, L1 is smallest when each vertex's incident mass r_v is
  // proportional to n_v; approach that point by damped fixed-point sweeps.
  std::vector<double> mass(n), factor(n);
  for (int sweep = 0; sweep < 200; ++sweep) {
    std::fill(mass.begin(), mass.end(), 0.0);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const double m = std::abs(x[2 * e]) + std::abs(x[2 * e + 1]);
      mass[static_cast<std::size_t>(g.edge(e).u)] += m;
      mass[static_cast<std::size_t>(g.edge(e).v)] += m;
    }
    double log_lambda = 0.0;
    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (photons[v] <= 0 || !(mass[v] > 0.0) || !std::isfinite(mass[v])) continue;
      log_lambda += photons[v] * std::log(mass[v] / photons[v]);
      total += photons[v];
    }
    if (total == 0.0) break;
    log_lambda /= total;

    double log_product = 0.0;
    double largest = 0.0;
    std::fill(factor.begin(), factor.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      if (photons[v] <= 0 || !(mass[v] > 0.0) || !std::isfinite(mass[v])) continue;
      factor[v] = 0.5 * (log_lambda + std::log(photons[v] / mass[v]));
      log_product += photons[v] * factor[v];
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (photons[v] <= 0 || !(mass[v] > 0.0) || !std::isfinite(mass[v])) continue;
      factor[v] -= log_product / total;
      largest = std::max(largest, std::abs(factor[v]));
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const double c = std::exp(factor[static_cast<std::size_t>(g.edge(e).u)] +
                                factor[static_cast<std::size_t>(g.edge(e).v)]);
      x[2 * e] *= c;
      x[2 * e + 1] *= c;
    }
    if (largest < 1e-9) break;
  }
  if (obj.scale_invariant()) rescale_weights(x, magnitude, norm);
}

RestartProblem make_problem(const CompiledObjective& obj, const OptimizerConfig& cfg) {
  const LossOptions opt = cfg.loss_options();
  RestartProblem p;
  p.loss = [&obj, opt](std::span<const double> x, std::span<double> g) { return obj.loss_gradient(x, opt, g); };
  p.fidelity = [&obj](std::span<const double> x) { return obj.fidelity(x); };
  const double limit = cfg.omega_limit;
  const WeightNorm norm = cfg.weight_norm;
  p.canonicalize = [&obj, limit, norm](std::vector<double>& x) { balance_weights(obj, x, limit, norm); };
  return p;
}

}  // namespace theseus
