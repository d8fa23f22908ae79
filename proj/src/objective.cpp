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

#include "theseus/objective.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "theseus/errors.hpp"
#include "theseus/expansion.hpp"

namespace theseus {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

void check_target(const ColoredGraph& g, const Target& target, const ConditioningSpec& c) {
  c.validate(g);
  if (target_arity(target) != c.outputs.size())
    throw InvalidParameters("target kets have " + std::to_string(target_arity(target)) +
                            " slots but there are " + std::to_string(c.outputs.size()) +
                            " output vertices");
  if (target_min_modes(target) > g.num_modes())
    throw InvalidParameters("target uses more modes than the graph carries");
  const std::size_t nv = g.virtual_vertices().size();
  if (target_input_count(target) != nv)
    throw InvalidParameters("target expects " + std::to_string(target_input_count(target)) +
                            " inputs but the graph has " + std::to_string(nv) + " virtual vertices");
}

// Ket of an output occupation with exactly one photon per output vertex.
bool single_photon_ket(const FockOccupation& occ, const std::vector<int>& outputs, KetTerm& ket) {
  if (occ.slots().size() != outputs.size()) return false;
  ket.resize(outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    const ModeCount& s = occ.slots()[i];
    if (s.vertex != outputs[i] || s.count != 1) return false;
    ket[i] = s.mode;
  }
  return true;
}

}  // namespace

CompiledObjective::CompiledObjective(const ColoredGraph& g, const Target& target,
                                     const ConditioningSpec& c)
    : graph_(g) {
  check_target(g, target, c);

  std::vector<const InputAssignment*> passes;
  std::vector<const TargetState*> wanted;
  if (const auto* s = std::get_if<TargetState>(&target)) {
    passes.push_back(nullptr);
    wanted.push_back(s);
  } else {
    const auto& gate = std::get<TargetGate>(target);
    for (std::size_t i = 0; i < gate.inputs.size(); ++i) {
      passes.push_back(&gate.inputs[i]);
      wanted.push_back(&gate.outputs[i]);
    }
  }
  inputs_ = static_cast<double>(passes.size());

  std::map<FockOccupation, std::uint32_t> branch_ids;
  std::map<std::tuple<std::size_t, std::uint32_t, FockOccupation>, std::uint32_t> slot_ids;
  KetTerm ket;
  for (std::size_t p = 0; p < passes.size(); ++p) {
    const TargetState& t = *wanted[p];
    enumerate_terms(g, make_rules(g, c, passes[p]),
                    [&](const FockOccupation& occ, double coef, std::span<const EdgePower> fs) {
                      const auto [bit, bnew] = branch_ids.try_emplace(
                          occ.restricted_to(c.heralds), static_cast<std::uint32_t>(branch_ids.size()));
                      FockOccupation out = occ.restricted_to(c.outputs);
                      const auto [sit, snew] = slot_ids.try_emplace(
                          std::make_tuple(p, bit->second, out), static_cast<std::uint32_t>(slot_ids.size()));
                      if (snew) {
                        Complex tc{};
                        if (single_photon_ket(out, c.outputs, ket)) {
                          auto it = t.terms.find(ket);
                          if (it != t.terms.end()) tc = std::conj(it->second);
                        }
                        slot_target_.push_back(tc);
                        slot_branch_.push_back(bit->second);
                      }
                      monomials_.push_back(Monomial{sit->second, coef,
                                                    static_cast<std::uint32_t>(factors_.size()),
                                                    static_cast<std::uint32_t>(fs.size())});
                      for (const EdgePower& f : fs) factors_.push_back(Factor{f.edge, f.power});
                    });
  }
  num_branches_ = branch_ids.size();

  scale_invariant_ = !monomials_.empty();
  std::uint32_t degree = 0;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    std::uint32_t deg = 0;
    for (std::uint32_t k = 0; k < monomials_[i].num_factors; ++k)
      deg += factors_[monomials_[i].first_factor + k].power;
    if (i == 0) degree = deg;
    if (deg != degree) scale_invariant_ = false;
  }

  const auto n = static_cast<std::size_t>(g.num_vertices());
  gauge_photons_.assign(n, -1);
  std::vector<int> first_count(n, 0);
  std::vector<int> count(n, 0);
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    std::fill(count.begin(), count.end(), 0);
    for (std::uint32_t k = 0; k < monomials_[i].num_factors; ++k) {
      const Factor& f = factors_[monomials_[i].first_factor + k];
      const Edge& e = g.edge(f.edge);
      count[static_cast<std::size_t>(e.u)] += static_cast<int>(f.power);
      count[static_cast<std::size_t>(e.v)] += static_cast<int>(f.power);
    }
    if (i == 0) first_count = count;
    for (std::size_t v = 0; v < n; ++v)
      if (count[v] != first_count[v]) first_count[v] = -1;
  }
  if (!monomials_.empty()) gauge_photons_ = first_count;
}

void CompiledObjective::amplitudes(std::span<const double> params, std::vector<Complex>& amps) const {
  if (params.size() != num_parameters())
    throw InvalidParameters("parameter vector has wrong length");
  amps.assign(slot_target_.size(), Complex{});
  for (const Monomial& m : monomials_) {
    Complex v{m.coefficient, 0.0};
    for (std::uint32_t k = 0; k < m.num_factors; ++k) {
      const Factor& f = factors_[m.first_factor + k];
      const Complex z{params[2 * f.edge], params[2 * f.edge + 1]};
      for (std::uint32_t p = 0; p < f.power; ++p) v *= z;
    }
    amps[m.slot] += v;
  }
}

double CompiledObjective::from_amplitudes(const std::vector<Complex>& amps,
                                          std::vector<Complex>* dF_dA) const {
  std::vector<Complex> overlap(num_branches_);
  double norm2 = 0.0;
  for (std::size_t s = 0; s < amps.size(); ++s) {
    overlap[slot_branch_[s]] += slot_target_[s] * amps[s];
    norm2 += std::norm(amps[s]);
  }
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) return kNaN;
  double num = 0.0;
  for (const Complex& o : overlap) num += std::norm(o);
  const double f = num / (inputs_ * norm2);
  if (dF_dA) {
    dF_dA->resize(amps.size());
    for (std::size_t s = 0; s < amps.size(); ++s)
      (*dF_dA)[s] = std::conj(overlap[slot_branch_[s]]) * slot_target_[s] / (inputs_ * norm2) -
                    f * std::conj(amps[s]) / norm2;
  }
  return f;
}

double CompiledObjective::fidelity(std::span<const double> params) const {
  std::vector<Complex> amps;
  amplitudes(params, amps);
  return from_amplitudes(amps, nullptr);
}

double CompiledObjective::fidelity_gradient(std::span<const double> params,
                                            std::span<double> grad) const {
  if (grad.size() != num_parameters()) throw InvalidParameters("gradient buffer has wrong length");
  std::vector<Complex> amps;
  amplitudes(params, amps);
  std::vector<Complex> dF_dA;
  const double f = from_amplitudes(amps, &dF_dA);
  std::fill(grad.begin(), grad.end(), 0.0);
  if (std::isnan(f)) {
    std::fill(grad.begin(), grad.end(), kNaN);
    return f;
  }

  std::vector<Complex> g_edge(graph_.num_edges());
  std::vector<Complex> z(graph_.num_edges());
  for (std::size_t e = 0; e < z.size(); ++e) z[e] = Complex{params[2 * e], params[2 * e + 1]};
  for (const Monomial& m : monomials_) {
    const Complex w = dF_dA[m.slot] * m.coefficient;
    if (w == Complex{}) continue;
    for (std::uint32_t k = 0; k < m.num_factors; ++k) {
      const Factor& fk = factors_[m.first_factor + k];
      Complex d{static_cast<double>(fk.power), 0.0};
      for (std::uint32_t p = 1; p < fk.power; ++p) d *= z[fk.edge];
      for (std::uint32_t j = 0; j < m.num_factors; ++j) {
        if (j == k) continue;
        const Factor& fj = factors_[m.first_factor + j];
        for (std::uint32_t p = 0; p < fj.power; ++p) d *= z[fj.edge];
      }
      g_edge[fk.edge] += w * d;
    }
  }
  for (std::size_t e = 0; e < g_edge.size(); ++e) {
    grad[2 * e] = 2.0 * g_edge[e].real();
    grad[2 * e + 1] = -2.0 * g_edge[e].imag();
  }
  return f;
}

double CompiledObjective::loss(std::span<const double> params, const LossOptions& opt) const {
  return (1.0 - fidelity(params)) + l1_penalty(params, opt);
}

double CompiledObjective::loss_gradient(std::span<const double> params, const LossOptions& opt,
                                        std::span<double> grad) const {
  const double f = fidelity_gradient(params, grad);
  for (double& g : grad) g = -g;
  add_l1_gradient(params, opt, grad);
  return (1.0 - f) + l1_penalty(params, opt);
}

double l1_penalty(std::span<const double> params, const LossOptions& opt) {
  if (opt.alpha == 0.0) return 0.0;
  double s = 0.0;
  if (opt.l1 == L1Norm::componentwise) {
    for (double x : params) s += std::abs(x);
  } else {
    for (std::size_t e = 0; e + 1 < params.size(); e += 2) s += std::hypot(params[e], params[e + 1]);
  }
  return opt.alpha * s;
}

void add_l1_gradient(std::span<const double> params, const LossOptions& opt, std::span<double> grad) {
  if (opt.alpha == 0.0) return;
  if (opt.l1 == L1Norm::componentwise) {
    for (std::size_t i = 0; i < params.size(); ++i) grad[i] += opt.alpha * sign(params[i]);
    return;
  }
  for (std::size_t e = 0; e + 1 < params.size(); e += 2) {
    const double r = std::hypot(params[e], params[e + 1]);
    if (r == 0.0) continue;
    grad[e] += opt.alpha * params[e] / r;
    grad[e + 1] += opt.alpha * params[e + 1] / r;
  }
}

namespace {

double checked_fidelity(const ColoredGraph& g, const Target& t, const ConditioningSpec& c) {
  const CompiledObjective obj(g, t, c);
  const double f = obj.fidelity(g.parameters());
  if (std::isnan(f)) throw DegenerateState("conditioned state vanishes; fidelity undefined");
  return f;
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidParameters("alpha must lie in [0, 1)");
}

}  // namespace

double fidelity(const ColoredGraph& g, const TargetState& t, const ConditioningSpec& c) {
  return checked_fidelity(g, Target{t}, c);
}

double gate_fidelity(const ColoredGraph& g, const TargetGate& t, const ConditioningSpec& c) {
  return checked_fidelity(g, Target{t}, c);
}

double loss(const ColoredGraph& g, const Target& t, const ConditioningSpec& c, double alpha, L1Norm l1) {
  check_alpha(alpha);
  const double f = checked_fidelity(g, t, c);
  return (1.0 - f) + l1_penalty(g.parameters(), LossOptions{alpha, l1});
}

std::vector<double> loss_gradient(const ColoredGraph& g, const Target& t, const ConditioningSpec& c,
                                  double alpha, L1Norm l1) {
  check_alpha(alpha);
  const CompiledObjective obj(g, t, c);
  std::vector<double> grad(obj.num_parameters());
  const double l = obj.loss_gradient(g.parameters(), LossOptions{alpha, l1}, grad);
  if (std::isnan(l)) throw DegenerateState("conditioned state vanishes; gradient undefined");
  return grad;
}

}  // namespace theseus
