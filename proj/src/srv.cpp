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

#include "theseus/srv.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include <Eigen/Dense>

namespace theseus {
namespace {

constexpr double kRankThreshold = 1e-10;

int matrix_rank(const Eigen::MatrixXcd& m) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > kRankThreshold) ++r;
  return r;
}

}  // namespace

std::string SchmidtRankVector::to_string() const {
  std::ostringstream os;
  os << '(' << ranks[0] << ',' << ranks[1] << ',' << ranks[2] << ')';
  return os.str();
}

SchmidtRankVector srv_of_state(const std::map<KetTerm, Complex>& state, std::array<int, 3> dims) {
  for (int d : dims)
    if (d < 1) throw InvalidState("party dimensions must be positive");
  double norm2 = 0.0;
  for (const auto& [ket, a] : state) {
    if (ket.size() != 3) throw InvalidState("state is not tripartite");
    for (std::size_t k = 0; k < 3; ++k)
      if (ket[k] < 0 || ket[k] >= dims[k]) throw InvalidState("ket mode outside the party dimension");
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > 1e-8) throw InvalidState("state is not normalized");

  SchmidtRankVector srv;
  for (std::size_t party = 0; party < 3; ++party) {
    const int rows = dims[party];
    int cols = 1;
    for (std::size_t k = 0; k < 3; ++k)
      if (k != party) cols *= dims[k];
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
    for (const auto& [ket, a] : state) {
      int col = 0;
      for (std::size_t k = 0; k < 3; ++k)
        if (k != party) col = col * dims[k] + ket[k];
      m(ket[party], col) += a;
    }
    srv.ranks[party] = matrix_rank(m);
  }
  std::sort(srv.ranks.begin(), srv.ranks.end(), std::greater<>());
  return srv;
}

void validate_srv_class(const SchmidtRankVector& srv, int max_dim) {
  const auto& r = srv.ranks;
  if (r[2] < 1) throw InvalidParameters("Schmidt ranks must be positive");
  if (r[0] < r[1] || r[1] < r[2]) throw InvalidParameters("Schmidt ranks must be non-increasing");
  if (r[0] > max_dim) throw InvalidParameters("rank " + std::to_string(r[0]) + " exceeds dimension " + std::to_string(max_dim));
  if (r[0] > r[1] * r[2]) throw InvalidParameters("no state has Schmidt-rank vector " + srv.to_string());
}

std::vector<SchmidtRankVector> srv_classes(int max_dim) {
  if (max_dim < 2 || max_dim > 10) throw InvalidParameters("max_dim must lie in 2..10");
  std::vector<SchmidtRankVector> out;
  for (int a = 2; a <= max_dim; ++a)
    for (int b = 2; b <= a; ++b)
      for (int c = 2; c <= b; ++c)
        if (a <= b * c) out.push_back(SchmidtRankVector{{a, b, c}});
  return out;
}

TargetState srv_target(const SchmidtRankVector& srv) {
  validate_srv_class(srv, 10);
  const auto [r1, r2, r3] = srv.ranks;
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> used;
  for (int i = 0; i < r2; ++i) {
    pairs.emplace_back(i, i % r3);
    used.emplace(i, i % r3);
  }
  for (int b = 0; b < r2 && static_cast<int>(pairs.size()) < r1; ++b)
    for (int c = 0; c < r3 && static_cast<int>(pairs.size()) < r1; ++c)
      if (!used.contains({b, c})) pairs.emplace_back(b, c);
  std::map<KetTerm, Complex> terms;
  for (int i = 0; i < r1; ++i) terms[{i, pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second}] = 1.0;
  return make_target(std::move(terms));
}

SrvSetup srv_setup(const SchmidtRankVector& srv) {
  validate_srv_class(srv, 10);
  const std::array<int, 6> modes{srv.ranks[0], srv.ranks[1], srv.ranks[2], 1, 1, 1};
  SrvSetup s;
  s.start = complete_graph(modes);
  s.conditioning = heralding(s.start, {3, 4, 5}, DetectorModel::number_resolving_one);
  s.conditioning.postselect_outputs = true;
  return s;
}

std::map<KetTerm, Complex> srv_output_state(const ColoredGraph& g, const ConditioningSpec& c) {
  const HeraldedState h = heralded_state(g, c);
  std::map<KetTerm, Complex> out;
  double norm2 = 0.0;
  for (const auto& [record, branch] : h.branches) {
    for (const auto& [occ, a] : branch.terms()) {
      KetTerm ket;
      for (const ModeCount& s : occ.slots()) ket.push_back(s.mode);
      out[ket] += a;
      norm2 += std::norm(a);
    }
  }
  const double n = std::sqrt(norm2);
  for (auto& [ket, a] : out) a /= n;
  return out;
}

SrvBenchmarkReport srv_benchmark(int max_dim, double budget_seconds, const OptimizerConfig& cfg,
                                 const PrunePolicy& policy,
                                 const std::function<void(const SchmidtRankVector&, bool)>& progress) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };
  const std::vector<SchmidtRankVector> classes = srv_classes(max_dim);
  SrvBenchmarkReport report;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const SchmidtRankVector& cls = classes[k];
    const double remaining = budget_seconds - elapsed();
    if (remaining <= 0.0) {
      report.missed.push_back(cls);
      if (progress) progress(cls, false);
      continue;
    }
    const auto tc = Clock::now();
    const SrvSetup setup = srv_setup(cls);
    SearchOptions opt;
    opt.time_budget_seconds = remaining / static_cast<double>(classes.size() - k);
    bool ok = false;
    try {
      Solution sol = run_theseus(Target{srv_target(cls)}, setup.start, setup.conditioning, cfg, policy, opt);
      const SchmidtRankVector got =
          srv_of_state(srv_output_state(sol.graph, setup.conditioning), {cls.ranks[0], cls.ranks[1], cls.ranks[2]});
      if (sol.qualified && got == cls) {
        ok = true;
        report.achieved.push_back(
            SrvResult{cls, got, std::move(sol), std::chrono::duration<double>(Clock::now() - tc).count()});
      }
    } catch (const Error&) {
      // A failed search or an unverifiable output counts as a miss.
    }
    if (!ok) report.missed.push_back(cls);
    if (progress) progress(cls, ok);
  }
  report.seconds = elapsed();
  return report;
}

}  // namespace theseus
