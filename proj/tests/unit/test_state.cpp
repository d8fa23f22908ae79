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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "theseus/errors.hpp"
#include "theseus/expansion.hpp"
#include "theseus/reference.hpp"
#include "theseus/state.hpp"

using namespace theseus;

namespace {

FockOccupation occ(std::vector<ModeCount> s) { return FockOccupation(std::move(s)); }

// Converts the dense oracle key into the library's sparse occupation.
FockOccupation from_dense(const oracle::Occupation& o, int d) {
  std::vector<ModeCount> s;
  for (std::size_t i = 0; i < o.size(); ++i)
    if (o[i] > 0) s.push_back(ModeCount{static_cast<int>(i) / d, static_cast<int>(i) % d, o[i]});
  return FockOccupation(std::move(s));
}

}  // namespace

TEST_CASE("FockOccupation basics") {
  const FockOccupation o = occ({{2, 1, 1}, {0, 0, 2}, {2, 1, 1}, {1, 0, 0}});
  REQUIRE(o.slots().size() == 2);
  CHECK(o.count(2, 1) == 2);
  CHECK(o.count(0, 0) == 2);
  CHECK(o.total() == 4);
  CHECK(o.photons_at(1) == 0);
  CHECK(o.restricted_to({2}).total() == 2);
}

TEST_CASE("FockState floor") {
  FockState s;
  s.add(occ({{0, 0, 1}}), 1e-15);
  s.prune();
  CHECK(s.size() == 0);
  s.add(occ({{0, 0, 1}}), 0.5);
  s.add(occ({{0, 0, 1}}), -0.5);
  s.prune();
  CHECK(s.size() == 0);
}

TEST_CASE("term_amplitude") {
  CHECK(term_amplitude(ghz4_cycle(), {0, 0, 0, 0}) == Complex{1.0});
  CHECK(term_amplitude(ghz4_cycle(), {0, 1, 0, 1}) == Complex{});

  const ColoredGraph k4(4, 1,
                        {Edge{0, 1, 0, 0, 1.0}, Edge{2, 3, 0, 0, 1.0}, Edge{0, 2, 0, 0, 2.0},
                         Edge{1, 3, 0, 0, 2.0}, Edge{0, 3, 0, 0, 3.0}, Edge{1, 2, 0, 0, 3.0}});
  CHECK(term_amplitude(k4, {0, 0, 0, 0}) == Complex{14.0});

  const Complex w{0.3, -0.7};
  CHECK(term_amplitude(ColoredGraph(2, 1, {Edge{0, 1, 0, 0, w}}), {0, 0}) == w);
}

TEST_CASE("postselected_state") {
  const PostselectedState s = postselected_state(ghz4_cycle());
  CHECK(s.amplitudes.size() == 2);
  CHECK(s.amplitudes.at({0, 0, 0, 0}) == Complex{1.0});
  CHECK(s.amplitudes.at({1, 1, 1, 1}) == Complex{1.0});
  CHECK(s.norm == doctest::Approx(std::numbers::sqrt2));

  const Complex w{0.3, -0.7};
  const PostselectedState e = postselected_state(ColoredGraph(2, 1, {Edge{0, 1, 0, 0, w}}));
  CHECK(e.amplitudes.at({0, 0}) == w);
  CHECK(e.norm == doctest::Approx(std::abs(w)));

  CHECK_THROWS_AS(postselected_state(complete_graph(4, 2)), DegenerateState);
}

TEST_CASE("postselected_state matches the multinomial oracle on K4 with two colors") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 5; ++rep) {
    const ColoredGraph g = oracle::random_graph(4, 2, 1.0, rng);
    const auto want = oracle::multinomial_postselected(g);
    const auto got = postselected_state(g).amplitudes;
    for (const auto& [k, a] : want) {
      auto it = got.find(k);
      const Complex b = it == got.end() ? Complex{} : it->second;
      CHECK(std::abs(a - b) < 1e-10);
    }
    for (const auto& [k, a] : got) CHECK(want.count(k) == 1);
  }
}

TEST_CASE("expand_phi on single and disjoint edges") {
  const Complex w{0.4, 0.3};
  const ColoredGraph one(2, 1, {Edge{0, 1, 0, 0, w}});
  const FockState s1 = expand_phi(one, 1);
  CHECK(std::abs(s1.amplitude(occ({{0, 0, 1}, {1, 0, 1}})) - w) < 1e-15);
  CHECK(std::abs(s1.amplitude(FockOccupation{}) - 1.0) < 1e-15);

  const FockState s2 = expand_phi(one, 2);
  CHECK(std::abs(s2.amplitude(occ({{0, 0, 2}, {1, 0, 2}})) - w * w) < 1e-15);

  const Complex w1{0.5, 0.0};
  const Complex w2{0.0, -0.2};
  const ColoredGraph two(4, 1, {Edge{0, 1, 0, 0, w1}, Edge{2, 3, 0, 0, w2}});
  const FockState s3 = expand_phi(two, 2);
  CHECK(std::abs(s3.amplitude(occ({{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 0, 1}})) - w1 * w2) < 1e-15);

  CHECK_THROWS_AS(expand_phi(one, -1), InvalidParameters);
}

TEST_CASE("expand_phi matches the operator oracle") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 6; ++rep) {
    const ColoredGraph g = oracle::random_graph(4, 2, 0.5, rng);
    const oracle::Fock want = oracle::operator_phi(g, 3);
    const FockState got = expand_phi(g, 3);
    std::size_t nonzero = 0;
    for (const auto& [o, a] : want) {
      CHECK(std::abs(got.amplitude(from_dense(o, 2)) - a) < 1e-10);
      if (std::abs(a) >= kAmplitudeFloor) ++nonzero;
    }
    CHECK(got.size() == nonzero);
  }
}

TEST_CASE("monotone truncation and agreement with post-selection") {
  std::mt19937_64 rng(9);
  const ColoredGraph g = oracle::random_graph(4, 2, 0.7, rng);
  const FockState low = expand_phi(g, 2);
  const FockState high = expand_phi(g, 3);
  for (const auto& [o, a] : low.terms())
    if (o.total() <= 4) CHECK(std::abs(high.amplitude(o) - a) < 1e-14);

  const PostselectedState ps = postselected_state(g);
  std::size_t singles = 0;
  for (const auto& [o, a] : low.terms()) {
    bool single = o.slots().size() == 4;
    for (std::size_t i = 0; i < o.slots().size() && single; ++i)
      single = o.slots()[i].count == 1 && o.slots()[i].vertex == static_cast<int>(i);
    if (!single) continue;
    ++singles;
    KetTerm k;
    for (const ModeCount& s : o.slots()) k.push_back(s.mode);
    CHECK(std::abs(ps.amplitudes.at(k) - a) < 1e-14);
  }
  CHECK(singles == ps.amplitudes.size());
}

TEST_CASE("heralded_state without heralds equals post-selection") {
  std::mt19937_64 rng(13);
  const ColoredGraph g = oracle::random_graph(4, 2, 0.8, rng);
  const HeraldedState h = heralded_state(g, postselection(g));
  REQUIRE(h.branches.size() == 1);
  const FockState& out = h.branches.begin()->second;
  const PostselectedState ps = postselected_state(g);
  CHECK(out.size() == ps.amplitudes.size());
  for (const auto& [k, a] : ps.amplitudes)
    CHECK(std::abs(out.amplitude(ket_occupation(g.real_vertices(), k)) - a) < 1e-14);
  CHECK(h.norm() == doctest::Approx(ps.norm));
}

TEST_CASE("heralded Bell source: leading branch and cancelled vacuum") {
  const double v = 0.16;
  const double w = 0.07;
  const ColoredGraph g = heralded_bell_graph(v, w);
  const ConditioningSpec c = heralding(g, heralded_bell_heralds(), DetectorModel::number_resolving_one, 4);
  const HeraldedState h = heralded_state(g, c);
  std::vector<ModeCount> clicks;
  for (int x : heralded_bell_heralds()) clicks.push_back(ModeCount{x, 0, 1});
  const FockState* branch = h.find_branch(FockOccupation(clicks));
  REQUIRE(branch != nullptr);

  // 2 v^2 w^2 (|00> - |11> - |22>) up to a global phase, and no vacuum.
  const Complex a00 = branch->amplitude(ket_occupation(c.outputs, {0, 0}));
  const Complex a11 = branch->amplitude(ket_occupation(c.outputs, {1, 1}));
  const Complex a22 = branch->amplitude(ket_occupation(c.outputs, {2, 2}));
  CHECK(std::abs(a00) == doctest::Approx(2 * v * v * w * w).epsilon(1e-12));
  CHECK(std::abs(a11 + a00) < 1e-15);
  CHECK(std::abs(a22 + a00) < 1e-15);
  CHECK(std::abs(branch->amplitude(FockOccupation{})) < 1e-12);
}

TEST_CASE("heralded_state needs a reachable herald event") {
  const ColoredGraph g = heralded_bell_graph(0.16, 0.07);
  CHECK_THROWS_AS(heralded_state(g, heralding(g, heralded_bell_heralds(), DetectorModel::number_resolving_one, 2)),
                  DegenerateState);
}

TEST_CASE("conditioning validation and defaults") {
  const ColoredGraph g = complete_graph(4, 2);
  ConditioningSpec c = heralding(g, {3, 1});
  CHECK(c.heralds == std::vector<int>{1, 3});
  CHECK(c.outputs == std::vector<int>{0, 2});
  CHECK(c.detector == DetectorModel::threshold_at_least_one);
  CHECK(c.resolved_max_pairs(g) == 4);
  c.outputs = {0};
  CHECK_THROWS_AS(c.validate(g), InvalidParameters);
  c.outputs = {0, 1, 2};
  CHECK_THROWS_AS(c.validate(g), InvalidParameters);
}

TEST_CASE("transformation_outputs of the CNOT graph") {
  const ColoredGraph g = cnot_graph();
  const ConditioningSpec c = cnot_conditioning(g);
  const std::vector<InputAssignment> inputs{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  const std::vector<KetTerm> expected{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  const auto outs = transformation_outputs(g, inputs, c);
  REQUIRE(outs.size() == 4);
  Complex ref{};
  for (std::size_t i = 0; i < 4; ++i) {
    double total = 0.0;
    for (const auto& [rec, b] : outs[i].branches) total += b.squared_norm();
    const Complex a = outs[i].branches.begin()->second.amplitude(ket_occupation(c.outputs, expected[i]));
    CHECK(std::norm(a) == doctest::Approx(total));
    if (i == 0) ref = a;
    CHECK(std::abs(a - ref) < 1e-12);
  }
}

TEST_CASE("identity wiring through a virtual vertex") {
  const Complex w{0.6, 0.2};
  const ColoredGraph g(2, 2, {Edge{0, 1, 0, 0, w}, Edge{0, 1, 1, 1, w}},
                       {VertexKind::real, VertexKind::virtual_input});
  const ConditioningSpec c = postselection(g);
  const std::vector<InputAssignment> inputs{{0}, {1}};
  const auto outs = transformation_outputs(g, inputs, c);
  for (int m = 0; m < 2; ++m) {
    const FockState& s = outs[static_cast<std::size_t>(m)].branches.begin()->second;
    CHECK(s.size() == 1);
    CHECK(std::abs(s.amplitude(ket_occupation(c.outputs, {m})) - w) < 1e-15);
  }
  const std::vector<InputAssignment> bad{{2}};
  CHECK_THROWS_AS(transformation_outputs(g, bad, c), InvalidParameters);
}

TEST_CASE("event probability and count rate") {
  CHECK(count_rate(0.0, 8e7) == 0.0);
  CHECK(count_rate(0.25, 8e7) == doctest::Approx(2e7));
  CHECK_THROWS_AS(count_rate(1.5, 8e7), InvalidParameters);
  CHECK_THROWS_AS(count_rate(-0.1, 8e7), InvalidParameters);

  const double v = 0.16;
  const double w = 0.07;
  const ColoredGraph g = heralded_bell_graph(v, w);
  const double lower = 12.0 * std::pow(v * w, 4) * 8e7;
  CHECK(lower == doctest::Approx(15.1).epsilon(0.01));
  for (auto det : {DetectorModel::number_resolving_one, DetectorModel::threshold_at_least_one}) {
    const double p = event_probability(g, heralding(g, heralded_bell_heralds(), det, 6));
    CHECK(count_rate(p, 8e7) >= lower);
  }

  const ColoredGraph cyc = ghz4_cycle();
  CHECK(event_probability(cyc, postselection(cyc)) == doctest::Approx(2.0));
}

TEST_CASE("global phase leaves moduli unchanged") {
  std::mt19937_64 rng(17);
  const ColoredGraph g = oracle::random_graph(4, 2, 0.8, rng);
  std::vector<Complex> w = g.weights();
  for (Complex& z : w) z *= std::polar(1.0, 0.7);
  const auto a = postselected_state(g);
  const auto b = postselected_state(g.with_weights(w));
  CHECK(a.norm == doctest::Approx(b.norm));
  for (const auto& [k, x] : a.amplitudes) CHECK(std::abs(x) == doctest::Approx(std::abs(b.amplitudes.at(k))));
}

TEST_CASE("vertex relabeling") {
  std::mt19937_64 rng(19);
  const ColoredGraph g = oracle::random_graph(4, 2, 0.8, rng);
  const int perm[] = {2, 0, 3, 1};
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge{perm[e.u], perm[e.v], e.cu, e.cv, e.weight});
  const ColoredGraph h(4, 2, std::move(edges));
  const auto a = postselected_state(g);
  const auto b = postselected_state(h);
  CHECK(a.norm == doctest::Approx(b.norm));
  for (const auto& [k, x] : a.amplitudes) {
    KetTerm kp(4);
    for (int i = 0; i < 4; ++i) kp[static_cast<std::size_t>(perm[i])] = k[static_cast<std::size_t>(i)];
    CHECK(std::abs(b.amplitudes.at(kp) - x) < 1e-14);
  }
}
