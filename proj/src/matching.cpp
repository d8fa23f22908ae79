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
#include <vector>

#include "theseus/errors.hpp"
#include "theseus/graph.hpp"

namespace theseus {
namespace {

struct MatchingSearch {
  const ColoredGraph& g;
  std::vector<std::vector<std::size_t>> incident;  // by vertex, ascending edge index
  std::vector<char> in_cover;
  std::vector<char> covered;
  std::vector<std::size_t> chosen;
  std::vector<Matching> out;

  void run(int remaining) {
    if (remaining == 0) {
      out.push_back(Matching{chosen});
      return;
    }
    int pivot = -1;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (in_cover[static_cast<std::size_t>(v)] && !covered[static_cast<std::size_t>(v)]) {
        pivot = v;
        break;
      }
    }
    for (std::size_t ei : incident[static_cast<std::size_t>(pivot)]) {
      const int w = g.edge(ei).other(pivot);
      const auto wi = static_cast<std::size_t>(w);
      if (!in_cover[wi] || covered[wi]) continue;
      covered[static_cast<std::size_t>(pivot)] = covered[wi] = 1;
      chosen.push_back(ei);
      run(remaining - 2);
      chosen.pop_back();
      covered[static_cast<std::size_t>(pivot)] = covered[wi] = 0;
    }
  }
};

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const ColoredGraph& g,
                                                  std::span<const int> cover) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  MatchingSearch s{g, std::vector<std::vector<std::size_t>>(n), std::vector<char>(n, 0),
                   std::vector<char>(n, 0), {}, {}};
  for (int v : cover) {
    if (v < 0 || v >= g.num_vertices()) throw InvalidParameters("cover vertex out of range");
    if (s.in_cover[static_cast<std::size_t>(v)]) throw InvalidParameters("duplicate cover vertex");
    s.in_cover[static_cast<std::size_t>(v)] = 1;
  }
  if (cover.size() % 2 != 0) return {};
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    s.incident[static_cast<std::size_t>(e.u)].push_back(i);
    s.incident[static_cast<std::size_t>(e.v)].push_back(i);
  }
  s.run(static_cast<int>(cover.size()));
  return std::move(s.out);
}

std::vector<Matching> enumerate_perfect_matchings(const ColoredGraph& g) {
  const std::vector<int> cover = g.real_vertices();
  return enumerate_perfect_matchings(g, cover);
}

}  // namespace theseus
