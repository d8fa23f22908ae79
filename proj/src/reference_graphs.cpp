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

#include "theseus/reference.hpp"

#include <cmath>

namespace theseus {

ColoredGraph ghz4_cycle() {
  return ColoredGraph(4, 2,
                      {Edge{0, 1, 0, 0, 1.0}, Edge{2, 3, 0, 0, 1.0}, Edge{0, 2, 1, 1, 1.0},
                       Edge{1, 3, 1, 1, 1.0}});
}

ColoredGraph heralded_bell_graph(double v, double w) {
  const Complex i{0.0, 1.0};
  struct Raw {
    int u, v, cu, cv;
    Complex phase;
  };
  const Raw raw[] = {
      {0, 2, 0, 0, 1.0}, {1, 3, 0, 0, 1.0}, {2, 3, 0, 0, 1.0},   //
      {0, 4, 1, 0, -i},  {1, 5, 1, 0, 1.0}, {4, 5, 0, 0, i},     //
      {0, 6, 2, 0, 1.0}, {1, 7, 2, 0, i},   {6, 7, 0, 0, -i},    //
      {0, 4, 2, 0, 1.0}, {1, 3, 2, 0, 1.0}, {4, 3, 0, 0, 1.0},   //
      {0, 6, 0, 0, 1.0}, {1, 5, 0, 0, 1.0}, {6, 5, 0, 0, -1.0},  //
      {0, 2, 1, 0, 1.0}, {1, 7, 1, 0, 1.0}, {2, 7, 0, 0, 1.0},
  };
  std::vector<Edge> edges;
  for (const Raw& r : raw) {
    const double mod = (r.u <= 1 || r.v <= 1) ? v : w;
    edges.push_back(Edge{r.u, r.v, r.cu, r.cv, mod * r.phase});
  }
  return ColoredGraph(8, 3, std::move(edges));
}

std::vector<int> heralded_bell_heralds() { return {2, 3, 4, 5, 6, 7}; }

TargetState heralded_bell_target() {
  return make_target({{{0, 0}, 1.0}, {{1, 1}, -1.0}, {{2, 2}, -1.0}});
}

PrismGraph ghz63_prism(double omega) {
  enum { a, b, c, d, e, f };
  std::vector<Edge> edges{
      Edge{a, b, 0, 0, 1.0},   Edge{d, e, 0, 0, 1.0}, Edge{c, f, 0, 0, omega},
      Edge{b, c, 1, 1, 1.0},   Edge{e, f, 1, 1, 1.0}, Edge{a, d, 1, 1, omega},
      Edge{a, c, 2, 2, 1.0},   Edge{d, f, 2, 2, 1.0}, Edge{b, e, 2, 2, omega},
  };
  PrismGraph p{ColoredGraph(6, 3, std::move(edges)), {}};
  p.rungs = {*p.graph.find_edge(a, d, 1, 1), *p.graph.find_edge(b, e, 2, 2), *p.graph.find_edge(c, f, 0, 0)};
  return p;
}

ColoredGraph cnot_graph() {
  enum { a, b, c, d, va, vb };
  std::vector<Edge> edges{
      Edge{a, va, 0, 0, 1.0}, Edge{a, va, 1, 1, -1.0}, Edge{c, va, 0, 1, 1.0}, Edge{d, va, 0, 1, 1.0},
      Edge{c, vb, 0, 0, 1.0}, Edge{d, vb, 0, 1, 1.0},  Edge{b, d, 0, 0, 1.0},  Edge{b, c, 1, 0, 1.0},
      Edge{a, b, 1, 0, 1.0},  Edge{a, b, 1, 1, 1.0},
  };
  std::vector<VertexKind> kinds(6, VertexKind::real);
  kinds[va] = kinds[vb] = VertexKind::virtual_input;
  return ColoredGraph(6, 2, std::move(edges), std::move(kinds));
}

ConditioningSpec cnot_conditioning(const ColoredGraph& g) {
  ConditioningSpec c = heralding(g, {2, 3}, DetectorModel::number_resolving_one);
  c.postselect_outputs = true;
  return c;
}

}  // namespace theseus
