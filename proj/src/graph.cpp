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

#include "theseus/graph.hpp"

#include <algorithm>
#include <string>

#include "theseus/errors.hpp"

namespace theseus {

Edge Edge::canonical() const {
  if (u <= v) return *this;
  return Edge{v, u, cv, cu, weight};
}

bool Edge::same_slot(const Edge& o) const {
  const Edge a = canonical();
  const Edge b = o.canonical();
  return a.u == b.u && a.v == b.v && a.cu == b.cu && a.cv == b.cv;
}

bool slot_less(const Edge& a, const Edge& b) {
  if (a.u != b.u) return a.u < b.u;
  if (a.v != b.v) return a.v < b.v;
  if (a.cu != b.cu) return a.cu < b.cu;
  return a.cv < b.cv;
}

ColoredGraph::ColoredGraph(int n_vertices, int d_modes, std::vector<Edge> edges,
                           std::vector<VertexKind> kinds)
    : n_vertices_(n_vertices), d_modes_(d_modes), kinds_(std::move(kinds)) {
  if (n_vertices < 0) throw InvalidParameters("negative vertex count");
  if (d_modes < 1) throw InvalidParameters("mode count must be at least 1");
  if (kinds_.empty()) kinds_.assign(static_cast<std::size_t>(n_vertices), VertexKind::real);
  if (kinds_.size() != static_cast<std::size_t>(n_vertices))
    throw InvalidParameters("vertex kind list does not match vertex count");

  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    const Edge e = raw.canonical();
    if (e.u == e.v) throw InvalidParameters("loop edge at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_vertices)
      throw InvalidParameters("edge endpoint out of range");
    if (e.cu < 0 || e.cv < 0 || e.cu >= d_modes || e.cv >= d_modes)
      throw InvalidParameters("edge color out of range");
    if (kinds_[static_cast<std::size_t>(e.u)] == VertexKind::virtual_input &&
        kinds_[static_cast<std::size_t>(e.v)] == VertexKind::virtual_input)
      throw InvalidParameters("edge between two virtual vertices");
    edges_.push_back(e);
  }
  std::stable_sort(edges_.begin(), edges_.end(), slot_less);
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (!slot_less(edges_[i - 1], edges_[i]))
      throw InvalidParameters("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                              std::to_string(edges_[i].v) + ")");
  }
}

std::vector<int> ColoredGraph::real_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_vertices_; ++v)
    if (!is_virtual(v)) out.push_back(v);
  return out;
}

std::vector<int> ColoredGraph::virtual_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_vertices_; ++v)
    if (is_virtual(v)) out.push_back(v);
  return out;
}

std::optional<std::size_t> ColoredGraph::find_edge(int u, int v, int cu, int cv) const {
  const Edge key = Edge{u, v, cu, cv, {}}.canonical();
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, slot_less);
  if (it == edges_.end() || slot_less(key, *it)) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<double> ColoredGraph::parameters() const {
  std::vector<double> p;
  p.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    p.push_back(e.weight.real());
    p.push_back(e.weight.imag());
  }
  return p;
}

ColoredGraph ColoredGraph::with_parameters(std::span<const double> params) const {
  if (params.size() != 2 * edges_.size())
    throw InvalidParameters("parameter vector length must be 2*|edges|");
  ColoredGraph g = *this;
  for (std::size_t i = 0; i < g.edges_.size(); ++i)
    g.edges_[i].weight = Complex(params[2 * i], params[2 * i + 1]);
  return g;
}

std::vector<Complex> ColoredGraph::weights() const {
  std::vector<Complex> w;
  w.reserve(edges_.size());
  for (const Edge& e : edges_) w.push_back(e.weight);
  return w;
}

ColoredGraph ColoredGraph::with_weights(std::span<const Complex> weights) const {
  if (weights.size() != edges_.size())
    throw InvalidParameters("weight vector length must equal edge count");
  ColoredGraph g = *this;
  for (std::size_t i = 0; i < g.edges_.size(); ++i) g.edges_[i].weight = weights[i];
  return g;
}

ColoredGraph complete_graph(int n, int d) {
  if (n < 2 || d < 1) throw InvalidParameters("complete_graph needs n >= 2 and d >= 1");
  std::vector<int> modes(static_cast<std::size_t>(n), d);
  return complete_graph(modes);
}

ColoredGraph complete_graph(std::span<const int> modes_per_vertex) {
  const int n = static_cast<int>(modes_per_vertex.size());
  if (n < 2) throw InvalidParameters("complete_graph needs n >= 2");
  int d = 0;
  for (int m : modes_per_vertex) {
    if (m < 1) throw InvalidParameters("every vertex needs at least one mode");
    d = std::max(d, m);
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int cu = 0; cu < modes_per_vertex[static_cast<std::size_t>(u)]; ++cu)
        for (int cv = 0; cv < modes_per_vertex[static_cast<std::size_t>(v)]; ++cv)
          edges.push_back(Edge{u, v, cu, cv, {}});
  return ColoredGraph(n, d, std::move(edges));
}

ColoredGraph complete_graph_with_inputs(int n_real, int n_virtual, int d) {
  if (n_real < 1 || n_virtual < 0 || d < 1 || n_real + n_virtual < 2)
    throw InvalidParameters("complete_graph_with_inputs: bad sizes");
  const int n = n_real + n_virtual;
  std::vector<VertexKind> kinds(static_cast<std::size_t>(n), VertexKind::real);
  for (int v = n_real; v < n; ++v) kinds[static_cast<std::size_t>(v)] = VertexKind::virtual_input;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (u >= n_real && v >= n_real) continue;
      for (int cu = 0; cu < d; ++cu)
        for (int cv = 0; cv < d; ++cv) edges.push_back(Edge{u, v, cu, cv, {}});
    }
  return ColoredGraph(n, d, std::move(edges), std::move(kinds));
}

ColoredGraph remove_edge(const ColoredGraph& g, std::size_t index) {
  if (index >= g.num_edges()) throw InvalidParameters("edge index out of range");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
  return ColoredGraph(g.num_vertices(), g.num_modes(), std::move(edges),
                      std::vector<VertexKind>(g.kinds().begin(), g.kinds().end()));
}

ColoredGraph add_edge(const ColoredGraph& g, const Edge& e) {
  if (g.find_edge(e.u, e.v, e.cu, e.cv)) throw InvalidParameters("edge slot already occupied");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(e);
  return ColoredGraph(g.num_vertices(), g.num_modes(), std::move(edges),
                      std::vector<VertexKind>(g.kinds().begin(), g.kinds().end()));
}

}  // namespace theseus
