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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace theseus {

using Complex = std::complex<double>;

enum class VertexKind { real, virtual_input };

/// A photon-pair source: one photon in path `u` with mode `cu`, its partner in
/// path `v` with mode `cv`, created with amplitude `weight`.
///
/// Edges are unordered; the canonical form has u < v with the colors carried
/// along. Two edges are the same edge when their endpoints and colors agree,
/// regardless of weight.
struct Edge {
  int u = 0;
  int v = 0;
  int cu = 0;
  int cv = 0;
  Complex weight{0.0, 0.0};

  Edge canonical() const;
  /// Color of this edge at vertex `x`, which must be an endpoint.
  int color_at(int x) const { return x == u ? cu : cv; }
  int other(int x) const { return x == u ? v : u; }
  bool touches(int x) const { return x == u || x == v; }
  bool same_slot(const Edge& o) const;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Strict weak order on canonical edges by (u, v, cu, cv); weights ignored.
bool slot_less(const Edge& a, const Edge& b);

/// Weighted edge-colored multigraph. Immutable after construction: every
/// modification returns a new graph, so searches can backtrack freely.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Throws InvalidParameters for loops, out-of-range vertices or colors, and
  /// duplicate (pair, color pair) slots. Edges are canonicalized and sorted.
  ColoredGraph(int n_vertices, int d_modes, std::vector<Edge> edges,
               std::vector<VertexKind> kinds = {});

  int num_vertices() const { return n_vertices_; }
  int num_modes() const { return d_modes_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  VertexKind kind(int v) const { return kinds_.at(static_cast<std::size_t>(v)); }
  bool is_virtual(int v) const { return kind(v) == VertexKind::virtual_input; }
  std::span<const VertexKind> kinds() const { return kinds_; }
  std::vector<int> real_vertices() const;
  std::vector<int> virtual_vertices() const;

  std::optional<std::size_t> find_edge(int u, int v, int cu, int cv) const;

  /// Flat real parameter vector (re0, im0, re1, im1, ...), length 2|E|.
  std::vector<double> parameters() const;
  ColoredGraph with_parameters(std::span<const double> params) const;
  std::vector<Complex> weights() const;
  ColoredGraph with_weights(std::span<const Complex> weights) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  int n_vertices_ = 0;
  int d_modes_ = 0;
  std::vector<VertexKind> kinds_;
  std::vector<Edge> edges_;
};

/// All d^2 n(n-1)/2 edges between n real vertices, weights zero.
ColoredGraph complete_graph(int n, int d);

/// Complete graph where vertex i only carries modes 0..modes[i]-1. The
/// graph's mode count is the maximum entry.
ColoredGraph complete_graph(std::span<const int> modes_per_vertex);

/// Complete graph on `n_real` real vertices plus `n_virtual` virtual input
/// vertices (indices n_real..n_real+n_virtual-1). Virtual vertices connect to
/// every real vertex with every color pair but never to each other.
ColoredGraph complete_graph_with_inputs(int n_real, int n_virtual, int d);

ColoredGraph remove_edge(const ColoredGraph& g, std::size_t index);
/// Inverse of remove_edge. Throws InvalidParameters if the slot is occupied.
ColoredGraph add_edge(const ColoredGraph& g, const Edge& e);

/// Perfect matching: edge indices into the graph, ascending.
struct Matching {
  std::vector<std::size_t> edges;
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Every edge subset covering each vertex of `cover` exactly once, using only
/// edges with both endpoints in `cover`. Order is lexicographic by the sorted
/// edge indices. Odd covers yield nothing.
std::vector<Matching> enumerate_perfect_matchings(const ColoredGraph& g,
                                                  std::span<const int> cover);
/// Covers all real vertices.
std::vector<Matching> enumerate_perfect_matchings(const ColoredGraph& g);

}  // namespace theseus
