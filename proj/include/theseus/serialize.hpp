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

#include <string>
#include <string_view>

#include "theseus/graph.hpp"
#include "theseus/theseus.hpp"

namespace theseus {

/// {"n", "d", "edges": [{"u","v","cu","cv","re","im"}, ...]} in canonical
/// order. Graphs with inputs add "virtual": [vertex, ...].
std::string graph_to_json(const ColoredGraph& g);
/// Inverse of graph_to_json. Throws SchemaError naming the offending field.
ColoredGraph json_to_graph(std::string_view text);

/// Graphviz text. Mode 0 is blue, 1 red, 2 green; bi-colored edges are drawn
/// half in each color. Edges with negative real part are dashed.
std::string graph_to_dot(const ColoredGraph& g);

/// One JSON line: step, edge, accepted, fidelity, loss, restarts, edges, time.
std::string trace_record_json(const TraceRecord& r);

/// Solution without timing fields, so repeated seeded runs give identical text.
std::string solution_to_json(const Solution& s, const std::string& target_text);

}  // namespace theseus
