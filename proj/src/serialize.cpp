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

#include "theseus/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace theseus {
namespace {

using nlohmann::json;

json edge_json(const Edge& e) {
  return json{{"u", e.u}, {"v", e.v}, {"cu", e.cu}, {"cv", e.cv}, {"re", e.weight.real()}, {"im", e.weight.imag()}};
}

json graph_json(const ColoredGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  json out{{"n", g.num_vertices()}, {"d", g.num_modes()}, {"edges", std::move(edges)}};
  const std::vector<int> virtuals = g.virtual_vertices();
  if (!virtuals.empty()) out["virtual"] = virtuals;
  return out;
}

int get_int(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw SchemaError(path + key, "missing");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw SchemaError(path + key, "must be an integer");
  return v.get<int>();
}

double get_number(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw SchemaError(path + key, "missing");
  const json& v = obj.at(key);
  if (!v.is_number()) throw SchemaError(path + key, "must be a number");
  return v.get<double>();
}

const char* palette(int mode) {
  static const char* const colors[] = {"blue", "red", "green", "orange", "purple",
                                       "brown", "magenta", "cyan", "gold", "gray"};
  return colors[static_cast<std::size_t>(mode) % std::size(colors)];
}

std::string fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string weight_label(Complex w) {
  if (fixed3(w.imag()) == "0.000") return fixed3(w.real());
  std::string im = fixed3(w.imag());
  if (im[0] != '-') im = "+" + im;
  return fixed3(w.real()) + im + "i";
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json trace_json(const TraceRecord& r, bool with_time) {
  json j{{"step", r.step},
         {"edge", r.edge ? edge_json(*r.edge) : json(nullptr)},
         {"accepted", r.accepted},
         {"fidelity", finite_or_null(r.fidelity)},
         {"loss", finite_or_null(r.loss)},
         {"restarts", r.restarts},
         {"edges", r.edges_left}};
  if (with_time) j["time"] = r.time;
  return j;
}

}  // namespace

std::string graph_to_json(const ColoredGraph& g) { return graph_json(g).dump(2) + "\n"; }

ColoredGraph json_to_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("$", "must be an object");
  const int n = get_int(doc, "n", "");
  const int d = get_int(doc, "d", "");
  if (n < 0) throw SchemaError("n", "must be non-negative");
  if (d < 1) throw SchemaError("d", "must be positive");
  if (!doc.contains("edges")) throw SchemaError("edges", "missing");
  const json& arr = doc.at("edges");
  if (!arr.is_array()) throw SchemaError("edges", "must be an array");

  std::vector<VertexKind> kinds(static_cast<std::size_t>(n), VertexKind::real);
  if (doc.contains("virtual")) {
    const json& vs = doc.at("virtual");
    if (!vs.is_array()) throw SchemaError("virtual", "must be an array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string p = "virtual[" + std::to_string(i) + "]";
      if (!vs[i].is_number_integer()) throw SchemaError(p, "must be an integer");
      const int v = vs[i].get<int>();
      if (v < 0 || v >= n) throw SchemaError(p, "vertex out of range");
      kinds[static_cast<std::size_t>(v)] = VertexKind::virtual_input;
    }
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = "edges[" + std::to_string(i) + "].";
    const json& e = arr[i];
    if (!e.is_object()) throw SchemaError("edges[" + std::to_string(i) + "]", "must be an object");
    Edge edge{get_int(e, "u", p), get_int(e, "v", p), get_int(e, "cu", p), get_int(e, "cv", p),
              Complex{get_number(e, "re", p), get_number(e, "im", p)}};
    if (edge.u < 0 || edge.u >= n) throw SchemaError(p + "u", "vertex out of range");
    if (edge.v < 0 || edge.v >= n) throw SchemaError(p + "v", "vertex out of range");
    if (edge.cu < 0 || edge.cu >= d) throw SchemaError(p + "cu", "mode out of range");
    if (edge.cv < 0 || edge.cv >= d) throw SchemaError(p + "cv", "mode out of range");
    if (edge.u == edge.v) throw SchemaError(p + "v", "loops are not allowed");
    edges.push_back(edge);
  }
  try {
    return ColoredGraph(n, d, std::move(edges), std::move(kinds));
  } catch (const InvalidParameters& e) {
    throw SchemaError("edges", e.what());
  }
}

std::string graph_to_dot(const ColoredGraph& g) {
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << "  " << v;
    if (g.is_virtual(v)) os << " [shape=doublecircle, label=\"V" << v << "\"]";
    os << ";\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v << " [color=\"";
    if (e.cu == e.cv)
      os << palette(e.cu);
    else
      os << palette(e.cu) << ";0.5:" << palette(e.cv);
    os << "\", label=\"" << weight_label(e.weight) << "\"";
    if (e.weight.real() < 0.0) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string trace_record_json(const TraceRecord& r) { return trace_json(r, true).dump(); }

std::string solution_to_json(const Solution& s, const std::string& target_text) {
  json trace = json::array();
  for (const TraceRecord& r : s.trace) trace.push_back(trace_json(r, false));
  json out{{"target", target_text},
           {"qualified", s.qualified},
           {"fidelity", finite_or_null(s.fidelity)},
           {"loss", finite_or_null(s.loss)},
           {"num_edges", s.graph.num_edges()},
           {"graph", graph_json(s.graph)},
           {"trace", std::move(trace)}};
  return out.dump(2) + "\n";
}

}  // namespace theseus
