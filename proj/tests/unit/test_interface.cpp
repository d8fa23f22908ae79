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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "theseus/cli.hpp"
#include "theseus/errors.hpp"
#include "theseus/reference.hpp"
#include "theseus/serialize.hpp"
#include "theseus/target_parser.hpp"

using namespace theseus;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("theseus_unit_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "theseus");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

const TargetState& state_of(const Target& t) { return std::get<TargetState>(t); }

}  // namespace

TEST_CASE("parse kets and constructors") {
  const TargetState g = state_of(parse_target("|000> + |111>"));
  CHECK(target_distance(g, ghz(3, 2)) < 1e-15);
  CHECK(target_distance(state_of(parse_target("ghz(4,2)")), ghz(4, 2)) < 1e-15);
  CHECK(target_distance(state_of(parse_target("bell(3)")), ghz(2, 3)) < 1e-15);
  CHECK(std::get<TargetGate>(parse_target("cnot(2,2)")) == cnot(2, 2));

  const TargetState c = state_of(parse_target("0.6*|01> - 0.8i|10>"));
  CHECK(std::abs(c.terms.at({0, 1}) - Complex{0.6, 0.0}) < 1e-15);
  CHECK(std::abs(c.terms.at({1, 0}) - Complex{0.0, -0.8}) < 1e-15);

  const TargetState d = state_of(parse_target("(1+1i)*|0> + i|1>"));
  CHECK(d.squared_norm() == doctest::Approx(1.0));
  CHECK(std::abs(d.terms.at({1}) - Complex{0.0, 1.0 / std::sqrt(3.0)}) < 1e-15);
}

TEST_CASE("parse gates") {
  const Target t = parse_target("gate(|00> -> |00>, |01> -> |01>, |10> -> |11>, |11> -> |10>)");
  CHECK(std::get<TargetGate>(t) == cnot(2, 2));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_target("|00> + |1>"), ParseError);
  CHECK_THROWS_AS(parse_target("|00> - |00>"), InvalidParameters);
  try {
    parse_target("|00> + * |11>");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_target("ghz(4"), ParseError);
  CHECK_THROWS_AS(parse_target("|0a>"), ParseError);
  CHECK_THROWS_AS(parse_target(""), ParseError);
}

TEST_CASE("format round trip") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int rep = 0; rep < 50; ++rep) {
    std::map<KetTerm, Complex> terms;
    for (int k = 0; k < 4; ++k) terms[{digit(rng), digit(rng), digit(rng)}] = Complex{u(rng), u(rng)};
    const TargetState t = make_target(terms);
    const Target back = parse_target(format_target(Target{t}));
    CHECK(target_distance(state_of(back), t) < 1e-14);
  }
  const Target g = cnot(2, 3);
  const TargetGate back = std::get<TargetGate>(parse_target(format_target(g)));
  CHECK(back.inputs == std::get<TargetGate>(g).inputs);
}

TEST_CASE("graph JSON") {
  const ColoredGraph single(2, 1, {Edge{0, 1, 0, 0, Complex{0.5, -0.25}}});
  const nlohmann::json j = nlohmann::json::parse(graph_to_json(single));
  CHECK(j["edges"].size() == 1);
  CHECK(j["edges"][0]["re"] == 0.5);
  CHECK(j["edges"][0]["im"] == -0.25);

  const nlohmann::json cyc = nlohmann::json::parse(graph_to_json(ghz4_cycle()));
  CHECK(cyc["n"] == 4);
  CHECK(cyc["edges"].size() == 4);

  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 20; ++rep) {
    const ColoredGraph g = oracle::random_graph(5, 3, 0.3, rng);
    CHECK(json_to_graph(graph_to_json(g)) == g);
  }
  const ColoredGraph with_inputs = cnot_graph();
  CHECK(json_to_graph(graph_to_json(with_inputs)) == with_inputs);
}

TEST_CASE("graph JSON schema errors name the field") {
  auto path_of = [](const std::string& text) {
    try {
      json_to_graph(text);
    } catch (const SchemaError& e) {
      return e.path();
    }
    return std::string("<none>");
  };
  CHECK(path_of(R"({"d": 2, "edges": []})") == "n");
  CHECK(path_of(R"({"n": 2, "d": 2, "edges": [{"u":0,"v":1,"cu":0,"cv":5,"re":1,"im":0}]})") == "edges[0].cv");
  CHECK(path_of(R"({"n": 2, "d": 2, "edges": [{"u":0,"v":1,"cu":0,"cv":0,"re":"x","im":0}]})") == "edges[0].re");
  CHECK(path_of("not json") == "$");
  CHECK(path_of(R"({"n": 2, "d": 1, "edges": [{"u":0,"v":1,"cu":0,"cv":0,"re":1,"im":0},
                                               {"u":1,"v":0,"cu":0,"cv":0,"re":1,"im":0}]})") == "edges");
}

TEST_CASE("DOT output") {
  const std::string empty = graph_to_dot(ColoredGraph(3, 1, {}));
  CHECK(empty.find("--") == std::string::npos);
  CHECK(empty.find("  2;") != std::string::npos);

  const ColoredGraph g(2, 3, {Edge{0, 1, 0, 2, Complex{-0.5, 0.0}}, Edge{0, 1, 1, 1, Complex{0.12345, 0.0}}});
  const std::string dot = graph_to_dot(g);
  CHECK(dot.find("color=\"blue;0.5:green\"") != std::string::npos);
  CHECK(dot.find("color=\"red\"") != std::string::npos);
  CHECK(dot.find("label=\"0.123\"") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.rfind("graph G {", 0) == 0);
  CHECK(dot == graph_to_dot(g));
}

TEST_CASE("CLI usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"discover", "--bogus"}).code == kExitUsage);
  const CliRun r = cli({"export", "--graph", "x.json", "--frobnicate", "1"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--frobnicate") != std::string::npos);
  CHECK(cli({"discover", "--target", "|00> + |1>", "--vertices", "2", "--dims", "2"}).code == kExitUsage);
  CHECK(cli({"export", "--graph", "/nonexistent/graph.json"}).code == kExitUsage);
}

TEST_CASE("CLI discover, evaluate and export") {
  TempDir tmp;
  const std::string prefix = tmp / "ghz";
  const CliRun r = cli({"discover", "--target", "ghz(4,2)", "--vertices", "4", "--dims", "2", "--seed", "1",
                        "--out", prefix});
  REQUIRE(r.code == kExitOk);
  const nlohmann::json sol = nlohmann::json::parse(slurp(prefix + ".json"));
  CHECK(sol["qualified"] == true);
  CHECK(sol["fidelity"].get<double>() >= 0.95);
  CHECK(fs::exists(prefix + ".dot"));
  std::istringstream trace(slurp(prefix + ".trace.jsonl"));
  std::string line;
  std::size_t lines = 0;
  while (std::getline(trace, line)) {
    CHECK(nlohmann::json::parse(line).contains("time"));
    ++lines;
  }
  CHECK(lines == sol["trace"].size());

  const std::string graph = tmp / "graph.json";
  spit(graph, sol["graph"].dump());
  const CliRun e = cli({"evaluate", "--graph", graph, "--target", "ghz(4,2)"});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("fidelity: ") == 0);
  CHECK(e.out.find("event_probability: ") != std::string::npos);

  const CliRun x = cli({"export", "--graph", graph, "--format", "json"});
  CHECK(x.code == kExitOk);
  CHECK(json_to_graph(x.out) == json_to_graph(sol["graph"].dump()));
  CHECK(cli({"export", "--graph", graph, "--format", "dot"}).out.rfind("graph G {", 0) == 0);
  CHECK(cli({"export", "--graph", graph, "--format", "png"}).code == kExitUsage);
}

TEST_CASE("CLI search failure exits with 1") {
  TempDir tmp;
  const CliRun r = cli({"discover", "--target", "ghz(4,2)", "--vertices", "4", "--dims", "2", "--climit", "1",
                        "--max-iterations", "0", "--out", tmp / "fail"});
  CHECK(r.code == kExitSearchFailed);
  CHECK(nlohmann::json::parse(slurp(tmp / "fail.json"))["qualified"] == false);
}

TEST_CASE("CLI settings precedence") {
  TempDir tmp;
  const std::string cfg = tmp / "cfg.json";
  spit(cfg, R"({"seed": 5, "c_limit": 1, "max_iterations": 0})");
  // The config file makes the search fail; flags on top of it restore it.
  CHECK(cli({"discover", "--target", "ghz(4,2)", "--vertices", "4", "--dims", "2", "--config", cfg, "--out",
             tmp / "a"})
            .code == kExitSearchFailed);
  CHECK(cli({"discover", "--target", "ghz(4,2)", "--vertices", "4", "--dims", "2", "--config", cfg, "--climit",
             "10", "--max-iterations", "500", "--out", tmp / "b"})
            .code == kExitOk);

  spit(cfg, R"({"bogus": 1})");
  CHECK(cli({"discover", "--target", "ghz(4,2)", "--vertices", "4", "--dims", "2", "--config", cfg, "--out",
             tmp / "c"})
            .code == kExitUsage);

  // THESEUS_SEED stands in for --seed.
  const std::vector<std::string> base{"discover", "--target", "ghz(4,2)", "--vertices", "4", "--dims", "2",
                                      "--step-budget", "5"};
  auto with = [&](std::vector<std::string> extra, const std::string& out) {
    std::vector<std::string> a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    a.push_back("--out");
    a.push_back(out);
    return cli(a).code;
  };
  ::setenv("THESEUS_SEED", "9", 1);
  CHECK(with({}, tmp / "env") == kExitOk);
  ::unsetenv("THESEUS_SEED");
  CHECK(with({"--seed", "9"}, tmp / "flag") == kExitOk);
  CHECK(slurp(tmp / "env.json") == slurp(tmp / "flag.json"));
}
