// Copyright 2026 The boolforge Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "boolforge/netlist_io.hpp"
#include "boolforge/oracle.hpp"

using namespace boolforge;

namespace {

// Number of BLIF logic sections that model a two-input gate
// (".names <a> <b> <out>"), excluding constant and buffer sections.
size_t blif_gate_sections(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  size_t count = 0;
  while (std::getline(is, line)) {
    if (line.rfind(".names ", 0) != 0) continue;
    std::istringstream ls(line);
    std::string tok;
    int tokens = 0;
    while (ls >> tok) ++tokens;
    if (tokens == 4) ++count;  // .names + two fan-ins + output
  }
  return count;
}

bool same_behavior(const Circuit& a, const Circuit& b, uint64_t seed,
                   size_t trials) {
  std::mt19937_64 rng(seed);
  for (size_t t = 0; t < trials; ++t) {
    Assignment x(a.num_inputs());
    for (auto& bit : x) bit = rng() & 1;
    if (evaluate(a, x) != evaluate(b, x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("json round trip preserves structure, metrics and behavior") {
  for (const char* name : {"add", "grc", "mux", "sum", "nck", "sel2"}) {
    const OperatorSpec* spec = find_operator(name);
    REQUIRE(spec != nullptr);
    uint32_t n = std::max(spec->min_n, 8u);
    OpParams p{n, 0, Variant::Parallel};
    if (spec->takes_k) p.k = spec->default_k ? spec->default_k(n) : n;
    Circuit c = spec->generate(p);
    Circuit back = from_json(to_json(c));
    INFO(name);
    CHECK(back.name == c.name);
    CHECK(back.num_inputs() == c.num_inputs());
    CHECK(back.num_outputs() == c.num_outputs());
    Metrics m1 = metrics(c), m2 = metrics(back);
    CHECK(m1.size == m2.size);
    CHECK(m1.depth == m2.depth);
    CHECK(validate(back).ok());
    CHECK(same_behavior(c, back, 99, 1000));
  }
}

TEST_CASE("json output carries the format version and metadata") {
  CircuitBuilder b("meta");
  Ref x = b.add_input("x");
  Ref y = b.add_input("y");
  Circuit c = std::move(b).set_outputs({g_and(b, x, y)});
  c.meta["origin"] = "unit-test";
  std::string text = to_json(c);
  CHECK(text.find("format_version") != std::string::npos);
  Circuit back = from_json(text);
  CHECK(back.meta.at("origin") == "unit-test");
}

TEST_CASE("malformed json is rejected with a parse error") {
  CHECK_THROWS_AS(from_json("not json at all"), ParseError);
  CHECK_THROWS_AS(from_json("{}"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"format_version": 999})"), ParseError);
  // Gate referring to a non-earlier node: structurally invalid.
  CircuitBuilder b("ok");
  Ref x = b.add_input("x");
  Ref y = b.add_input("y");
  std::string good = to_json(std::move(b).set_outputs({g_xor(b, x, y)}));
  nlohmann::json doc = nlohmann::json::parse(good);
  for (auto& jn : doc["nodes"])
    if (jn["kind"] == "gate") jn["a"] = 99;
  CHECK_THROWS_AS(from_json(doc.dump()), ParseError);
  // Bad gate code.
  nlohmann::json doc2 = nlohmann::json::parse(good);
  for (auto& jn : doc2["nodes"])
    if (jn["kind"] == "gate") jn["func"] = 31;
  CHECK_THROWS_AS(from_json(doc2.dump()), ParseError);
}

TEST_CASE("blif gate sections match the gate count") {
  for (const char* name : {"add", "enc", "dec", "sort"}) {
    const OperatorSpec* spec = find_operator(name);
    REQUIRE(spec != nullptr);
    uint32_t n = std::max(spec->min_n, 12u);
    OpParams p{n, 0, Variant::Sequential};
    if (spec->takes_k) p.k = spec->default_k ? spec->default_k(n) : n;
    Circuit c = spec->generate(p);
    INFO(name);
    CHECK(blif_gate_sections(to_blif(c)) == metrics(c).size);
  }
}

TEST_CASE("blif covers reproduce each gate function") {
  // One gate per two-input function code; the cover rows must evaluate
  // back to the same truth table.
  for (uint8_t code : {0x1, 0x2, 0x4, 0x6, 0x7, 0x8, 0x9, 0xb, 0xd, 0xe}) {
    CircuitBuilder b("g");
    Ref x = b.add_input("x");
    Ref y = b.add_input("y");
    Circuit c = std::move(b).set_outputs({b.add_gate(GateFunc(code), x, y)});
    std::string text = to_blif(c);
    // Parse the single gate section's rows.
    std::istringstream is(text);
    std::string line;
    bool in_section = false;
    bool table[2][2] = {{false, false}, {false, false}};
    while (std::getline(is, line)) {
      if (line.rfind(".names x y", 0) == 0) {
        in_section = true;
        continue;
      }
      if (!in_section || line.empty() || line[0] == '.') {
        in_section = in_section && !(line.rfind(".", 0) == 0);
        continue;
      }
      REQUIRE(line.size() >= 4);
      for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb) {
          bool m1 = line[0] == '-' || line[0] - '0' == a;
          bool m2 = line[1] == '-' || line[1] - '0' == bb;
          if (m1 && m2) table[a][bb] = true;
        }
    }
    GateFunc f(code);
    for (int a = 0; a < 2; ++a)
      for (int bb = 0; bb < 2; ++bb)
        CHECK(table[a][bb] == f.eval(a, bb));
  }
}

TEST_CASE("dot export names every node and is well formed") {
  const OperatorSpec* spec = find_operator("add");
  Circuit c = spec->generate({4, 0, Variant::Parallel});
  std::string dot = to_dot(c);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("}") != std::string::npos);
  size_t edges = 0;
  for (size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos)
    ++edges;
  CHECK(edges == 2 * metrics(c).size);  // two fan-ins per gate
}
