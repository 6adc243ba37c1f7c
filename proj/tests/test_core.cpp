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

#include "boolforge/builder.hpp"
#include "boolforge/sim.hpp"

using namespace boolforge;

TEST_CASE("gate function codes agree with their truth tables") {
  for (int code = 0; code < 16; ++code) {
    GateFunc f(static_cast<uint8_t>(code));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        bool bit = (code >> (2 * a + b)) & 1;
        CHECK(f.eval(a, b) == bit);
      }
    CHECK(!f.name().empty());
  }
  CHECK(kAnd.eval(1, 1));
  CHECK(!kAnd.eval(1, 0));
  CHECK(kOr.eval(0, 1));
  CHECK(kXor.eval(1, 0));
  CHECK(!kXor.eval(1, 1));
  CHECK(kXnor.eval(0, 0));
  CHECK(kNor.eval(0, 0));
  CHECK(!kNor.eval(0, 1));
}

TEST_CASE("word evaluation matches scalar evaluation lane by lane") {
  for (int code = 0; code < 16; ++code) {
    GateFunc f(static_cast<uint8_t>(code));
    uint64_t a = 0x0f0f0f0f0f0f0f0full;
    uint64_t b = 0x3333333333333333ull;
    uint64_t w = f.eval_word(a, b);
    for (int i = 0; i < 64; ++i)
      CHECK(((w >> i) & 1) == (f.eval((a >> i) & 1, (b >> i) & 1) ? 1u : 0u));
  }
}

TEST_CASE("operand transforms preserve semantics") {
  for (int code = 0; code < 16; ++code) {
    GateFunc f(static_cast<uint8_t>(code));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        CHECK(f.flip_a().eval(!a, b) == f.eval(a, b));
        CHECK(f.flip_b().eval(a, !b) == f.eval(a, b));
        CHECK(f.swapped().eval(b, a) == f.eval(a, b));
      }
  }
}

TEST_CASE("degenerate codes are exactly the six non-binary functions") {
  int count = 0;
  for (int code = 0; code < 16; ++code)
    if (GateFunc(static_cast<uint8_t>(code)).degenerate()) ++count;
  CHECK(count == 6);
  CHECK(GateFunc(0x0).degenerate());
  CHECK(GateFunc(0xf).degenerate());
  CHECK(GateFunc(0xc).degenerate());
  CHECK(!kAnd.degenerate());
  CHECK(!kXor.degenerate());
}

TEST_CASE("builder folds constants and duplicate operands") {
  CircuitBuilder b("fold");
  Ref x = b.add_input("x");
  Ref y = b.add_input("y");
  CHECK(g_and(b, x, b.constant(true)) == x);
  CHECK(g_and(b, x, b.constant(false)) == b.constant(false));
  CHECK(g_or(b, x, b.constant(true)) == b.constant(true));
  CHECK(g_xor(b, x, b.constant(false)) == x);
  CHECK(g_xor(b, x, b.constant(true)) == !x);
  CHECK(g_and(b, x, x) == x);
  CHECK(g_and(b, x, !x) == b.constant(false));
  CHECK(g_or(b, x, !x) == b.constant(true));
  CHECK(g_xor(b, x, x) == b.constant(false));
  CHECK(b.num_gates() == 0);
  Ref z = g_and(b, x, y);
  CHECK(b.num_gates() == 1);
  Circuit c = std::move(b).set_outputs({z});
  CHECK(metrics(c).size == 1);
  CHECK(metrics(c).degenerate_gates == 0);
}

TEST_CASE("complemented operands are absorbed into the function code") {
  CircuitBuilder b("absorb");
  Ref x = b.add_input("x");
  Ref y = b.add_input("y");
  Ref z = g_and(b, !x, !y);  // should become a single NOR gate
  CHECK(b.num_gates() == 1);
  Circuit c = std::move(b).set_outputs({z});
  REQUIRE(metrics(c).size == 1);
  for (const Node& n : c.nodes)
    if (n.kind == NodeKind::Gate) CHECK(n.func == kNor);
  CHECK(evaluate(c, {0, 0})[0] == 1);
  CHECK(evaluate(c, {1, 0})[0] == 0);
}

TEST_CASE("complemented outputs are realized as explicit gates") {
  CircuitBuilder b("realize");
  Ref x = b.add_input("x");
  Ref nx = b.realize(!x);
  Ref nx2 = b.realize(!x);  // cached, no second gate
  CHECK(nx == nx2);
  CHECK(b.num_gates() == 1);
  Circuit c = std::move(b).set_outputs({nx});
  CHECK(evaluate(c, {0})[0] == 1);
  CHECK(evaluate(c, {1})[0] == 0);
  CHECK(validate(c).ok());
}

TEST_CASE("metrics, node depths and validation on a hand-built netlist") {
  CircuitBuilder b("hand");
  Ref x = b.add_input("x");
  Ref y = b.add_input("y");
  Ref z = b.add_input("z");
  Ref t = g_and(b, x, y);
  Ref u = g_or(b, t, z);
  Circuit c = std::move(b).set_outputs({u, t});
  Metrics m = metrics(c);
  CHECK(m.size == 2);
  CHECK(m.depth == 2);
  CHECK(m.degenerate_gates == 0);
  std::vector<uint32_t> d = node_depths(c);
  CHECK(d[c.inputs[0]] == 0);
  CHECK(d[c.outputs[0]] == 2);
  CHECK(d[c.outputs[1]] == 1);
  CHECK(validate(c).ok());
}

TEST_CASE("validation flags forward references") {
  Circuit c;
  c.name = "bad";
  c.nodes.push_back({NodeKind::Input, GateFunc{}, 0, 0, "x"});
  c.nodes.push_back({NodeKind::Gate, kAnd, 0, 2, ""});  // refers to itself
  c.inputs = {0};
  c.outputs = {1};
  CHECK(!validate(c).ok());
}

TEST_CASE("prune removes gates unreachable from the outputs") {
  CircuitBuilder b("prune");
  Ref x = b.add_input("x");
  Ref y = b.add_input("y");
  Ref used = g_and(b, x, y);
  g_or(b, x, y);  // dead
  Circuit c = std::move(b).set_outputs({used});
  CHECK(metrics(c).size == 2);
  Circuit p = prune(c);
  CHECK(metrics(p).size == 1);
  CHECK(p.num_inputs() == 2);  // inputs always kept
  CHECK(validate(p).ok());
  for (int a = 0; a < 2; ++a)
    for (int bb = 0; bb < 2; ++bb)
      CHECK(evaluate(p, {static_cast<uint8_t>(a), static_cast<uint8_t>(bb)}) ==
            evaluate(c, {static_cast<uint8_t>(a), static_cast<uint8_t>(bb)}));
}

TEST_CASE("identical build sequences give byte-identical netlists") {
  auto build = [] {
    CircuitBuilder b("det");
    Ref x = b.add_input("x");
    Ref y = b.add_input("y");
    return std::move(b).set_outputs({g_xor(b, g_and(b, x, y), !y)});
  };
  Circuit c1 = build();
  Circuit c2 = build();
  REQUIRE(c1.nodes.size() == c2.nodes.size());
  for (size_t i = 0; i < c1.nodes.size(); ++i) {
    CHECK(c1.nodes[i].kind == c2.nodes[i].kind);
    CHECK(c1.nodes[i].func == c2.nodes[i].func);
    CHECK(c1.nodes[i].a == c2.nodes[i].a);
    CHECK(c1.nodes[i].b == c2.nodes[i].b);
  }
  CHECK(c1.outputs == c2.outputs);
}
