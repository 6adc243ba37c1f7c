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

#include "boolforge/arith.hpp"
#include "boolforge/oracle.hpp"
#include "boolforge/sim.hpp"

using namespace boolforge;

namespace {

Circuit random_circuit(uint32_t inputs, uint32_t gates, uint64_t seed) {
  std::mt19937_64 rng(seed);
  CircuitBuilder b("rand");
  std::vector<Ref> pool;
  for (uint32_t i = 0; i < inputs; ++i)
    pool.push_back(b.add_input("x" + std::to_string(i)));
  // Restrict to non-degenerate codes so gates are never folded away.
  const uint8_t codes[] = {0x1, 0x2, 0x4, 0x6, 0x7, 0x8, 0x9, 0xb, 0xd, 0xe};
  while (b.num_gates() < gates) {
    Ref a = pool[rng() % pool.size()];
    Ref c = pool[rng() % pool.size()];
    if (a.node() == c.node()) continue;
    if (rng() & 1) a = !a;
    Ref g = b.add_gate(GateFunc(codes[rng() % 10]), a, c);
    pool.push_back(g);
  }
  std::vector<Ref> outs(pool.end() - std::min<size_t>(4, pool.size()),
                        pool.end());
  return std::move(b).set_outputs(outs);
}

}  // namespace

TEST_CASE("evaluate matches the truth table of a hand-built circuit") {
  CircuitBuilder b("maj");
  Ref x = b.add_input("x");
  Ref y = b.add_input("y");
  Ref z = b.add_input("z");
  Ref maj = g_or(b, g_and(b, x, y), g_and(b, z, g_xor(b, x, y)));
  Circuit c = std::move(b).set_outputs({maj});
  for (int v = 0; v < 8; ++v) {
    Assignment a{static_cast<uint8_t>(v & 1), static_cast<uint8_t>((v >> 1) & 1),
                 static_cast<uint8_t>((v >> 2) & 1)};
    int ones = a[0] + a[1] + a[2];
    CHECK(evaluate(c, a)[0] == (ones >= 2 ? 1 : 0));
  }
}

TEST_CASE("evaluate rejects assignments of the wrong width") {
  CircuitBuilder b("w");
  Ref x = b.add_input("x");
  Circuit c = std::move(b).set_outputs({x});
  CHECK_THROWS_AS(evaluate(c, {0, 1}), ArgumentError);
}

TEST_CASE("bit batch packing round-trips assignments") {
  std::mt19937_64 rng(7);
  std::vector<Assignment> as;
  for (int t = 0; t < 130; ++t) {
    Assignment a(9);
    for (auto& bit : a) bit = rng() & 1;
    as.push_back(a);
  }
  BitBatch batch = BitBatch::from_assignments(as, 9);
  CHECK(batch.count == as.size());
  for (size_t t = 0; t < as.size(); ++t) CHECK(batch.get(t) == as[t]);
}

TEST_CASE("from_values exposes value bits as input lanes") {
  std::vector<uint64_t> vals{0, 1, 2, 5, 13, 255};
  BitBatch batch = BitBatch::from_values(vals, 8);
  for (size_t t = 0; t < vals.size(); ++t) {
    Assignment a = batch.get(t);
    for (int i = 0; i < 8; ++i) CHECK(a[i] == ((vals[t] >> i) & 1));
  }
}

TEST_CASE("block evaluation equals per-assignment evaluation") {
  std::mt19937_64 rng(42);
  for (uint64_t seed = 0; seed < 6; ++seed) {
    Circuit c = random_circuit(6 + seed, 40 + 10 * seed, seed);
    std::vector<Assignment> as;
    for (int t = 0; t < 257; ++t) {
      Assignment a(c.num_inputs());
      for (auto& bit : a) bit = rng() & 1;
      as.push_back(a);
    }
    BitBatch in = BitBatch::from_assignments(as, c.num_inputs());
    BitBatch out = evaluate_block(c, in);
    BitBatch out_s = evaluate_block_serial(c, in);
    CHECK(out.lanes == out_s.lanes);
    for (size_t t = 0; t < as.size(); ++t)
      CHECK(out.get(t) == evaluate(c, as[t]));
  }
}

TEST_CASE("a corrupted comparator gate is caught by the oracle check") {
  const OperatorSpec* spec = find_operator("cmp");
  REQUIRE(spec != nullptr);
  OpParams p{4, 0, Variant::Sequential};
  Circuit good = spec->generate(p);

  // Flip the function code of one live gate and recheck by hand.
  Circuit bad = good;
  for (auto it = bad.nodes.rbegin(); it != bad.nodes.rend(); ++it)
    if (it->kind == NodeKind::Gate) {
      it->func = GateFunc(static_cast<uint8_t>(it->func.code() ^ 0x6));
      break;
    }
  size_t mismatches = 0;
  for (uint32_t v = 0; v < 256; ++v) {
    Assignment a(8);
    for (int i = 0; i < 8; ++i) a[i] = (v >> i) & 1;
    if (evaluate(bad, a) != spec->oracle(p, a)) ++mismatches;
  }
  CHECK(mismatches >= 1);

  // The intact circuit passes the full equivalence check.
  EquivReport rep = check_operator(*spec, p, CheckBudget{});
  CHECK(rep.mode == EquivReport::Mode::Exhaustive);
  CHECK(rep.tested == 256);
  CHECK(rep.pass());
}
