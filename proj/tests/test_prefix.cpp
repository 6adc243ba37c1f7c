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

#include <bit>
#include <random>

#include "boolforge/prefix.hpp"
#include "boolforge/sim.hpp"

using namespace boolforge;

namespace {

// Builds a circuit computing all prefixes (and suffixes, if scheduled)
// of the given one-bit gadget operation over n fresh inputs.
Circuit emit_schedule(const PrefixSchedule& s, const Gadget& g) {
  CircuitBuilder b("sched");
  std::vector<Bundle> ins;
  for (uint32_t i = 0; i < s.n; ++i) {
    Bundle bun;
    for (uint32_t w = 0; w < g.width; ++w)
      bun.wires.push_back(
          b.add_input("x" + std::to_string(i) + "_" + std::to_string(w)));
    ins.push_back(bun);
  }
  PrefixBundles pb = instantiate(s, g, ins, b);
  std::vector<Ref> outs;
  for (const Bundle& bun : pb.prefixes)
    for (Ref r : bun.wires) outs.push_back(b.realize(r));
  for (const Bundle& bun : pb.suffixes)
    for (Ref r : bun.wires) outs.push_back(b.realize(r));
  return std::move(b).set_outputs(outs);
}

void check_or_prefixes(const PrefixSchedule& s, uint64_t seed) {
  Circuit c = emit_schedule(s, or_gadget());
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 32; ++trial) {
    Assignment a(s.n);
    for (auto& bit : a) bit = rng() & 1;
    std::vector<uint8_t> out = evaluate(c, a);
    uint8_t run = 0;
    for (uint32_t i = 0; i < s.n; ++i) {
      run |= a[i];
      CHECK(out[i] == run);
    }
    if (s.has_suffixes()) {
      run = 0;
      for (uint32_t i = s.n; i-- > 0;) {
        run |= a[i];
        CHECK(out[s.n + i] == run);
      }
    }
  }
}

}  // namespace

TEST_CASE("serial schedule has n-1 steps of depth n-1 and is correct") {
  for (uint32_t n = 1; n <= 24; ++n) {
    PrefixSchedule s = serial_schedule(n);
    CHECK(s.size() == n - 1);
    CHECK(s.declared_depth == n - 1);
    check_or_prefixes(s, n);
  }
}

TEST_CASE("power-of-two parallel prefix: size 2n-2-k, depth 2k-2") {
  for (uint32_t k = 1; k <= 8; ++k) {
    uint32_t n = 1u << k;
    PrefixSchedule s = parallel_schedule(n);
    CHECK(s.size() == 2 * n - 2 - k);
    CHECK(s.declared_depth == (k >= 2 ? 2 * k - 2 : k));
  }
}

TEST_CASE("parallel prefix is correct at every width") {
  for (uint32_t n = 2; n <= 40; ++n) check_or_prefixes(parallel_schedule(n), n);
}

TEST_CASE("declared schedule depth matches the instantiated circuit") {
  for (uint32_t n : {2u, 3u, 8u, 16u, 23u, 32u, 64u}) {
    for (const PrefixSchedule& s :
         {serial_schedule(n), parallel_schedule(n),
          prefix_suffix_schedule(n, Variant::Parallel)}) {
      Circuit c = emit_schedule(s, xor_gadget());
      // XOR prefixes of independent inputs never fold, so circuit depth
      // equals schedule depth exactly (1 gate, depth 1 per step).
      CHECK(metrics(c).depth == s.declared_depth);
      CHECK(metrics(c).size == s.size());
    }
  }
}

TEST_CASE("joint prefix/suffix: sequential uses exactly 2n-3 steps") {
  for (uint32_t n = 2; n <= 32; ++n) {
    PrefixSchedule s = prefix_suffix_schedule(n, Variant::Sequential);
    CHECK(s.has_suffixes());
    CHECK(s.size() == 2 * n - 3);
    check_or_prefixes(s, n);
  }
}

TEST_CASE("joint prefix/suffix: parallel variant is correct and shallow") {
  for (uint32_t n = 2; n <= 40; ++n) {
    PrefixSchedule s = prefix_suffix_schedule(n, Variant::Parallel);
    CHECK(s.has_suffixes());
    check_or_prefixes(s, 1000 + n);
    uint32_t lg = static_cast<uint32_t>(std::bit_width(n - 1));
    CHECK(s.declared_depth <= 2 * lg + 2);
  }
}

TEST_CASE("every schedule obeys the size + depth >= 2n-2 tradeoff") {
  for (uint32_t n = 2; n <= 64; ++n) {
    for (const PrefixSchedule& s : {serial_schedule(n), parallel_schedule(n)})
      CHECK(s.size() + s.declared_depth >= 2 * n - 2);
    // The joint schedule computes prefixes too, so the bound applies.
    for (Variant v : {Variant::Sequential, Variant::Parallel})
      CHECK(prefix_suffix_schedule(n, v).size() +
                prefix_suffix_schedule(n, v).declared_depth >=
            2 * n - 2);
  }
}

TEST_CASE("the carry semigroup gadget respects operand order") {
  // [a1,b1] * [a2,b2] = [a2 ^ b2 a1, b2 b1] is non-commutative, so this
  // catches any left/right mixup in schedule instantiation.
  auto fold = [](const std::vector<std::pair<int, int>>& xs) {
    auto acc = xs[0];
    for (size_t i = 1; i < xs.size(); ++i)
      acc = {xs[i].first ^ (xs[i].second & acc.first),
             xs[i].second & acc.second};
    return acc;
  };
  std::mt19937_64 rng(3);
  for (uint32_t n : {2u, 3u, 5u, 8u, 13u, 16u, 21u}) {
    for (const PrefixSchedule& s :
         {serial_schedule(n), parallel_schedule(n),
          prefix_suffix_schedule(n, Variant::Parallel)}) {
      Circuit c = emit_schedule(s, star_gadget());
      for (int trial = 0; trial < 24; ++trial) {
        std::vector<std::pair<int, int>> xs(n);
        Assignment a;
        for (auto& x : xs) {
          x = {static_cast<int>(rng() & 1), static_cast<int>(rng() & 1)};
          a.push_back(static_cast<uint8_t>(x.first));
          a.push_back(static_cast<uint8_t>(x.second));
        }
        std::vector<uint8_t> out = evaluate(c, a);
        for (uint32_t i = 0; i < n; ++i) {
          auto want =
              fold({xs.begin(), xs.begin() + i + 1});
          CHECK(out[2 * i] == want.first);
          CHECK(out[2 * i + 1] == want.second);
        }
        if (s.has_suffixes())
          for (uint32_t i = 0; i < n; ++i) {
            auto want = fold({xs.begin() + i, xs.end()});
            CHECK(out[2 * n + 2 * i] == want.first);
            CHECK(out[2 * n + 2 * i + 1] == want.second);
          }
      }
    }
  }
}
