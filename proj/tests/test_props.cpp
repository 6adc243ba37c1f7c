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

// Property suites: invariants of the operator families checked
// independently of the per-assignment oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "boolforge/apps.hpp"
#include "boolforge/arith.hpp"
#include "boolforge/count.hpp"
#include "boolforge/encode.hpp"
#include "boolforge/select.hpp"
#include "boolforge/sim.hpp"

using namespace boolforge;

namespace {

Assignment from_value(uint64_t v, uint32_t bits) {
  Assignment a(bits);
  for (uint32_t i = 0; i < bits; ++i) a[i] = (v >> i) & 1;
  return a;
}

uint64_t to_value(const std::vector<uint8_t>& bits) {
  uint64_t v = 0;
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) v |= 1ull << i;
  return v;
}

// Smallest w > v with the same popcount, by upward linear search;
// v itself when no such w exists below 2^n.
uint64_t next_same_weight_naive(uint64_t v, uint32_t n) {
  int pop = std::popcount(v);
  for (uint64_t w = v + 1; w < (1ull << n); ++w)
    if (std::popcount(w) == pop) return w;
  return v;
}

// Gosper's combinatorial successor; undefined for v == 0.
uint64_t next_same_weight_gosper(uint64_t v) {
  uint64_t c = v & -v;
  uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

TEST_CASE("reflected-sequence successor walks a full cycle") {
  for (uint32_t n = 1; n <= 12; ++n) {
    Circuit c = gen_grc(n, Variant::Sequential);
    uint64_t state = 0;
    std::set<uint64_t> seen;
    for (uint64_t step = 0; step < (1ull << n); ++step) {
      CHECK(seen.insert(state).second);  // no repeats before the cycle closes
      uint64_t next = to_value(evaluate(c, from_value(state, n)));
      CHECK(std::popcount(state ^ next) == 1);  // exactly one bit flips
      state = next;
    }
    CHECK(state == 0);  // 2^n steps return to the origin
    CHECK(seen.size() == (1ull << n));
  }
}

TEST_CASE("thermometer encode / decode round trips") {
  for (uint32_t n : {1u, 2u, 3u, 7u, 12u, 15u, 16u, 31u, 33u, 64u}) {
    uint32_t m = std::bit_width(n);
    Circuit un = gen_un(n, Variant::Parallel);
    Circuit uninv = gen_un_inv(n);
    for (uint64_t k = 0; k <= n; ++k) {
      std::vector<uint8_t> u = evaluate(un, from_value(k, m));
      for (uint32_t i = 0; i < n; ++i) CHECK(u[i] == (i < k ? 1 : 0));
      CHECK(to_value(evaluate(uninv, u)) == k);
    }
  }
}

TEST_CASE("decoder output is the one-hot vector of the address") {
  for (uint32_t n : {2u, 3u, 5u, 8u, 11u, 16u, 30u}) {
    uint32_t w = std::bit_width(n - 1);
    Circuit dec = gen_decoder(n, false);
    Circuit dmx = gen_decoder(n, true);
    for (uint64_t addr = 0; addr < (1ull << w); ++addr) {
      std::vector<uint8_t> o = evaluate(dec, from_value(addr, w));
      for (uint32_t i = 0; i < n; ++i) CHECK(o[i] == (i == addr ? 1 : 0));
      for (int data = 0; data < 2; ++data) {
        Assignment a = from_value(addr, w);
        a.push_back(static_cast<uint8_t>(data));
        std::vector<uint8_t> od = evaluate(dmx, a);
        for (uint32_t i = 0; i < n; ++i)
          CHECK(od[i] == (data && i == addr ? 1 : 0));
      }
    }
  }
}

TEST_CASE("compressors preserve the weighted arithmetic sum") {
  auto wrap3 = [](auto&& make) {
    CircuitBuilder b("c3");
    Ref x = b.add_input("x"), y = b.add_input("y"), z = b.add_input("z");
    CompressorOut o = make(b, x, y, z);
    return std::move(b).set_outputs({b.realize(o.u), b.realize(o.v)});
  };
  Circuit full = wrap3([](CircuitBuilder& b, Ref x, Ref y, Ref z) {
    return full_compressor(b, x, y, z);
  });
  Circuit block = wrap3([](CircuitBuilder& b, Ref x, Ref y, Ref z) {
    return block_compressor(b, x, y, z);
  });
  CHECK(metrics(full).size == 5);
  CHECK(metrics(block).size == 4);
  for (int v = 0; v < 8; ++v) {
    Assignment a = from_value(v, 3);
    int sum = a[0] + a[1] + a[2];
    std::vector<uint8_t> fo = evaluate(full, a);
    CHECK(2 * fo[0] + fo[1] == sum);
    // The cheaper variant is only contracted for inputs that can occur
    // inside a single-block reduction: (1,0,1) is excluded.
    if (!(a[0] == 1 && a[1] == 0 && a[2] == 1)) {
      std::vector<uint8_t> bo = evaluate(block, a);
      CHECK(2 * bo[0] + bo[1] == sum);
    }
  }
  CircuitBuilder hb("c2");
  Ref x = hb.add_input("x"), y = hb.add_input("y");
  CompressorOut ho = half_compressor(hb, x, y);
  Circuit half = std::move(hb).set_outputs({hb.realize(ho.u), hb.realize(ho.v)});
  CHECK(metrics(half).size == 2);
  for (int v = 0; v < 4; ++v) {
    Assignment a = from_value(v, 2);
    std::vector<uint8_t> o = evaluate(half, a);
    CHECK(2 * o[0] + o[1] == a[0] + a[1]);
  }
}

TEST_CASE("same-weight successor: weight preserved, minimal, cyclic") {
  for (uint32_t n = 2; n <= 14; ++n) {
    Circuit c = gen_nck(n, false);
    for (uint64_t v = 0; v < (1ull << n); ++v) {
      uint64_t got = to_value(evaluate(c, from_value(v, n)));
      CHECK(std::popcount(got) == std::popcount(v));
      CHECK(got == next_same_weight_naive(v, n));
    }
  }
}

TEST_CASE("same-weight successor agrees with the carry/divide formula") {
  for (uint32_t n : {8u, 12u, 16u}) {
    Circuit c = gen_nck(n, false);
    for (uint64_t v = 1; v < (1ull << n); ++v) {
      uint64_t g = next_same_weight_gosper(v);
      uint64_t want = g < (1ull << n) ? g : v;  // saturates at the top
      CHECK(to_value(evaluate(c, from_value(v, n))) == want);
    }
  }
}

TEST_CASE("flagged successor variant raises the flag iff a successor exists") {
  for (uint32_t n = 2; n <= 12; ++n) {
    Circuit c = gen_nck(n, true);
    for (uint64_t v = 0; v < (1ull << n); ++v) {
      std::vector<uint8_t> o = evaluate(c, from_value(v, n));
      uint64_t want = next_same_weight_naive(v, n);
      CHECK(o[n] == (want != v ? 1 : 0));
      if (o[n]) CHECK(to_value({o.begin(), o.begin() + n}) == want);
    }
  }
}

TEST_CASE("character exchange is an involution") {
  std::mt19937_64 rng(11);
  for (uint32_t n : {4u, 5u, 8u, 13u, 16u, 32u, 48u, 64u}) {
    uint32_t m = std::bit_width(n - 1);
    Circuit c = gen_exc(n);
    for (int trial = 0; trial < 200; ++trial) {
      uint64_t p = rng() % n, q = rng() % n;
      Assignment a = from_value(p, m);
      Assignment bq = from_value(q, m);
      a.insert(a.end(), bq.begin(), bq.end());
      std::vector<uint8_t> s(n);
      for (auto& bit : s) bit = rng() & 1;
      a.insert(a.end(), s.begin(), s.end());
      std::vector<uint8_t> once = evaluate(c, a);
      Assignment again(a.begin(), a.begin() + 2 * m);
      again.insert(again.end(), once.begin(), once.end());
      CHECK(evaluate(c, again) == s);  // swapping twice restores the string
      // Single application really swaps positions p and q.
      std::vector<uint8_t> want = s;
      std::swap(want[p], want[q]);
      CHECK(once == want);
    }
  }
}

TEST_CASE("double selection agrees with two independent multiplexors") {
  std::mt19937_64 rng(23);
  for (uint32_t n = 4; n <= 64; ++n) {
    uint32_t m = std::bit_width(n - 1);
    Circuit sel = gen_sel2(n);
    Circuit mux = gen_mux(n, Variant::Sequential);
    bool exhaustive = n <= 8;
    size_t trials = exhaustive ? n * n * (1ull << std::min(n, 10u)) : 300;
    for (size_t t = 0; t < trials; ++t) {
      uint64_t p, q, data;
      if (exhaustive) {
        size_t rest = t;
        p = rest % n;
        rest /= n;
        q = rest % n;
        rest /= n;
        data = rest;
      } else {
        p = rng() % n;
        q = rng() % n;
        data = rng();
      }
      std::vector<uint8_t> s(n);
      for (uint32_t i = 0; i < n; ++i)
        s[i] = (data >> (i % 64)) & 1;
      Assignment sa = from_value(p, m);
      Assignment qa = from_value(q, m);
      sa.insert(sa.end(), qa.begin(), qa.end());
      sa.insert(sa.end(), s.begin(), s.end());
      std::vector<uint8_t> got = evaluate(sel, sa);
      Assignment ma = from_value(p, m);
      ma.insert(ma.end(), s.begin(), s.end());
      Assignment mb = from_value(q, m);
      mb.insert(mb.end(), s.begin(), s.end());
      CHECK(got[0] == evaluate(mux, ma)[0]);
      CHECK(got[1] == evaluate(mux, mb)[0]);
    }
  }
}

TEST_CASE("outer-ones filter keeps exactly the outermost ones") {
  std::mt19937_64 rng(5);
  for (uint32_t n : {2u, 3u, 8u, 15u, 33u}) {
    Circuit c = gen_toi(n);
    size_t trials = n <= 15 ? (1ull << n) : 4000;
    for (size_t t = 0; t < trials; ++t) {
      uint64_t v = n <= 15 ? t : rng() & ((1ull << n) - 1);
      std::vector<uint8_t> o = evaluate(c, from_value(v, n));
      uint64_t kept = to_value({o.begin(), o.begin() + n});
      if (v == 0) {
        CHECK(kept == 0);
        CHECK(o[n] == 0);
      } else {
        uint64_t lo = v & -v;
        uint64_t hi = 1ull << (63 - std::countl_zero(v));
        CHECK(kept == (lo | hi));
        CHECK(o[n] == 1);
      }
    }
  }
}
