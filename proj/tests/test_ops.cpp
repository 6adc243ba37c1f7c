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

#include "boolforge/apps.hpp"
#include "boolforge/arith.hpp"
#include "boolforge/count.hpp"
#include "boolforge/encode.hpp"
#include "boolforge/oracle.hpp"
#include "boolforge/select.hpp"

using namespace boolforge;

namespace {

void check_family(const char* name, std::vector<uint32_t> ns) {
  const OperatorSpec* spec = find_operator(name);
  REQUIRE_MESSAGE(spec != nullptr, name);
  CheckBudget budget{18, 20000, 1};
  std::vector<Variant> variants =
      spec->takes_variant
          ? std::vector<Variant>{Variant::Sequential, Variant::Parallel}
          : std::vector<Variant>{Variant::Sequential};
  for (uint32_t n : ns) {
    if (n < spec->min_n) continue;
    for (Variant v : variants) {
      OpParams p{n, 0, v};
      if (spec->takes_k)
        p.k = spec->default_k ? spec->default_k(n) : n;
      EquivReport rep = check_operator(*spec, p, budget);
      INFO(name << " n=" << n << " variant="
                << (v == Variant::Parallel ? "par" : "seq"));
      CHECK(rep.pass());
      CHECK(rep.tested > 0);
    }
  }
}

size_t gen_size(const Circuit& c) { return metrics(c).size; }

}  // namespace

TEST_CASE("every registered family matches its oracle at several sizes") {
  check_family("inc", {1, 2, 3, 7, 8, 13});
  check_family("dcr", {1, 2, 3, 7, 8, 13});
  check_family("udc", {2, 3, 8, 12});
  check_family("grc", {1, 2, 3, 4, 5, 8, 13});
  check_family("car", {1, 2, 5, 8});
  check_family("add", {1, 2, 5, 8});
  check_family("cmp", {1, 2, 5, 8});
  check_family("cmpe", {1, 2, 5, 8});
  check_family("max", {1, 2, 5, 8});
  check_family("maxmin", {1, 2, 5, 8});
  check_family("dec", {2, 3, 7, 8, 16, 20});
  check_family("dmx", {2, 3, 7, 8, 16});
  check_family("mux", {2, 3, 5, 8, 12, 14});
  check_family("muxw", {2, 3, 4});
  check_family("cyc", {1, 2, 3, 5, 8, 12});
  check_family("sft", {1, 2, 3, 5, 8});
  check_family("enc", {2, 3, 8, 16, 33});
  check_family("un", {1, 2, 3, 7, 12, 15, 20});
  check_family("uninv", {1, 2, 7, 16, 20});
  check_family("trn", {1, 2, 3, 7, 12});
  check_family("foi", {1, 2, 7, 16});
  check_family("penc", {1, 2, 3, 8, 16});
  check_family("sum", {1, 2, 7, 15, 16});
  check_family("bw", {1, 2, 7, 16, 20});
  check_family("thr", {1, 2, 7, 15});
  check_family("sort", {1, 2, 7, 15});
  check_family("toi", {2, 3, 8, 15});
  check_family("nck", {2, 3, 8, 14});
  check_family("nckf", {2, 3, 8, 14});
  check_family("sel2", {4, 5, 6, 7, 8});
  check_family("exc", {4, 5, 6, 7});
}

TEST_CASE("exact gate counts of the scan-based constructions") {
  for (uint32_t n = 2; n <= 20; ++n) {
    CHECK(gen_size(gen_inc(n, Variant::Sequential)) == 2 * n - 2);
    CHECK(gen_size(gen_dec(n, Variant::Sequential)) == 2 * n - 2);
    CHECK(gen_size(gen_car(n, Variant::Sequential)) == 2 * n - 2);
    CHECK(gen_size(gen_add(n, Variant::Sequential)) == 5 * n - 3);
    CHECK(gen_size(gen_foi(n, Variant::Sequential)) == 2 * n - 2);
    CHECK(gen_size(gen_un_inv(n)) == n - 1);
    CHECK(gen_size(gen_udc(n, Variant::Sequential)) <= 3 * n - 3);
    CHECK(gen_size(gen_cmp(n, Variant::Sequential)) <= 4 * n - 3);
    CHECK(gen_size(gen_cmp(n, Variant::Sequential, true)) <= 5 * n - 3);
    CHECK(gen_size(gen_max(n, Variant::Sequential)) <= 6 * n - 3);
    CHECK(gen_size(gen_max(n, Variant::Sequential, true)) <= 7 * n - 3);
    if (n >= 4)
      CHECK(gen_size(gen_grc(n, Variant::Sequential)) <= 4 * n - 7);
    if (n >= 3)
      CHECK(gen_size(gen_penc(n, Variant::Sequential)) <= 2 * n - 3);
  }
}

TEST_CASE("weight-1 encoder: exact size at every n up to 64") {
  for (uint32_t n = 2; n <= 64; ++n) {
    uint32_t lg = std::bit_width(n - 1);
    CHECK(gen_size(gen_enc(n, Variant::Parallel)) == 2 * (n - lg - 1));
  }
}

TEST_CASE("thermometer generator: exact size and depth at n = 2^m - 1") {
  for (uint32_t m = 1; m <= 8; ++m) {
    uint32_t n = (1u << m) - 1;
    Metrics mm = metrics(gen_un(n, Variant::Parallel));
    CHECK(mm.size == 2 * ((1u << m) - m - 1));
    CHECK(mm.depth == (m >= 1 ? m - 1 : 0));
  }
}

TEST_CASE("small-n special cases produce valid minimal netlists") {
  // Gray successor at n=1,2 is a direct truth-table construction.
  Circuit g1 = gen_grc(1, Variant::Sequential);
  CHECK(evaluate(g1, {0})[0] == 1);
  CHECK(evaluate(g1, {1})[0] == 0);
  Circuit g2 = gen_grc(2, Variant::Sequential);
  // Reflected sequence on 2 bits (LSB first): 00 -> 01 -> 11 -> 10 -> 00.
  auto step = [&](uint8_t a, uint8_t b) { return evaluate(g2, {a, b}); };
  CHECK(step(0, 0) == std::vector<uint8_t>{1, 0});
  CHECK(step(1, 0) == std::vector<uint8_t>{1, 1});
  CHECK(step(1, 1) == std::vector<uint8_t>{0, 1});
  CHECK(step(0, 1) == std::vector<uint8_t>{0, 0});
}

TEST_CASE("generated netlists are structurally clean") {
  for (const OperatorSpec& spec : operator_registry()) {
    uint32_t n = std::max(spec.min_n, 9u);
    OpParams p{n, 0, Variant::Parallel};
    if (spec.takes_k) p.k = spec.default_k ? spec.default_k(n) : n;
    Circuit c = spec.generate(p);
    ValidationReport r = validate(c);
    INFO(spec.name.c_str());
    CHECK(r.ok());
    CHECK(metrics(c).degenerate_gates == 0);
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(gen_add(0, Variant::Sequential), ArgumentError);
  CHECK_THROWS_AS(gen_mux(1, Variant::Sequential), ArgumentError);
  CHECK_THROWS_AS(gen_enc(1, Variant::Parallel), ArgumentError);
  CHECK_THROWS_AS(gen_sel2(3), ArgumentError);
  CHECK_THROWS_AS(gen_exc(3), ArgumentError);
}
