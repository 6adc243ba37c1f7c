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

#include "boolforge/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "boolforge/apps.hpp"
#include "boolforge/arith.hpp"
#include "boolforge/count.hpp"
#include "boolforge/encode.hpp"
#include "boolforge/select.hpp"

namespace boolforge {

namespace {

uint64_t mask_bits(uint32_t n) {
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

uint64_t word(const Assignment& a, size_t off, size_t len) {
  uint64_t v = 0;
  for (size_t i = 0; i < len; ++i) v |= uint64_t(a[off + i] & 1) << i;
  return v;
}

void emit(std::vector<uint8_t>& o, uint64_t v, size_t len) {
  for (size_t i = 0; i < len; ++i) o.push_back((v >> i) & 1);
}

void need_word(uint32_t n, uint32_t limit = 64) {
  if (n > limit)
    throw ArgumentError("oracle: word-level reference limited to n <= " +
                        std::to_string(limit));
}

uint32_t addr_width(uint32_t n) { return std::bit_width(n - 1); }

// Position in the reflected sequence, straight from its recursive
// definition: the second half is the first half mirrored under a leading
// one.
uint64_t gray_rank(uint64_t g, uint32_t n) {
  if (n == 0) return 0;
  uint64_t half = uint64_t{1} << (n - 1);
  uint64_t r = gray_rank(g & (half - 1), n - 1);
  return g & half ? half + (half - 1 - r) : r;
}

uint64_t gray_unrank(uint64_t idx, uint32_t n) {
  if (n == 0) return 0;
  uint64_t half = uint64_t{1} << (n - 1);
  if (idx < half) return gray_unrank(idx, n - 1);
  return half | gray_unrank(half - 1 - (idx - half), n - 1);
}

// Next number of the same binary weight, or v itself when none exists
// below 2^n. Linear upward search for small n (the defining form);
// carry/divide formulation beyond that, where the search could walk an
// exponential gap. The two agree (cross-checked in the test suite).
uint64_t next_same_weight(uint64_t v, uint32_t n) {
  uint64_t m = mask_bits(n);
  if (v == 0) return 0;
  if (n <= 22) {
    int w = std::popcount(v);
    for (uint64_t t = v + 1; t <= m; ++t)
      if (std::popcount(t) == w) return t;
    return v;
  }
  uint64_t c = v & (~v + 1);
  uint64_t r = v + c;
  if (r > m || r == 0) return v;
  return r | (((v ^ r) >> 2) / c);
}

bool single_block(uint64_t v) {
  if (v == 0) return true;
  uint64_t y = v >> std::countr_zero(v);
  return (y & (y + 1)) == 0;
}

Assignment from_value(uint64_t v, size_t bits) {
  Assignment a(bits);
  for (size_t i = 0; i < bits && i < 64; ++i) a[i] = (v >> i) & 1;
  return a;
}

Bound exact_bound(std::string f, double v) { return {std::move(f), v, true}; }
Bound cap_bound(std::string f, double v) { return {std::move(f), v, false}; }

using Out = std::vector<uint8_t>;

std::vector<OperatorSpec> make_registry() {
  std::vector<OperatorSpec> r;
  auto add = [&r](OperatorSpec s) { r.push_back(std::move(s)); };

  add({.name = "inc",
       .summary = "X + 1 mod 2^n",
       .min_n = 1,
       .depth_c = 2,
       .depth_d = 2,
       .generate = [](const OpParams& p) { return gen_inc(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n);
             Out o;
             emit(o, (word(a, 0, p.n) + 1) & mask_bits(p.n), p.n);
             return o;
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential || p.n < 2) return Bound{};
             return exact_bound("2n-2", 2.0 * p.n - 2);
           }});

  add({.name = "dcr",
       .summary = "X - 1 mod 2^n",
       .min_n = 1,
       .depth_c = 2,
       .depth_d = 2,
       .generate = [](const OpParams& p) { return gen_dec(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n);
             Out o;
             emit(o, (word(a, 0, p.n) - 1) & mask_bits(p.n), p.n);
             return o;
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential || p.n < 2) return Bound{};
             return exact_bound("2n-2", 2.0 * p.n - 2);
           }});

  add({.name = "udc",
       .summary = "X + 1 or X - 1 mod 2^n under a direction flag",
       .min_n = 2,
       .depth_c = 2,
       .depth_d = 3,
       .generate = [](const OpParams& p) { return gen_udc(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n);
             uint64_t x = word(a, 0, p.n);
             Out o;
             emit(o, (a[p.n] ? x + 1 : x - 1) & mask_bits(p.n), p.n);
             return o;
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential) return Bound{};
             return cap_bound("3n-3", 3.0 * p.n - 3);
           }});

  add({.name = "grc",
       .summary = "cyclic successor in the reflected (Gray) sequence",
       .min_n = 1,
       .depth_c = 4,
       .depth_d = 4,
       .generate = [](const OpParams& p) { return gen_grc(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n, 63);
             uint64_t rank = gray_rank(word(a, 0, p.n), p.n);
             Out o;
             emit(o, gray_unrank((rank + 1) & mask_bits(p.n), p.n), p.n);
             return o;
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential || p.n < 4) return Bound{};
             return cap_bound("4n-7", 4.0 * p.n - 7);
           }});

  add({.name = "car",
       .summary = "carry chain c_1 = x_0, c_{i+1} = x_i ^ y_i c_i",
       .min_n = 1,
       .depth_c = 4,
       .depth_d = 2,
       .generate = [](const OpParams& p) { return gen_car(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             Out o(p.n);
             uint8_t c = o[0] = a[0];
             for (uint32_t i = 1; i < p.n; ++i)
               o[i] = c = a[i] ^ (a[p.n + i] & c);
             return o;
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential || p.n < 2) return Bound{};
             return exact_bound("2n-2", 2.0 * p.n - 2);
           }});

  add({.name = "add",
       .summary = "A + B as an (n+1)-bit sum",
       .min_n = 1,
       .depth_c = 4,
       .depth_d = 2,
       .generate = [](const OpParams& p) { return gen_add(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n, 63);
             Out o;
             emit(o, word(a, 0, p.n) + word(a, p.n, p.n), p.n + 1);
             return o;
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential) return Bound{};
             return exact_bound("5n-3", 5.0 * p.n - 3);
           }});

  add({.name = "cmp",
       .summary = "predicate A > B",
       .min_n = 1,
       .depth_c = 4,
       .depth_d = 4,
       .generate =
           [](const OpParams& p) { return gen_cmp(p.n, p.variant, false); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n);
             return Out{word(a, 0, p.n) > word(a, p.n, p.n)};
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential) return Bound{};
             return cap_bound("4n-3", 4.0 * p.n - 3);
           }});

  add({.name = "cmpe",
       .summary = "predicates A > B and A = B",
       .min_n = 1,
       .depth_c = 4,
       .depth_d = 4,
       .generate =
           [](const OpParams& p) { return gen_cmp(p.n, p.variant, true); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n);
             uint64_t x = word(a, 0, p.n), y = word(a, p.n, p.n);
             return Out{x > y, x == y};
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential) return Bound{};
             return cap_bound("5n-3", 5.0 * p.n - 3);
           }});

  add({.name = "max",
       .summary = "max(A, B)",
       .min_n = 1,
       .depth_c = 4,
       .depth_d = 4,
       .generate =
           [](const OpParams& p) { return gen_max(p.n, p.variant, false); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n);
             Out o;
             emit(o, std::max(word(a, 0, p.n), word(a, p.n, p.n)), p.n);
             return o;
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential) return Bound{};
             return cap_bound("6n-3", 6.0 * p.n - 3);
           }});

  add({.name = "maxmin",
       .summary = "max(A, B) and min(A, B)",
       .min_n = 1,
       .depth_c = 4,
       .depth_d = 4,
       .generate =
           [](const OpParams& p) { return gen_max(p.n, p.variant, true); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n);
             uint64_t x = word(a, 0, p.n), y = word(a, p.n, p.n);
             Out o;
             emit(o, std::max(x, y), p.n);
             emit(o, std::min(x, y), p.n);
             return o;
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential) return Bound{};
             return cap_bound("7n-3", 7.0 * p.n - 3);
           }});

  add({.name = "dec",
       .summary = "one-hot decoder of a ceil(log n)-bit address",
       .min_n = 2,
       .takes_variant = false,
       .depth_c = 1,
       .depth_d = 4,
       .generate = [](const OpParams& p) { return gen_decoder(p.n, false); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             uint64_t addr = word(a, 0, addr_width(p.n));
             Out o(p.n, 0);
             if (addr < p.n) o[addr] = 1;
             return o;
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("n+8*sqrt(n)", p.n + 8 * std::sqrt(p.n));
           }});

  add({.name = "dmx",
       .summary = "demultiplexor: decoder carrying a data bit",
       .min_n = 2,
       .takes_variant = false,
       .depth_c = 1,
       .depth_d = 4,
       .generate = [](const OpParams& p) { return gen_decoder(p.n, true); },
       .oracle = [](const OpParams& p, const Assignment& a) {
         uint32_t w = addr_width(p.n);
         uint64_t addr = word(a, 0, w);
         Out o(p.n, 0);
         if (addr < p.n && a[w]) o[addr] = 1;
         return o;
       }});

  add({.name = "mux",
       .summary = "(n,1)-multiplexor",
       .min_n = 2,
       .depth_c = 2,
       .depth_d = 6,
       .generate = [](const OpParams& p) { return gen_mux(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             uint32_t w = addr_width(p.n);
             uint64_t addr = word(a, 0, w);
             return Out{addr < p.n ? a[w + addr] : uint8_t{0}};
           },
       .in_domain =
           [](const OpParams& p, const Assignment& a) {
             // The tree variant repeats data for addresses >= n.
             return p.variant == Variant::Parallel ||
                    word(a, 0, addr_width(p.n)) < p.n;
           },
       .sample =
           [](const OpParams& p, std::mt19937_64& rng) {
             uint32_t w = addr_width(p.n);
             Assignment a(w + p.n);
             for (auto& bit : a) bit = rng() & 1;
             if (p.variant == Variant::Sequential) {
               uint64_t addr = rng() % p.n;
               for (uint32_t i = 0; i < w; ++i) a[i] = (addr >> i) & 1;
             }
             return a;
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("2n+12*sqrt(n)", 2.0 * p.n + 12 * std::sqrt(p.n));
           }});

  add({.name = "muxw",
       .summary = "(n,k)-multiplexor over k-bit words",
       .min_n = 2,
       .takes_k = true,
       .takes_variant = false,
       .default_k = [](uint32_t) -> uint32_t { return 4; },
       .depth_c = 2,
       .depth_d = 6,
       .generate = [](const OpParams& p) { return gen_mux_k(p.n, p.k); },
       .oracle = [](const OpParams& p, const Assignment& a) {
         uint32_t w = addr_width(p.n);
         uint64_t addr = word(a, 0, w);
         Out o(p.k, 0);
         if (addr < p.n)
           for (uint32_t t = 0; t < p.k; ++t) o[t] = a[w + addr * p.k + t];
         return o;
       }});

  add({.name = "cyc",
       .summary = "cyclic shift by X mod n, X < 2^ceil(log k)",
       .min_n = 1,
       .takes_k = true,
       .takes_variant = false,
       .default_k = [](uint32_t n) { return n; },
       .depth_c = 3,
       .depth_d = 1,
       .generate = [](const OpParams& p) { return gen_cyc(p.k, p.n); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             uint32_t l = p.k > 1 ? std::bit_width(p.k - 1) : 0;
             uint64_t x = word(a, 0, l) % p.n;
             Out o(p.n, 0);
             for (uint32_t j = 0; j < p.n; ++j)
               o[(j + x) % p.n] = a[l + j];
             return o;
           },
       .bound =
           [](const OpParams& p) {
             uint32_t l = p.k > 1 ? std::bit_width(p.k - 1) : 0;
             return cap_bound("3*ceil(log k)*n", 3.0 * l * p.n);
           }});

  add({.name = "sft",
       .summary = "left shift into an (n+k-1)-bit frame, zeros shifted in",
       .min_n = 1,
       .takes_k = true,
       .takes_variant = false,
       .default_k = [](uint32_t n) { return n; },
       .depth_c = 3,
       .depth_d = 1,
       .generate = [](const OpParams& p) { return gen_sft(p.k, p.n); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             uint32_t l = p.k > 1 ? std::bit_width(p.k - 1) : 0;
             uint64_t x = word(a, 0, l);
             Out o(p.n + p.k - 1, 0);
             for (uint32_t j = 0; j < p.n; ++j)
               if (j + x < o.size()) o[j + x] = a[l + j];
             return o;
           },
       .bound =
           [](const OpParams& p) {
             uint32_t l = p.k > 1 ? std::bit_width(p.k - 1) : 0;
             return cap_bound("3*ceil(log k)*n-2(k-1)",
                              3.0 * l * p.n - 2.0 * (p.k - 1));
           }});

  add({.name = "enc",
       .summary = "index of the single one in a weight-1 string",
       .min_n = 2,
       .takes_variant = false,
       .depth_c = 1,
       .depth_d = 1,
       .generate =
           [](const OpParams& p) { return gen_enc(p.n, Variant::Parallel); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             uint64_t idx = 0;
             for (uint32_t i = 0; i < p.n; ++i)
               if (a[i]) idx = i;
             Out o;
             emit(o, idx, addr_width(p.n));
             return o;
           },
       .in_domain =
           [](const OpParams& p, const Assignment& a) {
             return std::count(a.begin(), a.begin() + p.n, 1) == 1;
           },
       .sample =
           [](const OpParams& p, std::mt19937_64& rng) {
             Assignment a(p.n, 0);
             a[rng() % p.n] = 1;
             return a;
           },
       .bound =
           [](const OpParams& p) {
             double lg = std::bit_width(p.n - 1);
             return exact_bound("2(n-ceil(log n)-1)", 2.0 * (p.n - lg - 1));
           }});

  add({.name = "un",
       .summary = "unary (thermometer) string of a number K <= n",
       .min_n = 1,
       .takes_variant = false,
       .depth_c = 1,
       .depth_d = 4,
       .generate =
           [](const OpParams& p) { return gen_un(p.n, Variant::Parallel); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             uint64_t k = word(a, 0, std::bit_width(p.n));
             Out o(p.n);
             for (uint32_t i = 0; i < p.n; ++i) o[i] = i < k;
             return o;
           },
       .in_domain =
           [](const OpParams& p, const Assignment& a) {
             return word(a, 0, std::bit_width(p.n)) <= p.n;
           },
       .sample =
           [](const OpParams& p, std::mt19937_64& rng) {
             return from_value(rng() % (p.n + 1), std::bit_width(p.n));
           },
       .bound =
           [](const OpParams& p) {
             if ((p.n & (p.n + 1)) != 0) return Bound{};
             double m = std::bit_width(p.n);
             return exact_bound("2(2^m-m-1), n=2^m-1", 2.0 * (p.n - m));
           }});

  add({.name = "uninv",
       .summary = "number of ones of a thermometer string",
       .min_n = 1,
       .takes_variant = false,
       .depth_c = 1,
       .depth_d = 2,
       .generate = [](const OpParams& p) { return gen_un_inv(p.n); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             Out o;
             emit(o, std::count(a.begin(), a.begin() + p.n, 1),
                  std::bit_width(p.n));
             return o;
           },
       .in_domain =
           [](const OpParams& p, const Assignment& a) {
             for (uint32_t i = 1; i < p.n; ++i)
               if (a[i] > a[i - 1]) return false;
             return true;
           },
       .sample =
           [](const OpParams& p, std::mt19937_64& rng) {
             uint64_t k = rng() % (p.n + 1);
             Assignment a(p.n);
             for (uint32_t i = 0; i < p.n; ++i) a[i] = i < k;
             return a;
           },
       .bound =
           [](const OpParams& p) {
             return exact_bound("n-1", p.n - 1.0);
           }});

  add({.name = "trn",
       .summary = "keep the first K characters of X, zero the rest",
       .min_n = 1,
       .takes_variant = false,
       .depth_c = 1,
       .depth_d = 6,
       .generate = [](const OpParams& p) { return gen_trn(p.n); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             uint32_t m = std::bit_width(p.n);
             uint64_t k = word(a, 0, m);
             Out o(p.n);
             for (uint32_t i = 0; i < p.n; ++i) o[i] = a[m + i] & (i < k);
             return o;
           },
       .in_domain =
           [](const OpParams& p, const Assignment& a) {
             return word(a, 0, std::bit_width(p.n)) <= p.n;
           },
       .sample =
           [](const OpParams& p, std::mt19937_64& rng) {
             uint32_t m = std::bit_width(p.n);
             Assignment a(m + p.n);
             for (auto& bit : a) bit = rng() & 1;
             uint64_t k = rng() % (p.n + 1);
             for (uint32_t i = 0; i < m; ++i) a[i] = (k >> i) & 1;
             return a;
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("3n+10*sqrt(n)", 3.0 * p.n + 10 * std::sqrt(p.n));
           }});

  add({.name = "foi",
       .summary = "keep only the first one; appended presence indicator",
       .min_n = 1,
       .depth_c = 2,
       .depth_d = 2,
       .generate = [](const OpParams& p) { return gen_foi(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             Out o(p.n + 1, 0);
             for (uint32_t i = 0; i < p.n; ++i)
               if (a[i]) {
                 o[i] = 1;
                 o[p.n] = 1;
                 break;
               }
             return o;
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential || p.n < 2) return Bound{};
             return exact_bound("2n-2", 2.0 * p.n - 2);
           }});

  add({.name = "penc",
       .summary = "priority encoder: position of the first one + indicator",
       .min_n = 1,
       .depth_c = 3,
       .depth_d = 4,
       .generate = [](const OpParams& p) { return gen_penc(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             uint32_t m = p.n > 1 ? addr_width(p.n) : 0;
             Out o(m + 1, 0);
             for (uint32_t i = 0; i < p.n; ++i)
               if (a[i]) {
                 for (uint32_t j = 0; j < m; ++j) o[j] = (i >> j) & 1;
                 o[m] = 1;
                 break;
               }
             return o;
           },
       .care =
           [](const OpParams& p, const Assignment& a) {
             uint32_t m = p.n > 1 ? addr_width(p.n) : 0;
             Out mask(m + 1, 1);
             if (std::count(a.begin(), a.begin() + p.n, 1) == 0)
               std::fill(mask.begin(), mask.begin() + m, 0);
             return mask;
           },
       .bound =
           [](const OpParams& p) {
             if (p.variant != Variant::Sequential || p.n < 3) return Bound{};
             return cap_bound("2n-3", 2.0 * p.n - 3);
           }});

  add({.name = "sum",
       .summary = "binary weight (popcount) of the input string",
       .min_n = 1,
       .depth_c = 6,
       .depth_d = 8,
       .generate = [](const OpParams& p) { return gen_sum(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             Out o;
             emit(o, std::count(a.begin(), a.begin() + p.n, 1),
                  std::bit_width(p.n));
             return o;
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("5n", 5.0 * p.n);
           }});

  add({.name = "bw",
       .summary = "width of the single block of ones",
       .min_n = 1,
       .depth_c = 6,
       .depth_d = 12,
       .generate = [](const OpParams& p) { return gen_bw(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             Out o;
             emit(o, std::count(a.begin(), a.begin() + p.n, 1),
                  std::bit_width(p.n));
             return o;
           },
       .in_domain =
           [](const OpParams& p, const Assignment& a) {
             return single_block(word(a, 0, std::min<uint32_t>(p.n, 64)));
           },
       .sample =
           [](const OpParams& p, std::mt19937_64& rng) {
             uint64_t len = rng() % (p.n + 1);
             uint64_t start = len == p.n ? 0 : rng() % (p.n - len + 1);
             Assignment a(p.n, 0);
             for (uint64_t i = 0; i < len; ++i) a[start + i] = 1;
             return a;
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("4n", 4.0 * p.n);
           }});

  add({.name = "thr",
       .summary = "threshold predicate: binary weight >= k",
       .min_n = 1,
       .takes_k = true,
       .default_k = [](uint32_t n) { return (n + 1) / 2; },
       .depth_c = 7,
       .depth_d = 8,
       .generate =
           [](const OpParams& p) { return gen_thr(p.n, p.k, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             return Out{std::count(a.begin(), a.begin() + p.n, 1) >=
                        static_cast<long>(p.k)};
           },
       .bound =
           [](const OpParams& p) {
             double lg = std::bit_width(p.n);
             return cap_bound("5n+2*ceil(log(n+1))", 5.0 * p.n + 2 * lg);
           }});

  add({.name = "sort",
       .summary = "sorts the string: zeros first, then the ones",
       .min_n = 1,
       .depth_c = 7,
       .depth_d = 10,
       .generate = [](const OpParams& p) { return gen_sort(p.n, p.variant); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             long w = std::count(a.begin(), a.begin() + p.n, 1);
             Out o(p.n);
             for (uint32_t i = 0; i < p.n; ++i)
               o[i] = i >= p.n - static_cast<uint32_t>(w);
             return o;
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("7.5n", 7.5 * p.n);
           }});

  add({.name = "toi",
       .summary = "keep only the outermost ones + presence indicator",
       .min_n = 2,
       .takes_variant = false,
       .depth_c = 3,
       .depth_d = 5,
       .generate = [](const OpParams& p) { return gen_toi(p.n); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             Out o(p.n + 1, 0);
             int lo = -1, hi = -1;
             for (uint32_t i = 0; i < p.n; ++i)
               if (a[i]) {
                 if (lo < 0) lo = i;
                 hi = i;
               }
             if (lo >= 0) {
               o[lo] = o[hi] = 1;
               o[p.n] = 1;
             }
             return o;
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("5n", 5.0 * p.n);
           }});

  add({.name = "nck",
       .summary = "next number of the same binary weight (or itself)",
       .min_n = 2,
       .takes_variant = false,
       .depth_c = 8,
       .depth_d = 12,
       .generate = [](const OpParams& p) { return gen_nck(p.n, false); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n, 63);
             Out o;
             emit(o, next_same_weight(word(a, 0, p.n), p.n), p.n);
             return o;
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("14n", 14.0 * p.n);
           }});

  add({.name = "nckf",
       .summary = "next-same-weight with validity flag, cheaper merge",
       .min_n = 2,
       .takes_variant = false,
       .depth_c = 8,
       .depth_d = 12,
       .generate = [](const OpParams& p) { return gen_nck(p.n, true); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             need_word(p.n, 63);
             uint64_t v = word(a, 0, p.n);
             uint64_t nx = next_same_weight(v, p.n);
             Out o;
             emit(o, nx, p.n);
             o.push_back(nx != v);
             return o;
           },
       .care =
           [](const OpParams& p, const Assignment& a) {
             uint64_t v = word(a, 0, p.n);
             Out mask(p.n + 1, 1);
             // Value bits are contractually valid only when the flag is 1.
             if (next_same_weight(v, p.n) == v)
               std::fill(mask.begin(), mask.begin() + p.n, 0);
             return mask;
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("14n", 14.0 * p.n);
           }});

  add({.name = "sel2",
       .summary = "double selection: (y_a, y_b) for two addresses",
       .min_n = 4,
       .takes_variant = false,
       .depth_c = 3,
       .depth_d = 8,
       .generate = [](const OpParams& p) { return gen_sel2(p.n); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             uint32_t m = addr_width(p.n);
             uint64_t x = word(a, 0, m), y = word(a, m, m);
             return Out{x < p.n ? a[2 * m + x] : uint8_t{0},
                        y < p.n ? a[2 * m + y] : uint8_t{0}};
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("3n+8*n^(2/3)",
                              3.0 * p.n + 8 * std::pow(p.n, 2.0 / 3.0));
           }});

  add({.name = "exc",
       .summary = "exchange the characters at positions a and b",
       .min_n = 4,
       .takes_variant = false,
       .depth_c = 3,
       .depth_d = 10,
       .generate = [](const OpParams& p) { return gen_exc(p.n); },
       .oracle =
           [](const OpParams& p, const Assignment& a) {
             uint32_t m = addr_width(p.n);
             uint64_t x = word(a, 0, m), y = word(a, m, m);
             Out o(a.begin() + 2 * m, a.begin() + 2 * m + p.n);
             std::swap(o[x], o[y]);
             return o;
           },
       .in_domain =
           [](const OpParams& p, const Assignment& a) {
             uint32_t m = addr_width(p.n);
             return word(a, 0, m) < p.n && word(a, m, m) < p.n;
           },
       .sample =
           [](const OpParams& p, std::mt19937_64& rng) {
             uint32_t m = addr_width(p.n);
             Assignment a(2 * m + p.n);
             for (uint32_t i = 0; i < p.n; ++i) a[2 * m + i] = rng() & 1;
             uint64_t x = rng() % p.n, y = rng() % p.n;
             for (uint32_t i = 0; i < m; ++i) {
               a[i] = (x >> i) & 1;
               a[m + i] = (y >> i) & 1;
             }
             return a;
           },
       .bound =
           [](const OpParams& p) {
             return cap_bound("7n+16*n^(2/3)",
                              7.0 * p.n + 16 * std::pow(p.n, 2.0 / 3.0));
           }});

  return r;
}

}  // namespace

const std::vector<OperatorSpec>& operator_registry() {
  static const std::vector<OperatorSpec> reg = make_registry();
  return reg;
}

const OperatorSpec* find_operator(std::string_view name) {
  for (const OperatorSpec& s : operator_registry())
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

void compare_chunk(const OperatorSpec& spec, const OpParams& p,
                   const Circuit& c, const std::vector<Assignment>& chunk,
                   EquivReport& rep) {
  if (chunk.empty()) return;
  BitBatch in = BitBatch::from_assignments(chunk, c.num_inputs());
  BitBatch out = evaluate_block(c, in);
  size_t nout = c.num_outputs();
  for (size_t t = 0; t < chunk.size(); ++t) {
    Out expected = spec.oracle(p, chunk[t]);
    Out got(nout);
    for (size_t o = 0; o < nout; ++o)
      got[o] = (out.lanes[o][t / 64] >> (t % 64)) & 1;
    Out mask;
    if (spec.care) mask = spec.care(p, chunk[t]);
    bool ok = true;
    for (size_t o = 0; o < nout && ok; ++o) {
      if (!mask.empty() && !mask[o]) continue;
      ok = got[o] == expected[o];
    }
    ++rep.tested;
    if (!ok && rep.failures.size() < 5)
      rep.failures.push_back({chunk[t], expected, got});
  }
}

}  // namespace

EquivReport check_operator(const OperatorSpec& spec, const OpParams& p,
                           const CheckBudget& budget) {
  Circuit c = spec.generate(p);
  size_t nin = c.num_inputs();
  EquivReport rep;
  rep.seed = budget.seed;
  constexpr size_t kChunk = 1 << 14;
  std::vector<Assignment> chunk;
  chunk.reserve(kChunk);
  auto flush = [&] {
    compare_chunk(spec, p, c, chunk, rep);
    chunk.clear();
  };
  if (nin <= budget.exhaustive_limit) {
    rep.mode = EquivReport::Mode::Exhaustive;
    for (uint64_t v = 0; v < (uint64_t{1} << nin); ++v) {
      Assignment a = from_value(v, nin);
      if (spec.in_domain && !spec.in_domain(p, a)) continue;
      chunk.push_back(std::move(a));
      if (chunk.size() == kChunk) flush();
    }
    flush();
    return rep;
  }
  rep.mode = EquivReport::Mode::Sampled;
  // Corners: all-zero, all-one, every single-one string (domain permitting).
  std::vector<Assignment> corners{Assignment(nin, 0), Assignment(nin, 1)};
  for (size_t i = 0; i < nin; ++i) {
    Assignment a(nin, 0);
    a[i] = 1;
    corners.push_back(std::move(a));
  }
  for (Assignment& a : corners) {
    if (spec.in_domain && !spec.in_domain(p, a)) continue;
    chunk.push_back(std::move(a));
    if (chunk.size() == kChunk) flush();
  }
  std::mt19937_64 rng(budget.seed);
  for (size_t s = 0; s < budget.samples; ++s) {
    Assignment a;
    if (spec.sample) {
      a = spec.sample(p, rng);
    } else {
      a.resize(nin);
      uint64_t w = 0;
      for (size_t i = 0; i < nin; ++i) {
        if (i % 64 == 0) w = rng();
        a[i] = (w >> (i % 64)) & 1;
      }
    }
    chunk.push_back(std::move(a));
    if (chunk.size() == kChunk) flush();
  }
  flush();
  return rep;
}

std::vector<Assignment> enumerate_domain(const OperatorSpec& spec,
                                         const OpParams& p,
                                         unsigned max_bits) {
  Circuit c = spec.generate(p);
  size_t nin = c.num_inputs();
  if (nin > max_bits)
    throw ArgumentError("enumerate_domain: input count exceeds budget");
  std::vector<Assignment> out;
  for (uint64_t v = 0; v < (uint64_t{1} << nin); ++v) {
    Assignment a = from_value(v, nin);
    if (!spec.in_domain || spec.in_domain(p, a)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace boolforge
