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

#include "boolforge/count.hpp"

#include <bit>

#include "boolforge/encode.hpp"
#include "boolforge/sim.hpp"

namespace boolforge {

CompressorOut full_compressor(CircuitBuilder& bld, Ref a, Ref b, Ref c) {
  Ref ab = g_xor(bld, a, b);
  Ref v = g_xor(bld, ab, c);
  Ref u = g_or(bld, g_and(bld, a, b), g_and(bld, ab, c));
  return {u, v};
}

CompressorOut block_compressor(CircuitBuilder& bld, Ref a, Ref b, Ref c) {
  Ref u = g_and(bld, b, g_or(bld, a, c));
  Ref v = g_xor(bld, g_xor(bld, a, b), c);
  return {u, v};
}

CompressorOut half_compressor(CircuitBuilder& bld, Ref a, Ref b) {
  return {g_and(bld, a, b), g_xor(bld, a, b)};
}

namespace {

std::string vname(const char* op, uint32_t n, Variant v) {
  return std::string(op) + "_n" + std::to_string(n) +
         (v == Variant::Parallel ? "_par" : "_seq");
}

std::vector<Ref> string_inputs(CircuitBuilder& b, uint32_t n) {
  std::vector<Ref> xs(n);
  for (uint32_t i = 0; i < n; ++i) xs[i] = b.add_input("x" + std::to_string(i));
  return xs;
}

// Reduces one ordered pool of same-weight bits to a single digit by a
// left-to-right compressor chain; carries are appended to `up` in
// order. With `block`, operands are kept adjacent (front carries the
// running parity of everything consumed so far), which preserves the
// no-(1,0,1) promise on single-block pools.
Ref chain_reduce(CircuitBuilder& b, std::vector<Ref> pool, bool block,
                 std::vector<Ref>& up) {
  size_t at = 0;
  while (pool.size() - at >= 3) {
    Ref a = pool[at], x = pool[at + 1], c = pool[at + 2];
    CompressorOut o =
        block ? block_compressor(b, a, x, c) : full_compressor(b, a, x, c);
    at += 3;
    pool[--at] = o.v;  // running front replaces the consumed triple
    up.push_back(o.u);
  }
  size_t left = pool.size() - at;
  if (left == 0) return b.constant(false);
  if (left == 1) return pool[at];
  CompressorOut o = half_compressor(b, pool[at], pool[at + 1]);
  up.push_back(o.u);
  return o.v;
}

std::vector<Ref> sum_sequential(CircuitBuilder& b, const std::vector<Ref>& xs,
                                bool block) {
  uint32_t m = std::bit_width(static_cast<uint32_t>(xs.size()));
  std::vector<std::vector<Ref>> cols(m + 1);
  cols[0] = xs;
  std::vector<Ref> digits(m);
  for (uint32_t w = 0; w < m; ++w)
    digits[w] = chain_reduce(b, std::move(cols[w]), block, cols[w + 1]);
  // Any carry out of the top column is identically zero (the total
  // never exceeds n) and is dropped, pruning its gates.
  return digits;
}

std::vector<Ref> sum_parallel(CircuitBuilder& b, const std::vector<Ref>& xs) {
  uint32_t m = std::bit_width(static_cast<uint32_t>(xs.size()));
  std::vector<std::vector<Ref>> cols(m + 1);
  cols[0] = xs;
  bool more = true;
  while (more) {
    more = false;
    std::vector<std::vector<Ref>> next(m + 1);
    for (uint32_t w = 0; w < m; ++w) {
      size_t i = 0;
      for (; i + 3 <= cols[w].size(); i += 3) {
        CompressorOut o =
            full_compressor(b, cols[w][i], cols[w][i + 1], cols[w][i + 2]);
        next[w].push_back(o.v);
        next[w + 1].push_back(o.u);
      }
      for (; i < cols[w].size(); ++i) next[w].push_back(cols[w][i]);
      if (next[w].size() >= 3) more = true;
    }
    next[m].insert(next[m].end(), cols[m].begin(), cols[m].end());
    cols = std::move(next);
  }
  std::vector<Ref> digits(m);
  for (uint32_t w = 0; w < m; ++w)
    digits[w] = chain_reduce(b, std::move(cols[w]), false, cols[w + 1]);
  return digits;
}

// Parallel block-width reduction. Single-block promises survive only
// within a segment: a round of adjacent triples keeps the remainder of
// a segment single-block, and the carries of one segment's round form a
// single-block string of their own, but carries of different segments
// may never be concatenated. Once every segment is short the promise
// stops paying and full compressors finish the job.
std::vector<Ref> bw_parallel(CircuitBuilder& b, const std::vector<Ref>& xs) {
  uint32_t m = std::bit_width(static_cast<uint32_t>(xs.size()));
  using Column = std::vector<std::vector<Ref>>;
  std::vector<Column> cols(m + 1);
  cols[0].push_back(xs);
  bool more = true;
  while (more) {
    more = false;
    std::vector<Column> next(m + 1);
    for (uint32_t w = 0; w < m; ++w) {
      for (std::vector<Ref>& seg : cols[w]) {
        if (seg.size() < 3) {
          if (!seg.empty()) next[w].push_back(std::move(seg));
          continue;
        }
        std::vector<Ref> vs, us;
        size_t i = 0;
        for (; i + 3 <= seg.size(); i += 3) {
          CompressorOut o =
              block_compressor(b, seg[i], seg[i + 1], seg[i + 2]);
          vs.push_back(o.v);
          us.push_back(o.u);
        }
        for (; i < seg.size(); ++i) vs.push_back(seg[i]);
        if (vs.size() >= 3) more = true;
        next[w].push_back(std::move(vs));
        next[w + 1].push_back(std::move(us));
      }
    }
    for (std::vector<Ref>& seg : cols[m])
      if (!seg.empty()) next[m].push_back(std::move(seg));
    cols = std::move(next);
  }
  std::vector<Ref> digits(m);
  std::vector<Ref> carry;
  for (uint32_t w = 0; w < m; ++w) {
    std::vector<Ref> pool;
    for (const std::vector<Ref>& seg : cols[w])
      pool.insert(pool.end(), seg.begin(), seg.end());
    pool.insert(pool.end(), carry.begin(), carry.end());
    carry.clear();
    digits[w] = chain_reduce(b, std::move(pool), false, carry);
  }
  return digits;
}

}  // namespace

std::vector<Ref> build_sum(CircuitBuilder& b, const std::vector<Ref>& xs,
                           Variant v) {
  if (xs.empty()) throw ArgumentError("build_sum: empty input");
  return v == Variant::Parallel ? sum_parallel(b, xs)
                                : sum_sequential(b, xs, false);
}

Circuit gen_sum(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_sum: n must be >= 1");
  CircuitBuilder b(vname("sum", n, v));
  auto x = string_inputs(b, n);
  return prune(std::move(b).set_outputs(build_sum(b, x, v)));
}

Circuit gen_bw(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_bw: n must be >= 1");
  CircuitBuilder b(vname("bw", n, v));
  auto x = string_inputs(b, n);
  std::vector<Ref> digits = v == Variant::Parallel
                                ? bw_parallel(b, x)
                                : sum_sequential(b, x, true);
  return prune(std::move(b).set_outputs(digits));
}

Circuit gen_thr(uint32_t n, uint32_t k, Variant v) {
  if (n < 1) throw ArgumentError("gen_thr: n must be >= 1");
  if (k > n) throw ArgumentError("gen_thr: k must be <= n");
  CircuitBuilder b("thr_n" + std::to_string(n) + "_k" + std::to_string(k) +
                   (v == Variant::Parallel ? "_par" : "_seq"));
  auto x = string_inputs(b, n);
  if (k == 0) return std::move(b).set_outputs({b.constant(true)});
  std::vector<Ref> s = build_sum(b, x, v);
  // Ripple comparison [sum > k-1] against the constant threshold; each
  // step degenerates to a single AND or OR.
  uint32_t t = k - 1;
  Ref gt = b.constant(false);
  for (uint32_t i = 0; i < s.size(); ++i)
    gt = (t >> i) & 1 ? g_and(b, s[i], gt) : g_or(b, s[i], gt);
  return prune(std::move(b).set_outputs({gt}));
}

Circuit gen_sort(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_sort: n must be >= 1");
  CircuitBuilder b(vname("sort", n, v));
  auto x = string_inputs(b, n);
  std::vector<Ref> s = build_sum(b, x, v);
  std::vector<Ref> u = build_un(b, s, n);
  std::vector<Ref> out(n);
  for (uint32_t i = 0; i < n; ++i) out[i] = u[n - 1 - i];
  return prune(std::move(b).set_outputs(out));
}

}  // namespace boolforge
