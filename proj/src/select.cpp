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

#include "boolforge/select.hpp"

#include <algorithm>
#include <bit>
#include <span>

#include "boolforge/sim.hpp"

namespace boolforge {

namespace {

std::string sized_name(const char* op, uint32_t n, const char* suffix) {
  return std::string(op) + "_n" + std::to_string(n) + suffix;
}

std::vector<Ref> address_inputs(CircuitBuilder& b, uint32_t w) {
  std::vector<Ref> xs(w);
  for (uint32_t i = 0; i < w; ++i) xs[i] = b.add_input("x" + std::to_string(i));
  return xs;
}

std::vector<Ref> data_inputs(CircuitBuilder& b, uint32_t n) {
  std::vector<Ref> ys(n);
  for (uint32_t i = 0; i < n; ++i) ys[i] = b.add_input("y" + std::to_string(i));
  return ys;
}

// One-hot decode of `addr` restricted to values < count; the address is
// split near the middle so both halves reuse full sub-decoders.
std::vector<Ref> decode_rec(CircuitBuilder& b, std::span<const Ref> addr,
                            uint32_t count, std::optional<Ref> data) {
  uint32_t w = static_cast<uint32_t>(addr.size());
  if (count == 0 || (w < 32 && count > (1u << w)))
    throw ArgumentError("decode_rec: count out of range for address width");
  if (w == 0) return {data ? *data : b.constant(true)};
  if (w == 1) {
    std::vector<Ref> out;
    if (data) {
      out.push_back(g_and(b, !addr[0], *data));
      if (count == 2) out.push_back(g_and(b, addr[0], *data));
    } else {
      out.push_back(!addr[0]);
      if (count == 2) out.push_back(addr[0]);
    }
    return out;
  }
  uint32_t q = w / 2;
  uint32_t g = 1u << q;
  uint32_t groups = (count + g - 1) / g;
  auto low = decode_rec(b, addr.subspan(0, q), std::min(count, g), {});
  auto high = decode_rec(b, addr.subspan(q), groups, data);
  std::vector<Ref> out(count);
  for (uint32_t j = 0; j < count; ++j)
    out[j] = g_and(b, high[j / g], low[j % g]);
  return out;
}

Ref or_tree(CircuitBuilder& b, std::span<const Ref> xs) {
  if (xs.empty()) return b.constant(false);
  if (xs.size() == 1) return xs[0];
  size_t half = xs.size() / 2;
  return g_or(b, or_tree(b, xs.subspan(0, half)), or_tree(b, xs.subspan(half)));
}

Ref mux_tree_rec(CircuitBuilder& b, std::span<const Ref> addr,
                 std::span<const Ref> data) {
  if (data.empty()) return b.constant(false);
  if (addr.empty()) return data[0];
  uint32_t w = static_cast<uint32_t>(addr.size());
  size_t half = std::min<size_t>(data.size(), size_t{1} << (w - 1));
  Ref lo = mux_tree_rec(b, addr.subspan(0, w - 1), data.subspan(0, half));
  Ref hi = mux_tree_rec(b, addr.subspan(0, w - 1), data.subspan(half));
  return g_mux2(b, addr[w - 1], hi, lo);
}

}  // namespace

std::vector<Ref> build_onehot(CircuitBuilder& b, const std::vector<Ref>& addr,
                              uint32_t count, std::optional<Ref> data) {
  return decode_rec(b, addr, count, data);
}

Ref build_mux(CircuitBuilder& b, const std::vector<Ref>& addr,
              const std::vector<Ref>& data) {
  uint32_t n = static_cast<uint32_t>(data.size());
  uint32_t w = static_cast<uint32_t>(addr.size());
  if (n == 0) throw ArgumentError("build_mux: empty data");
  if (w == 0) return data[0];
  if (n == 2 && w == 1) return g_mux2(b, addr[0], data[1], data[0]);
  std::span<const Ref> aspan(addr);
  uint32_t q = std::min(w, (w + 1) / 2);
  uint32_t g = 1u << q;
  uint32_t groups = (n + g - 1) / g;
  auto low = decode_rec(b, aspan.subspan(0, q), std::min(n, g), {});
  auto high = decode_rec(b, aspan.subspan(q), groups, {});
  std::vector<Ref> terms(groups);
  for (uint32_t j = 0; j < groups; ++j) {
    uint32_t len = std::min(g, n - j * g);
    std::vector<Ref> picks(len);
    for (uint32_t r = 0; r < len; ++r)
      picks[r] = g_and(b, low[r], data[j * g + r]);
    terms[j] = g_and(b, high[j], or_tree(b, picks));
  }
  return or_tree(b, terms);
}

Ref build_mux_tree(CircuitBuilder& b, const std::vector<Ref>& addr,
                   const std::vector<Ref>& data) {
  if (data.empty()) throw ArgumentError("build_mux_tree: empty data");
  return mux_tree_rec(b, addr, data);
}

Circuit gen_decoder(uint32_t n, bool demux) {
  if (n < 2) throw ArgumentError("gen_decoder: n must be >= 2");
  uint32_t w = std::bit_width(n - 1);
  CircuitBuilder b(sized_name(demux ? "dmx" : "dec", n, ""));
  auto addr = address_inputs(b, w);
  std::optional<Ref> data;
  if (demux) data = b.add_input("y");
  return std::move(b).set_outputs(build_onehot(b, addr, n, data));
}

Circuit gen_mux(uint32_t n, Variant v) {
  if (n < 2) throw ArgumentError("gen_mux: n must be >= 2");
  uint32_t w = std::bit_width(n - 1);
  CircuitBuilder b(sized_name("mux", n,
                              v == Variant::Parallel ? "_par" : "_seq"));
  auto addr = address_inputs(b, w);
  auto data = data_inputs(b, n);
  Ref out = v == Variant::Parallel ? build_mux(b, addr, data)
                                   : build_mux_tree(b, addr, data);
  return std::move(b).set_outputs({out});
}

Circuit gen_mux_k(uint32_t n, uint32_t k) {
  if (n < 2 || k < 1)
    throw ArgumentError("gen_mux_k: need n >= 2 and k >= 1");
  uint32_t w = std::bit_width(n - 1);
  CircuitBuilder b("muxw_n" + std::to_string(n) + "_k" + std::to_string(k));
  auto addr = address_inputs(b, w);
  std::vector<std::vector<Ref>> words(n, std::vector<Ref>(k));
  for (uint32_t j = 0; j < n; ++j)
    for (uint32_t t = 0; t < k; ++t)
      words[j][t] =
          b.add_input("y" + std::to_string(j) + "_" + std::to_string(t));

  // Split point balances the shared decoders against the k output nets.
  uint64_t kn = static_cast<uint64_t>(k) * n;
  uint32_t q = std::clamp<uint32_t>((std::bit_width(kn - 1) + 1) / 2, 1, w);
  uint32_t g = 1u << q;
  uint32_t groups = (n + g - 1) / g;
  std::span<const Ref> aspan(addr);
  auto low = decode_rec(b, aspan.subspan(0, q), std::min(n, g), {});
  auto high = decode_rec(b, aspan.subspan(q), groups, {});
  std::vector<Ref> out(k);
  for (uint32_t t = 0; t < k; ++t) {
    std::vector<Ref> terms(groups);
    for (uint32_t j = 0; j < groups; ++j) {
      uint32_t len = std::min(g, n - j * g);
      std::vector<Ref> picks(len);
      for (uint32_t r = 0; r < len; ++r)
        picks[r] = g_and(b, low[r], words[j * g + r][t]);
      terms[j] = g_and(b, high[j], or_tree(b, picks));
    }
    out[t] = or_tree(b, terms);
  }
  return std::move(b).set_outputs(out);
}

Circuit gen_cyc(uint32_t k, uint32_t n) {
  if (k < 1 || n < 1) throw ArgumentError("gen_cyc: need k >= 1 and n >= 1");
  uint32_t l = std::bit_width(k - 1);
  CircuitBuilder b("cyc_k" + std::to_string(k) + "_n" + std::to_string(n));
  auto amt = address_inputs(b, l);
  std::vector<Ref> cur(n);
  for (uint32_t i = 0; i < n; ++i) cur[i] = b.add_input("s" + std::to_string(i));
  for (uint32_t t = 0; t < l; ++t) {
    uint64_t sh = (uint64_t{1} << t) % n;
    if (sh == 0) continue;  // rotation by a multiple of n is the identity
    std::vector<Ref> next(n);
    for (uint32_t j = 0; j < n; ++j)
      next[j] = g_mux2(b, amt[t], cur[(j + n - sh) % n], cur[j]);
    cur = std::move(next);
  }
  return std::move(b).set_outputs(cur);
}

Circuit gen_sft(uint32_t k, uint32_t n) {
  if (k < 1 || n < 1) throw ArgumentError("gen_sft: need k >= 1 and n >= 1");
  uint32_t l = std::bit_width(k - 1);
  uint32_t width = n + k - 1;
  CircuitBuilder b("sft_k" + std::to_string(k) + "_n" + std::to_string(n));
  auto amt = address_inputs(b, l);
  std::vector<Ref> cur(width, b.constant(false));
  for (uint32_t i = 0; i < n; ++i) cur[i] = b.add_input("s" + std::to_string(i));
  for (uint32_t t = 0; t < l; ++t) {
    uint32_t sh = 1u << t;
    std::vector<Ref> next(width);
    for (uint32_t j = 0; j < width; ++j) {
      Ref shifted = j >= sh ? cur[j - sh] : b.constant(false);
      next[j] = g_mux2(b, amt[t], shifted, cur[j]);
    }
    cur = std::move(next);
  }
  return std::move(b).set_outputs(cur);
}

}  // namespace boolforge
