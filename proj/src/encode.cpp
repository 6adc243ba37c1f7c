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

#include "boolforge/encode.hpp"

#include <algorithm>
#include <bit>
#include <span>

#include "boolforge/select.hpp"
#include "boolforge/sim.hpp"

namespace boolforge {

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

std::vector<Ref> number_inputs(CircuitBuilder& b, uint32_t m) {
  std::vector<Ref> ks(m);
  for (uint32_t i = 0; i < m; ++i) ks[i] = b.add_input("k" + std::to_string(i));
  return ks;
}

Ref xor_tree(CircuitBuilder& b, std::span<const Ref> xs) {
  if (xs.empty()) return b.constant(false);
  if (xs.size() == 1) return xs[0];
  size_t half = xs.size() / 2;
  return g_xor(b, xor_tree(b, xs.subspan(0, half)),
               xor_tree(b, xs.subspan(half)));
}

struct EncResult {
  std::vector<Ref> bits;  // binary index, LSB first
  Ref parity;             // XOR of all inputs; only set when requested
};

// Splits off the largest power-of-two block; both halves are encoded and
// merged with one XOR per shared output bit, plus the tail's parity as
// the new top bit.
EncResult enc_rec(CircuitBuilder& b, std::span<const Ref> x,
                  bool need_parity) {
  uint32_t n = static_cast<uint32_t>(x.size());
  EncResult out;
  if (n == 1) {
    out.parity = x[0];
    return out;
  }
  uint32_t k = std::bit_width(n - 1) - 1;  // 2^k < n <= 2^(k+1)
  uint32_t head = 1u << k;
  uint32_t p = n - head;
  EncResult a = enc_rec(b, x.subspan(0, head), need_parity);
  EncResult tail = enc_rec(b, x.subspan(head), true);
  uint32_t lp = p > 1 ? std::bit_width(p - 1) : 0;
  out.bits.resize(k + 1);
  for (uint32_t j = 0; j < k; ++j)
    out.bits[j] = j < lp ? g_xor(b, a.bits[j], tail.bits[j]) : a.bits[j];
  out.bits[k] = tail.parity;
  if (need_parity) out.parity = g_xor(b, a.parity, tail.parity);
  return out;
}

}  // namespace

std::vector<Ref> build_un(CircuitBuilder& b, const std::vector<Ref>& kbits,
                          uint32_t n) {
  if (kbits.size() != std::bit_width(n))
    throw ArgumentError("build_un: number width must be ceil(log(n+1))");
  if (n == 0) return {};
  uint32_t m = static_cast<uint32_t>(kbits.size());
  if ((n & (n + 1)) == 0) {
    // n = 2^m - 1: grow the thermometer one number bit at a time, the
    // fresh bit acting as the middle element of the doubled string.
    std::vector<Ref> s;
    for (uint32_t j = 0; j < m; ++j) {
      Ref y = kbits[j];
      std::vector<Ref> next;
      next.reserve(2 * s.size() + 1);
      for (Ref si : s) next.push_back(g_or(b, si, y));
      next.push_back(y);
      for (Ref si : s) next.push_back(g_and(b, si, y));
      s = std::move(next);
    }
    return s;
  }
  // General n: decode the high number bits into block indicators and
  // merge them with a shared thermometer of the low bits.
  uint32_t k = (m + 1) / 2;
  uint32_t g = 1u << k;
  uint32_t p = (n + g) / g;  // ceil((n+1)/g), >= 2 here
  std::vector<Ref> x1(kbits.begin(), kbits.begin() + k);
  std::vector<Ref> x2(kbits.begin() + k, kbits.end());
  std::vector<Ref> s = build_un(b, x1, g - 1);
  std::vector<Ref> a = build_onehot(b, x2, p, {});
  std::vector<Ref> gt(p);  // gt[i] = [high bits > i]
  gt[p - 1] = b.constant(false);
  if (p <= 16) {
    for (uint32_t i = p - 1; i-- > 0;) gt[i] = g_or(b, a[i + 1], gt[i + 1]);
  } else {
    // Suffix ORs as a prefix scan of the reversed indicators, keeping
    // the depth logarithmic in the block count.
    std::vector<Bundle> ins;
    for (uint32_t i = p - 1; i >= 1; --i) ins.push_back(Bundle{{a[i]}});
    PrefixBundles pb = instantiate(parallel_schedule(p - 1), or_gadget(), ins, b);
    for (uint32_t i = 0; i + 1 < p; ++i)
      gt[i] = pb.prefixes[p - 2 - i].wires[0];
  }
  std::vector<Ref> u(n);
  for (uint32_t j = 1; j <= n; ++j) {
    uint32_t i = (j - 1) / g;
    uint32_t r = j - i * g;  // 1..g
    u[j - 1] = r == g ? gt[i] : g_or(b, gt[i], g_and(b, a[i], s[r - 1]));
  }
  return u;
}

std::vector<Ref> build_un_inv(CircuitBuilder& b, const std::vector<Ref>& u) {
  uint32_t n = static_cast<uint32_t>(u.size());
  if (n == 0) return {};
  uint32_t m = std::bit_width(n);
  // Bit j of the count is the XOR of u at all multiples of 2^j; the odd
  // multiples are summed per bit and chained downward so every input is
  // used exactly once.
  std::vector<Ref> y(m);
  for (uint32_t j = m; j-- > 0;) {
    std::vector<Ref> items;
    for (uint32_t t = 1u << j; t <= n; t += 2u << j) items.push_back(u[t - 1]);
    Ref a = xor_tree(b, items);
    y[j] = j + 1 < m ? g_xor(b, a, y[j + 1]) : a;
  }
  return y;
}

Circuit gen_enc(uint32_t n, Variant v) {
  if (n < 2) throw ArgumentError("gen_enc: n must be >= 2");
  CircuitBuilder b(vname("enc", n, v));
  auto x = string_inputs(b, n);
  EncResult r = enc_rec(b, x, false);
  return std::move(b).set_outputs(r.bits);
}

Circuit gen_un(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_un: n must be >= 1");
  CircuitBuilder b(vname("un", n, v));
  auto k = number_inputs(b, std::bit_width(n));
  return std::move(b).set_outputs(build_un(b, k, n));
}

Circuit gen_un_inv(uint32_t n) {
  if (n < 1) throw ArgumentError("gen_un_inv: n must be >= 1");
  CircuitBuilder b("uninv_n" + std::to_string(n));
  auto u = string_inputs(b, n);
  return std::move(b).set_outputs(build_un_inv(b, u));
}

Circuit gen_trn(uint32_t n) {
  if (n < 1) throw ArgumentError("gen_trn: n must be >= 1");
  CircuitBuilder b("trn_n" + std::to_string(n));
  auto k = number_inputs(b, std::bit_width(n));
  auto x = string_inputs(b, n);
  auto u = build_un(b, k, n);
  std::vector<Ref> z(n);
  for (uint32_t i = 0; i < n; ++i) z[i] = g_and(b, x[i], u[i]);
  return std::move(b).set_outputs(z);
}

Circuit gen_foi(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_foi: n must be >= 1");
  CircuitBuilder b(vname("foi", n, v));
  auto x = string_inputs(b, n);
  std::vector<Ref> p(n);
  if (v == Variant::Sequential || n < 2) {
    Ref cur;
    for (uint32_t i = 0; i < n; ++i)
      p[i] = cur = i == 0 ? x[0] : g_or(b, cur, x[i]);
  } else {
    std::vector<Bundle> ins;
    for (Ref xi : x) ins.push_back(Bundle{{xi}});
    PrefixBundles pb = instantiate(parallel_schedule(n), or_gadget(), ins, b);
    for (uint32_t i = 0; i < n; ++i) p[i] = pb.prefixes[i].wires[0];
  }
  std::vector<Ref> out(n + 1);
  out[0] = x[0];
  for (uint32_t i = 1; i < n; ++i) out[i] = g_and(b, x[i], !p[i - 1]);
  out[n] = p[n - 1];
  return std::move(b).set_outputs(out);
}

Circuit gen_penc(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_penc: n must be >= 1");
  CircuitBuilder b(vname("penc", n, v));
  auto x = string_inputs(b, n);
  if (n == 1) return std::move(b).set_outputs({x[0]});
  // cp_k = [x_0..x_k all zero]; the first n-1 of them form the
  // thermometer of the first-one position.
  std::vector<Ref> cp(n - 1);
  if (v == Variant::Sequential || n < 3) {
    Ref cur;
    for (uint32_t i = 0; i + 1 < n; ++i)
      cp[i] = cur = i == 0 ? !x[0] : g_and(b, cur, !x[i]);
  } else {
    std::vector<Bundle> ins;
    for (uint32_t i = 0; i + 1 < n; ++i) ins.push_back(Bundle{{!x[i]}});
    PrefixBundles pb =
        instantiate(parallel_schedule(n - 1), and_gadget(), ins, b);
    for (uint32_t i = 0; i + 1 < n; ++i) cp[i] = pb.prefixes[i].wires[0];
  }
  std::vector<Ref> out = build_un_inv(b, cp);
  out.push_back(g_or(b, !cp[n - 2], x[n - 1]));
  return std::move(b).set_outputs(out);
}

}  // namespace boolforge
