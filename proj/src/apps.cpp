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

#include "boolforge/apps.hpp"

#include <bit>
#include <span>

#include "boolforge/count.hpp"
#include "boolforge/encode.hpp"
#include "boolforge/select.hpp"
#include "boolforge/sim.hpp"

namespace boolforge {

namespace {

std::vector<Ref> named_inputs(CircuitBuilder& b, const char* stem,
                              uint32_t n) {
  std::vector<Ref> xs(n);
  for (uint32_t i = 0; i < n; ++i)
    xs[i] = b.add_input(std::string(stem) + std::to_string(i));
  return xs;
}

Ref xor_tree(CircuitBuilder& b, std::span<const Ref> xs) {
  if (xs.empty()) return b.constant(false);
  if (xs.size() == 1) return xs[0];
  size_t half = xs.size() / 2;
  return g_xor(b, xor_tree(b, xs.subspan(0, half)),
               xor_tree(b, xs.subspan(half)));
}

// a > b over r-bit numbers, short ripple.
Ref ripple_gt(CircuitBuilder& b, const std::vector<Ref>& a,
              const std::vector<Ref>& bb) {
  Ref gt = g_and(b, a[0], !bb[0]);
  for (size_t i = 1; i < a.size(); ++i) {
    Ref e = g_xnor(b, a[i], bb[i]);
    gt = g_or(b, g_and(b, a[i], !bb[i]), g_and(b, e, gt));
  }
  return gt;
}

// Double selection via 2^r strided substrings. Each address splits into
// r low bits choosing a stride class and high bits indexing inside it;
// differences of neighbouring classes are selected once each and
// XOR-merged, so both outputs share one set of inner selectors. r = 0
// degenerates to two independent selectors.
std::pair<Ref, Ref> sel2_emit(CircuitBuilder& b, const std::vector<Ref>& av,
                              const std::vector<Ref>& bv,
                              const std::vector<Ref>& y, uint32_t r) {
  if (r == 0) return {build_mux(b, av, y), build_mux(b, bv, y)};
  uint32_t n = static_cast<uint32_t>(y.size());
  uint32_t m = static_cast<uint32_t>(av.size());
  uint32_t cnt = 1u << r;
  uint32_t q = (n + cnt - 1) / cnt;
  std::vector<Ref> a0(av.begin(), av.begin() + r);
  std::vector<Ref> a1(av.begin() + r, av.end());
  std::vector<Ref> b0(bv.begin(), bv.begin() + r);
  std::vector<Ref> b1(bv.begin() + r, bv.end());

  // Stride classes padded to equal length, then neighbour differences;
  // prefixes of the differences telescope back to the classes.
  std::vector<std::vector<Ref>> cls(cnt, std::vector<Ref>(q));
  for (uint32_t i = 0; i < cnt; ++i)
    for (uint32_t tpos = 0; tpos < q; ++tpos) {
      uint64_t idx = static_cast<uint64_t>(tpos) * cnt + i;
      cls[i][tpos] = idx < n ? y[idx] : b.constant(false);
    }
  std::vector<std::vector<Ref>> diff(cnt + 1);
  diff[0] = cls[0];
  diff[cnt] = cls[cnt - 1];
  for (uint32_t i = 1; i < cnt; ++i) {
    diff[i].resize(q);
    for (uint32_t tpos = 0; tpos < q; ++tpos)
      diff[i][tpos] = g_xor(b, cls[i - 1][tpos], cls[i][tpos]);
  }

  Ref gt = ripple_gt(b, a0, b0);
  auto ua = build_un(b, a0, cnt - 1);
  auto ub = build_un(b, b0, cnt - 1);
  // ea[i] = 1 iff diff[i] contributes to the a-output (prefix classes
  // when a0 <= b0, suffix classes otherwise); eb[i] is complementary.
  std::vector<Ref> ea(cnt + 1), eb(cnt + 1);
  ea[0] = !gt;
  eb[0] = gt;
  ea[cnt] = gt;
  eb[cnt] = !gt;
  for (uint32_t i = 1; i < cnt; ++i) {
    ea[i] = g_xor(b, ua[i - 1], gt);
    eb[i] = g_xnor(b, ub[i - 1], gt);
  }

  // Inner address for class i is a1 where ea[i], else b1; the shared
  // difference d = a1^b1 keeps this at two gates per bit, and the two
  // extreme selectors differ by d exactly.
  std::vector<Ref> d(m - r);
  for (uint32_t tpos = 0; tpos < m - r; ++tpos)
    d[tpos] = g_xor(b, a1[tpos], b1[tpos]);
  std::vector<std::vector<Ref>> z(cnt + 1, std::vector<Ref>(m - r));
  for (uint32_t tpos = 0; tpos < m - r; ++tpos) {
    z[0][tpos] = g_xor(b, b1[tpos], g_and(b, !gt, d[tpos]));
    z[cnt][tpos] = g_xor(b, z[0][tpos], d[tpos]);
  }
  for (uint32_t i = 1; i < cnt; ++i)
    for (uint32_t tpos = 0; tpos < m - r; ++tpos)
      z[i][tpos] = g_xor(b, b1[tpos], g_and(b, ea[i], d[tpos]));

  std::vector<Ref> ta(cnt + 1), tb(cnt + 1);
  for (uint32_t i = 0; i <= cnt; ++i) {
    Ref mi = build_mux(b, z[i], diff[i]);
    ta[i] = g_and(b, ea[i], mi);
    tb[i] = g_and(b, eb[i], mi);
  }
  return {xor_tree(b, ta), xor_tree(b, tb)};
}

Circuit build_sel2(uint32_t n, uint32_t r) {
  uint32_t m = std::bit_width(n - 1);
  CircuitBuilder b("sel2_n" + std::to_string(n));
  auto av = named_inputs(b, "a", m);
  auto bv = named_inputs(b, "b", m);
  auto y = named_inputs(b, "y", n);
  auto [oa, ob] = sel2_emit(b, av, bv, y, r);
  return prune(std::move(b).set_outputs({oa, ob}));
}

uint32_t sel2_pick_r(uint32_t n) {
  uint32_t m = std::bit_width(n - 1);
  uint32_t rs = (m + 2) / 3;
  if (rs >= m) rs = m - 1;
  if (rs == 0) return 0;
  size_t strided = metrics(build_sel2(n, rs)).size;
  size_t dual = metrics(build_sel2(n, 0)).size;
  return strided <= dual ? rs : 0;
}

}  // namespace

Circuit gen_toi(uint32_t n) {
  if (n < 2) throw ArgumentError("gen_toi: n must be >= 2");
  CircuitBuilder b("toi_n" + std::to_string(n));
  auto x = named_inputs(b, "x", n);
  std::vector<Bundle> ins;
  for (Ref xi : x) ins.push_back(Bundle{{xi}});
  PrefixBundles pb = instantiate(prefix_suffix_schedule(n, Variant::Parallel),
                                 or_gadget(), ins, b);
  std::vector<Ref> out(n + 1);
  out[0] = x[0];
  out[n - 1] = x[n - 1];
  for (uint32_t j = 1; j + 1 < n; ++j) {
    Ref both = g_and(b, pb.prefixes[j - 1].wires[0],
                     pb.suffixes[j + 1].wires[0]);
    out[j] = g_and(b, x[j], !both);
  }
  out[n] = pb.prefixes[n - 1].wires[0];
  return prune(std::move(b).set_outputs(out));
}

Circuit gen_nck(uint32_t n, bool simplified) {
  if (n < 2) throw ArgumentError("gen_nck: n must be >= 2");
  CircuitBuilder b(std::string("nck_n") + std::to_string(n) +
                   (simplified ? "_flag" : ""));
  auto x = named_inputs(b, "x", n);
  // Work on the number padded with one zero above the top bit; any
  // nonzero value reads S || 0 [1]^j [0]^i from the top.
  std::vector<Ref> xe(x);
  xe.push_back(b.constant(false));
  // Tops of 1-runs; the lowest marks position i+j.
  std::vector<Ref> t(n + 1);
  t[0] = b.constant(false);
  for (uint32_t p = 1; p <= n; ++p) t[p] = g_and(b, !xe[p], xe[p - 1]);
  // Running OR from the low end; its complement U is the thermometer
  // of i+j, and the second-highest position yields the maximality flag.
  std::vector<Bundle> ins;
  for (uint32_t p = 1; p <= n; ++p) ins.push_back(Bundle{{t[p]}});
  PrefixBundles pp = instantiate(parallel_schedule(n), or_gadget(), ins, b);
  auto pref = [&](uint32_t p) {  // OR of t_1..t_p
    return p == 0 ? b.constant(false) : pp.prefixes[p - 1].wires[0];
  };
  Ref c = !pref(n - 1);
  std::vector<Ref> u(n);
  for (uint32_t p = 0; p < n; ++p) u[p] = !pref(p);
  auto d1 = build_un_inv(b, u);  // i + j
  std::vector<Ref> vstr(n - 1);
  for (uint32_t p = 0; p + 1 < n; ++p) vstr[p] = g_and(b, !xe[p], u[p]);
  auto d2 = build_un_inv(b, vstr);  // i
  // j = (i+j) - i in two's complement over the width of d1.
  std::vector<Ref> jb(d1.size());
  Ref carry = b.constant(true);
  for (size_t p = 0; p < d1.size(); ++p) {
    Ref sub = p < d2.size() ? !d2[p] : b.constant(true);
    CompressorOut o = full_compressor(b, d1[p], sub, carry);
    jb[p] = o.v;
    carry = o.u;
  }
  auto th = build_un(b, jb, n);  // [j >= t], t = 1..n
  // Candidate result fragment: the new top one at i+j plus j-1 low ones.
  std::vector<Ref> zf(n);
  for (uint32_t p = 0; p < n; ++p) {
    Ref low = p + 2 <= n ? th[p + 1] : b.constant(false);
    zf[p] = g_or(b, t[p], low);
  }
  std::vector<Ref> out;
  out.reserve(n + 1);
  for (uint32_t p = 0; p < n; ++p) {
    Ref keep = p == 0 ? b.constant(false) : pref(p - 1);  // above the flip
    if (simplified) {
      out.push_back(
          g_or(b, g_and(b, xe[p], keep), g_and(b, zf[p], !keep)));
    } else {
      Ref sel = g_or(b, keep, c);
      Ref flip = g_xor(b, xe[p], zf[p]);
      out.push_back(g_xor(b, g_and(b, sel, flip), zf[p]));
    }
  }
  if (simplified) out.push_back(pref(n - 1));  // validity flag
  return prune(std::move(b).set_outputs(out));
}

Circuit gen_sel2(uint32_t n) {
  if (n < 4) throw ArgumentError("gen_sel2: n must be >= 4");
  return build_sel2(n, sel2_pick_r(n));
}

Circuit gen_exc(uint32_t n) {
  if (n < 4) throw ArgumentError("gen_exc: n must be >= 4");
  uint32_t m = std::bit_width(n - 1);
  uint32_t r = sel2_pick_r(n);
  CircuitBuilder b("exc_n" + std::to_string(n));
  auto av = named_inputs(b, "a", m);
  auto bv = named_inputs(b, "b", m);
  auto y = named_inputs(b, "y", n);
  auto [oa, ob] = sel2_emit(b, av, bv, y, r);
  // Swapping equals XORing both selected positions with y_a ^ y_b.
  Ref w = g_xor(b, oa, ob);
  auto da = build_onehot(b, av, n, w);
  auto db = build_onehot(b, bv, n, w);
  std::vector<Ref> out(n);
  for (uint32_t i = 0; i < n; ++i)
    out[i] = g_xor(b, g_xor(b, y[i], da[i]), db[i]);
  return prune(std::move(b).set_outputs(out));
}

}  // namespace boolforge
