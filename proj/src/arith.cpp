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

#include "boolforge/arith.hpp"

#include "boolforge/sim.hpp"

namespace boolforge {

namespace {

std::string op_name(const char* op, uint32_t n, Variant v) {
  return std::string(op) + "_n" + std::to_string(n) +
         (v == Variant::Parallel ? "_par" : "_seq");
}

std::vector<Ref> input_vec(CircuitBuilder& b, const char* stem, uint32_t n) {
  std::vector<Ref> xs(n);
  for (uint32_t i = 0; i < n; ++i)
    xs[i] = b.add_input(std::string(stem) + std::to_string(i));
  return xs;
}

// Prefix scan over single wires; the schedule choice follows the variant.
std::vector<Ref> scan(CircuitBuilder& b, GateFunc f,
                      const std::vector<Ref>& xs, Variant v) {
  std::vector<Ref> p(xs.size());
  if (v == Variant::Sequential || xs.size() < 2) {
    Ref cur;
    for (size_t i = 0; i < xs.size(); ++i)
      p[i] = cur = i == 0 ? xs[0] : b.add_gate(f, cur, xs[i]);
    return p;
  }
  std::vector<Bundle> ins;
  ins.reserve(xs.size());
  for (Ref x : xs) ins.push_back(Bundle{{x}});
  PrefixBundles pb = instantiate(parallel_schedule(static_cast<uint32_t>(
                                     xs.size())),
                                 func_gadget(f), ins, b);
  for (size_t i = 0; i < xs.size(); ++i) p[i] = pb.prefixes[i].wires[0];
  return p;
}

// Carry-semigroup prefixes over pairs [x_i, y_i]: the first component of
// prefix i+1 satisfies c_{i+1} = x_i ^ y_i c_i.
std::vector<Ref> star_prefix_firsts(CircuitBuilder& b,
                                    const std::vector<Bundle>& elems,
                                    Variant v, Bundle* last = nullptr) {
  uint32_t n = static_cast<uint32_t>(elems.size());
  std::vector<Ref> c(n);
  if (v == Variant::Sequential || n < 2) {
    Bundle cur = elems[0];
    c[0] = cur.wires[0];
    for (uint32_t i = 1; i < n; ++i) {
      Ref t = g_and(b, elems[i].wires[1], cur.wires[0]);
      cur.wires[0] = g_xor(b, elems[i].wires[0], t);
      cur.wires[1] = g_and(b, elems[i].wires[1], cur.wires[1]);
      c[i] = cur.wires[0];
    }
    if (last) *last = cur;
    return c;
  }
  PrefixBundles pb = instantiate(parallel_schedule(n), star_gadget(), elems, b);
  for (uint32_t i = 0; i < n; ++i) c[i] = pb.prefixes[i].wires[0];
  if (last) *last = pb.prefixes[n - 1];
  return c;
}

}  // namespace

Circuit gen_inc(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_inc: n must be >= 1");
  CircuitBuilder b(op_name("inc", n, v));
  auto x = input_vec(b, "x", n);
  std::vector<Ref> z(n);
  z[0] = !x[0];
  if (n > 1) {
    auto q = scan(b, kAnd, {x.begin(), x.end() - 1}, v);
    for (uint32_t k = 1; k < n; ++k) z[k] = g_xor(b, x[k], q[k - 1]);
  }
  return std::move(b).set_outputs(z);
}

Circuit gen_dec(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_dec: n must be >= 1");
  CircuitBuilder b(op_name("dcr", n, v));
  auto x = input_vec(b, "x", n);
  std::vector<Ref> z(n);
  z[0] = !x[0];
  if (n > 1) {
    std::vector<Ref> nx(n - 1);
    for (uint32_t i = 0; i + 1 < n; ++i) nx[i] = !x[i];
    auto q = scan(b, kAnd, nx, v);
    for (uint32_t k = 1; k < n; ++k) z[k] = g_xor(b, x[k], q[k - 1]);
  }
  return std::move(b).set_outputs(z);
}

Circuit gen_udc(uint32_t n, Variant v) {
  if (n < 2) throw ArgumentError("gen_udc: n must be >= 2");
  CircuitBuilder b(op_name("udc", n, v));
  auto x = input_vec(b, "x", n);
  Ref sigma = b.add_input("sigma");
  std::vector<Ref> z(n);
  z[0] = !x[0];
  if (n > 1) {
    // t_k = sigma XNOR x_k equals x_k when incrementing, ~x_k otherwise.
    std::vector<Ref> t(n - 1);
    for (uint32_t i = 0; i + 1 < n; ++i) t[i] = g_xnor(b, sigma, x[i]);
    auto q = scan(b, kAnd, t, v);
    for (uint32_t k = 1; k < n; ++k) z[k] = g_xor(b, x[k], q[k - 1]);
  }
  return std::move(b).set_outputs(z);
}

Circuit gen_grc(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_grc: n must be >= 1");
  CircuitBuilder b(op_name("grc", n, v));
  auto x = input_vec(b, "x", n);
  // The accounting below needs n >= 3; tiny widths get the direct netlist.
  if (n == 1) return std::move(b).set_outputs({b.realize(!x[0])});
  if (n == 2) return std::move(b).set_outputs({b.realize(!x[1]), x[0]});

  // Binary image of the code word: y_i = x_i ^ ... ^ x_{n-1}.
  std::vector<Ref> y(n);
  Ref g0;  // first output, equals ~y_1
  if (v == Variant::Sequential) {
    y[n - 1] = x[n - 1];
    for (uint32_t i = n - 1; i-- > 0;) {
      if (i == 1) {
        g0 = g_xnor(b, x[1], y[2]);
        y[1] = !g0;
      } else {
        y[i] = g_xor(b, x[i], y[i + 1]);
      }
    }
  } else {
    std::vector<Ref> rev(x.rbegin(), x.rend());
    auto p = scan(b, kXor, rev, v);
    for (uint32_t i = 0; i < n; ++i) y[i] = p[n - 1 - i];
    g0 = b.realize(!y[1]);
  }

  // Successor in binary, then back to the reflected code. The low bit of
  // the successor is y_0 ^ 1, so z_1 = y_0 ^ y_1 = x_0 comes free, and the
  // top bit needs no conversion gate.
  auto q = scan(b, kAnd, {y.begin(), y.end() - 1}, v);
  std::vector<Ref> z(n);
  z[1] = x[0];
  for (uint32_t k = 2; k < n; ++k) z[k] = g_xor(b, y[k], q[k - 1]);

  std::vector<Ref> g(n);
  g[0] = g0;
  for (uint32_t i = 1; i + 1 < n; ++i) g[i] = g_xor(b, z[i], z[i + 1]);
  g[n - 1] = z[n - 1];
  return std::move(b).set_outputs(g);
}

Circuit gen_car(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_car: n must be >= 1");
  CircuitBuilder b(op_name("car", n, v));
  auto x = input_vec(b, "x", n);
  auto y = input_vec(b, "y", n);
  std::vector<Bundle> elems(n);
  elems[0] = Bundle{{x[0], b.constant(true)}};
  for (uint32_t i = 1; i < n; ++i) elems[i] = Bundle{{x[i], y[i]}};
  auto c = star_prefix_firsts(b, elems, v);
  return prune(std::move(b).set_outputs(c));
}

Circuit gen_add(uint32_t n, Variant v) {
  if (n < 1) throw ArgumentError("gen_add: n must be >= 1");
  CircuitBuilder b(op_name("add", n, v));
  auto a = input_vec(b, "a", n);
  auto bb = input_vec(b, "b", n);
  std::vector<Bundle> elems(n);
  std::vector<Ref> ys(n);
  for (uint32_t i = 0; i < n; ++i) {
    Ref xi = g_and(b, a[i], bb[i]);
    ys[i] = g_xor(b, a[i], bb[i]);
    elems[i] = Bundle{{xi, ys[i]}};
  }
  auto c = star_prefix_firsts(b, elems, v);
  std::vector<Ref> z(n + 1);
  z[0] = ys[0];
  for (uint32_t i = 1; i < n; ++i) z[i] = g_xor(b, ys[i], c[i - 1]);
  z[n] = c[n - 1];
  return prune(std::move(b).set_outputs(z));
}

Circuit gen_cmp(uint32_t n, Variant v, bool extended) {
  if (n < 1) throw ArgumentError("gen_cmp: n must be >= 1");
  CircuitBuilder b(op_name(extended ? "cmpe" : "cmp", n, v));
  auto a = input_vec(b, "a", n);
  auto bb = input_vec(b, "b", n);
  // Borrow-style recurrence: gt_{i+1} = (a_i & ~b_i) ^ (a_i ~^ b_i) gt_i.
  std::vector<Bundle> elems(n);
  std::vector<Ref> y(n);
  elems[0] = Bundle{{g_and(b, a[0], !bb[0]), b.constant(true)}};
  for (uint32_t i = 1; i < n; ++i) {
    y[i] = g_xnor(b, a[i], bb[i]);
    elems[i] = Bundle{{g_and(b, a[i], !bb[i]), y[i]}};
  }
  Bundle last;
  auto c = star_prefix_firsts(b, elems, v, &last);
  std::vector<Ref> outs{c[n - 1]};
  if (extended) {
    Ref y0 = g_xnor(b, a[0], bb[0]);
    Ref eq = y0;
    if (n > 1) eq = g_and(b, last.wires[1], y0);
    outs.push_back(eq);
  }
  return prune(std::move(b).set_outputs(outs));
}

Circuit gen_max(uint32_t n, Variant v, bool with_min) {
  if (n < 1) throw ArgumentError("gen_max: n must be >= 1");
  CircuitBuilder b(op_name(with_min ? "maxmin" : "max", n, v));
  auto a = input_vec(b, "a", n);
  auto bb = input_vec(b, "b", n);
  std::vector<Ref> mx(n), mn(n);
  if (n == 1) {
    mx[0] = g_or(b, a[0], bb[0]);
    if (with_min) mn[0] = g_and(b, a[0], bb[0]);
  } else {
    std::vector<Bundle> elems(n);
    std::vector<Ref> y(n);
    elems[0] = Bundle{{g_and(b, a[0], !bb[0]), b.constant(true)}};
    for (uint32_t i = 1; i < n; ++i) {
      y[i] = g_xnor(b, a[i], bb[i]);
      elems[i] = Bundle{{g_and(b, a[i], !bb[i]), y[i]}};
    }
    Ref gt = star_prefix_firsts(b, elems, v)[n - 1];
    // t_i = (a_i ^ b_i) & gt swaps bit i exactly when A > B; the top bit
    // of the pair of results is just OR (max) and AND (min).
    for (uint32_t i = 0; i + 1 < n; ++i) {
      Ref d = i == 0 ? g_xor(b, a[0], bb[0]) : !y[i];
      Ref t = g_and(b, d, gt);
      mx[i] = g_xor(b, t, bb[i]);
      if (with_min) mn[i] = g_xor(b, t, a[i]);
    }
    mx[n - 1] = g_or(b, a[n - 1], bb[n - 1]);
    if (with_min) mn[n - 1] = g_and(b, a[n - 1], bb[n - 1]);
  }
  std::vector<Ref> outs(mx);
  if (with_min) outs.insert(outs.end(), mn.begin(), mn.end());
  return prune(std::move(b).set_outputs(outs));
}

}  // namespace boolforge
