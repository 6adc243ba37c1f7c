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

#include "boolforge/prefix.hpp"

#include <algorithm>
#include <bit>

#include "boolforge/sim.hpp"

namespace boolforge {

namespace {

// Slot bookkeeping shared by the schedule constructors.
struct ScheduleBuilder {
  PrefixSchedule s;
  std::vector<uint32_t> depth;

  explicit ScheduleBuilder(uint32_t n) {
    s.n = n;
    depth.assign(n, 0);
  }
  uint32_t step(uint32_t lhs, uint32_t rhs) {
    uint32_t dst = s.n + static_cast<uint32_t>(s.steps.size());
    s.steps.push_back({dst, lhs, rhs});
    depth.push_back(1 + std::max(depth[lhs], depth[rhs]));
    return dst;
  }
  PrefixSchedule finish() {
    uint32_t d = 0;
    for (uint32_t slot : s.prefix_slot) d = std::max(d, depth[slot]);
    for (uint32_t slot : s.suffix_slot) d = std::max(d, depth[slot]);
    s.declared_depth = d;
    return std::move(s);
  }
};

// Sums of all aligned blocks [i*2^d, (i+1)*2^d) inside [0, n).
// blocks[d][i] is the slot holding that sum; blocks[0][i] = input i.
std::vector<std::vector<uint32_t>> upsweep(ScheduleBuilder& sb, uint32_t n) {
  std::vector<std::vector<uint32_t>> blocks;
  blocks.emplace_back(n);
  for (uint32_t i = 0; i < n; ++i) blocks[0][i] = i;
  for (uint32_t d = 1; (1u << d) <= n; ++d) {
    uint32_t count = n >> d;
    blocks.emplace_back(count);
    for (uint32_t i = 0; i < count; ++i)
      blocks[d][i] = sb.step(blocks[d - 1][2 * i], blocks[d - 1][2 * i + 1]);
  }
  return blocks;
}

// p_{j+1} = full prefix up to the aligned block ending at j, times that
// block. Positions where j+1 is a power of two come free from the tree.
void prefix_downsweep(ScheduleBuilder& sb,
                      const std::vector<std::vector<uint32_t>>& blocks,
                      uint32_t n) {
  sb.s.prefix_slot.assign(n, 0);
  for (uint32_t j = 0; j < n; ++j) {
    uint32_t v = j + 1;
    uint32_t d = static_cast<uint32_t>(std::countr_zero(v));
    uint32_t m = v >> d;
    if (m == 1) {
      sb.s.prefix_slot[j] = blocks[d][0];
    } else {
      sb.s.prefix_slot[j] =
          sb.step(sb.s.prefix_slot[(m - 1) * (1u << d) - 1], blocks[d][m - 1]);
    }
  }
}

// s_i = largest aligned block starting at i, times the following suffix.
void suffix_downsweep(ScheduleBuilder& sb,
                      const std::vector<std::vector<uint32_t>>& blocks,
                      uint32_t n) {
  sb.s.suffix_slot.assign(n, 0);
  for (uint32_t i = n; i-- > 0;) {
    uint32_t d = static_cast<uint32_t>(blocks.size()) - 1;
    while ((i & ((1u << d) - 1)) != 0 || i + (1u << d) > n) --d;
    uint32_t e = i + (1u << d);
    if (e == n)
      sb.s.suffix_slot[i] = blocks[d][i >> d];
    else
      sb.s.suffix_slot[i] = sb.step(blocks[d][i >> d], sb.s.suffix_slot[e]);
  }
}

}  // namespace

PrefixSchedule serial_schedule(uint32_t n) {
  if (n < 1) throw ArgumentError("serial_schedule: n must be >= 1");
  ScheduleBuilder sb(n);
  sb.s.prefix_slot.assign(n, 0);
  uint32_t cur = 0;
  for (uint32_t i = 1; i < n; ++i) cur = sb.s.prefix_slot[i] = sb.step(cur, i);
  return sb.finish();
}

PrefixSchedule parallel_schedule(uint32_t n) {
  if (n < 2) throw ArgumentError("parallel_schedule: n must be >= 2");
  ScheduleBuilder sb(n);
  auto blocks = upsweep(sb, n);
  prefix_downsweep(sb, blocks, n);
  return sb.finish();
}

PrefixSchedule prefix_suffix_schedule(uint32_t n, Variant v) {
  if (n < 2) throw ArgumentError("prefix_suffix_schedule: n must be >= 2");
  ScheduleBuilder sb(n);
  if (v == Variant::Sequential) {
    sb.s.prefix_slot.assign(n, 0);
    uint32_t cur = 0;
    for (uint32_t i = 1; i < n; ++i)
      cur = sb.s.prefix_slot[i] = sb.step(cur, i);
    sb.s.suffix_slot.assign(n, 0);
    sb.s.suffix_slot[n - 1] = n - 1;
    for (uint32_t i = n - 1; i-- > 1;)
      sb.s.suffix_slot[i] = sb.step(i, sb.s.suffix_slot[i + 1]);
    sb.s.suffix_slot[0] = sb.s.prefix_slot[n - 1];  // s_1 = p_n
  } else {
    auto blocks = upsweep(sb, n);
    prefix_downsweep(sb, blocks, n);
    suffix_downsweep(sb, blocks, n);
  }
  return sb.finish();
}

Gadget make_gadget(Circuit tmpl) {
  Gadget g;
  if (tmpl.inputs.size() != 2 * tmpl.outputs.size() || tmpl.outputs.empty())
    throw ArgumentError("gadget template must have 2w inputs and w outputs");
  g.width = static_cast<uint32_t>(tmpl.outputs.size());
  Metrics m = metrics(tmpl);
  g.cost = m.size;
  g.gdepth = m.depth;
  g.tmpl = std::move(tmpl);
  return g;
}

namespace {
Gadget unary_gadget(GateFunc f) {
  CircuitBuilder b("gadget_" + f.name());
  Ref l = b.add_input("l");
  Ref r = b.add_input("r");
  Ref o = b.add_gate(f, l, r);
  return make_gadget(std::move(b).set_outputs({o}));
}
}  // namespace

Gadget and_gadget() { return unary_gadget(kAnd); }
Gadget or_gadget() { return unary_gadget(kOr); }
Gadget xor_gadget() { return unary_gadget(kXor); }
Gadget func_gadget(GateFunc f) { return unary_gadget(f); }

Gadget star_gadget() {
  CircuitBuilder b("gadget_star");
  Ref a1 = b.add_input("a1");
  Ref b1 = b.add_input("b1");
  Ref a2 = b.add_input("a2");
  Ref b2 = b.add_input("b2");
  Ref t = g_and(b, b2, a1);
  Ref o1 = g_xor(b, a2, t);
  Ref o2 = g_and(b, b2, b1);
  return make_gadget(std::move(b).set_outputs({o1, o2}));
}

namespace {
Bundle apply_gadget(const Gadget& g, const Bundle& lhs, const Bundle& rhs,
                    CircuitBuilder& b) {
  std::vector<Ref> map(g.tmpl.nodes.size());
  size_t next_input = 0;
  for (size_t i = 0; i < g.tmpl.nodes.size(); ++i) {
    const Node& n = g.tmpl.nodes[i];
    switch (n.kind) {
      case NodeKind::Input: {
        size_t k = next_input++;
        map[i] = k < g.width ? lhs.wires[k] : rhs.wires[k - g.width];
        break;
      }
      case NodeKind::Const:
        map[i] = b.constant(n.a != 0);
        break;
      case NodeKind::Gate:
        map[i] = b.add_gate(n.func, map[n.a], map[n.b]);
        break;
    }
  }
  Bundle out;
  out.order = lhs.order;
  for (uint32_t o : g.tmpl.outputs) out.wires.push_back(map[o]);
  return out;
}
}  // namespace

PrefixBundles instantiate(const PrefixSchedule& s, const Gadget& g,
                          const std::vector<Bundle>& inputs,
                          CircuitBuilder& b) {
  if (inputs.size() != s.n)
    throw ArgumentError("instantiate: input bundle count must equal n");
  for (const Bundle& in : inputs)
    if (in.width() != g.width)
      throw ArgumentError("instantiate: bundle width does not match gadget");

  std::vector<Bundle> slots(inputs);
  slots.reserve(s.slot_count());
  for (const PrefixStep& st : s.steps)
    slots.push_back(apply_gadget(g, slots[st.lhs], slots[st.rhs], b));

  PrefixBundles out;
  for (uint32_t slot : s.prefix_slot) out.prefixes.push_back(slots[slot]);
  for (uint32_t slot : s.suffix_slot) out.suffixes.push_back(slots[slot]);
  return out;
}

}  // namespace boolforge
