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

#pragma once

#include <cstdint>
#include <vector>

#include "boolforge/builder.hpp"

namespace boolforge {

/// One combine step over value slots: slot[dst] = slot[lhs] * slot[rhs],
/// where lhs always carries the earlier (left) operand. Slots 0..n-1 are
/// the inputs; each step writes a fresh slot, so dst = n + step index.
struct PrefixStep {
  uint32_t dst;
  uint32_t lhs;
  uint32_t rhs;
};

/// Combine-step plan for prefix (and optionally suffix) sums over an
/// associative, not necessarily commutative, operation.
struct PrefixSchedule {
  uint32_t n = 0;
  std::vector<PrefixStep> steps;
  std::vector<uint32_t> prefix_slot;  // [i] holds p_{i+1} = x_1*...*x_{i+1}
  std::vector<uint32_t> suffix_slot;  // [i] holds s_{i+1}; empty if unused
  uint32_t declared_depth = 0;

  size_t size() const { return steps.size(); }
  uint32_t slot_count() const {
    return n + static_cast<uint32_t>(steps.size());
  }
  bool has_suffixes() const { return !suffix_slot.empty(); }
};

enum class Variant : uint8_t { Sequential, Parallel };

/// n-1 steps, depth n-1.
PrefixSchedule serial_schedule(uint32_t n);

/// Balanced-tree (Brent--Kung style) network: for n = 2^k, size 2n-2-k and depth 2k-2.
/// Other n behave as the truncated power-of-two network.
PrefixSchedule parallel_schedule(uint32_t n);

/// Joint prefix/suffix sums. Sequential: exactly 2n-3 steps. Parallel:
/// both sides share the aligned-block tree; 3n - Theta(log n) steps,
/// depth O(log n).
PrefixSchedule prefix_suffix_schedule(uint32_t n,
                                      Variant v = Variant::Parallel);

/// Combiner gadget: a template sub-netlist with 2*width inputs (left
/// operand first) and width outputs.
struct Gadget {
  uint32_t width = 1;
  Circuit tmpl;
  size_t cost = 0;    // template gate count
  size_t gdepth = 0;  // template depth
};

Gadget and_gadget();
Gadget or_gadget();
Gadget xor_gadget();
/// Width-1 gadget applying an arbitrary two-input function.
Gadget func_gadget(GateFunc f);
/// The carry semigroup on bit pairs: [a1,b1] * [a2,b2] = [a2^b2&a1, b2&b1].
Gadget star_gadget();
Gadget make_gadget(Circuit tmpl);

struct PrefixBundles {
  std::vector<Bundle> prefixes;
  std::vector<Bundle> suffixes;
};

/// Emits the schedule into `b`, instantiating the gadget once per step.
PrefixBundles instantiate(const PrefixSchedule& s, const Gadget& g,
                          const std::vector<Bundle>& inputs,
                          CircuitBuilder& b);

}  // namespace boolforge
