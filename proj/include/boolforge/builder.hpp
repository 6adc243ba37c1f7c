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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolforge/circuit.hpp"

namespace boolforge {

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Wire handle: node index plus a complement flag. Complements are free
/// at build time; they are absorbed into the function codes of consuming
/// gates, so generated netlists contain no standalone negations and no
/// degenerate gates.
struct Ref {
  uint32_t lit = 0;

  static constexpr Ref make(uint32_t node, bool neg = false) {
    return Ref{(node << 1) | (neg ? 1u : 0u)};
  }
  constexpr uint32_t node() const { return lit >> 1; }
  constexpr bool negated() const { return lit & 1; }
  constexpr Ref operator!() const { return Ref{lit ^ 1}; }
  friend constexpr bool operator==(Ref x, Ref y) { return x.lit == y.lit; }
  friend constexpr bool operator!=(Ref x, Ref y) { return x.lit != y.lit; }
};

struct Bundle {
  std::vector<Ref> wires;
  BitOrder order = BitOrder::Number;

  size_t width() const { return wires.size(); }
  Ref& operator[](size_t i) { return wires[i]; }
  const Ref& operator[](size_t i) const { return wires[i]; }
};

/// Netlist builder with constant folding and complement absorption.
/// Single-owner; construction is deterministic (identical call sequences
/// produce byte-identical netlists).
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::string name);

  Ref add_input(const std::string& label);
  Ref constant(bool value);

  /// Adds a two-input gate. Operand complements are folded into the
  /// function code; constant or duplicated operands fold the gate away
  /// entirely. The returned Ref may therefore be an existing wire,
  /// possibly complemented, or a constant.
  Ref add_gate(GateFunc func, Ref a, Ref b);

  /// Emits a negation of `a` as one code-0x1 gate with both operands
  /// wired to the same node. Used only when a complemented wire must
  /// appear as a circuit output; results are cached per node.
  Ref realize(Ref a);

  Circuit set_outputs(const std::vector<Ref>& outs) &&;

  size_t num_gates() const { return gate_count_; }

 private:
  bool is_const(Ref r, bool& value) const;
  Ref emit(GateFunc func, uint32_t a, uint32_t b);

  Circuit c_;
  size_t gate_count_ = 0;
  std::optional<uint32_t> const_node_[2];
  std::map<uint32_t, uint32_t> negations_;
  bool finished_ = false;
};

// Convenience wrappers used throughout the generators.
inline Ref g_and(CircuitBuilder& b, Ref x, Ref y) {
  return b.add_gate(kAnd, x, y);
}
inline Ref g_or(CircuitBuilder& b, Ref x, Ref y) {
  return b.add_gate(kOr, x, y);
}
inline Ref g_xor(CircuitBuilder& b, Ref x, Ref y) {
  return b.add_gate(kXor, x, y);
}
inline Ref g_xnor(CircuitBuilder& b, Ref x, Ref y) {
  return b.add_gate(kXnor, x, y);
}
inline Ref g_mux2(CircuitBuilder& b, Ref s, Ref t, Ref e) {
  // s ? t : e, at most 3 gates
  return g_or(b, g_and(b, s, t), g_and(b, !s, e));
}

}  // namespace boolforge
