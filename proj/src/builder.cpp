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

#include "boolforge/builder.hpp"

namespace boolforge {

CircuitBuilder::CircuitBuilder(std::string name) { c_.name = std::move(name); }

Ref CircuitBuilder::add_input(const std::string& label) {
  Node n;
  n.kind = NodeKind::Input;
  n.label = label;
  uint32_t idx = static_cast<uint32_t>(c_.nodes.size());
  c_.nodes.push_back(std::move(n));
  c_.inputs.push_back(idx);
  return Ref::make(idx);
}

Ref CircuitBuilder::constant(bool value) {
  auto& slot = const_node_[value ? 1 : 0];
  if (!slot) {
    Node n;
    n.kind = NodeKind::Const;
    n.a = value ? 1 : 0;
    slot = static_cast<uint32_t>(c_.nodes.size());
    c_.nodes.push_back(std::move(n));
  }
  return Ref::make(*slot);
}

bool CircuitBuilder::is_const(Ref r, bool& value) const {
  const Node& n = c_.nodes[r.node()];
  if (n.kind != NodeKind::Const) return false;
  value = (n.a != 0) != r.negated();
  return true;
}

Ref CircuitBuilder::emit(GateFunc func, uint32_t a, uint32_t b) {
  Node n;
  n.kind = NodeKind::Gate;
  n.func = func;
  n.a = a;
  n.b = b;
  uint32_t idx = static_cast<uint32_t>(c_.nodes.size());
  c_.nodes.push_back(std::move(n));
  ++gate_count_;
  return Ref::make(idx);
}

Ref CircuitBuilder::add_gate(GateFunc func, Ref a, Ref b) {
  if (a.node() >= c_.nodes.size() || b.node() >= c_.nodes.size())
    throw StructuralError("gate operand references an unknown node");

  // Absorb operand complements into the function code.
  if (a.negated()) func = func.flip_a();
  if (b.negated()) func = func.flip_b();
  a = Ref::make(a.node());
  b = Ref::make(b.node());

  // Constant operands turn the gate into a unary function of the other
  // operand; duplicated operands do the same.
  bool av, bv;
  if (is_const(a, av)) {
    uint8_t f0 = func.eval(av, false), f1 = func.eval(av, true);
    if (f0 == f1) return constant(f0);
    return f1 ? b : !b;
  }
  if (is_const(b, bv)) {
    uint8_t f0 = func.eval(false, bv), f1 = func.eval(true, bv);
    if (f0 == f1) return constant(f0);
    return f1 ? a : !a;
  }
  if (a.node() == b.node()) {
    uint8_t f0 = func.eval(false, false), f1 = func.eval(true, true);
    if (f0 == f1) return constant(f0);
    return f1 ? a : !a;
  }

  // A degenerate code at this point folds to an operand or a constant.
  switch (func.code()) {
    case 0x0: return constant(false);
    case 0xf: return constant(true);
    case 0xc: return a;
    case 0x3: return !a;
    case 0xa: return b;
    case 0x5: return !b;
    default: break;
  }
  return emit(func, a.node(), b.node());
}

Ref CircuitBuilder::realize(Ref a) {
  if (!a.negated()) return a;
  bool v;
  if (is_const(a, v)) return constant(v);
  auto it = negations_.find(a.node());
  if (it != negations_.end()) return Ref::make(it->second);
  Ref r = emit(kNor, a.node(), a.node());
  negations_.emplace(a.node(), r.node());
  return r;
}

Circuit CircuitBuilder::set_outputs(const std::vector<Ref>& outs) && {
  if (finished_) throw StructuralError("builder already finished");
  if (outs.empty()) throw StructuralError("empty output list");
  c_.outputs.clear();
  for (Ref r : outs) {
    if (r.node() >= c_.nodes.size())
      throw StructuralError("output references an unknown node");
    c_.outputs.push_back(realize(r).node());
  }
  finished_ = true;
  return std::move(c_);
}

}  // namespace boolforge
