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

#include "boolforge/circuit.hpp"

#include <algorithm>

namespace boolforge {

namespace {
const char* const kFuncNames[16] = {
    "const0", "nor",  "andnot_a", "not_a",  "andnot_b", "not_b",
    "xor",    "nand", "and",      "xnor",   "buf_b",    "ornot_a",
    "buf_a",  "ornot_b", "or",    "const1"};
}

std::string GateFunc::name() const { return kFuncNames[code_]; }

std::vector<uint32_t> node_depths(const Circuit& c) {
  std::vector<uint32_t> d(c.nodes.size(), 0);
  for (size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    if (n.kind == NodeKind::Gate) {
      d[i] = 1 + std::max(d[n.a], d[n.b]);
    }
  }
  return d;
}

Metrics metrics(const Circuit& c) {
  Metrics m;
  auto depths = node_depths(c);
  for (size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    if (n.kind != NodeKind::Gate) continue;
    ++m.size;
    if (n.func.degenerate()) ++m.degenerate_gates;
  }
  for (uint32_t o : c.outputs) m.depth = std::max<size_t>(m.depth, depths[o]);
  return m;
}

ValidationReport validate(const Circuit& c) {
  ValidationReport r;
  std::vector<uint32_t> declared_inputs;
  for (size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    switch (n.kind) {
      case NodeKind::Input:
        declared_inputs.push_back(static_cast<uint32_t>(i));
        break;
      case NodeKind::Const:
        if (n.a > 1) r.violations.push_back("constant node with value > 1");
        break;
      case NodeKind::Gate:
        if (n.a >= i || n.b >= i)
          r.violations.push_back("gate " + std::to_string(i) +
                                 " references a non-earlier node");
        if (n.func.degenerate()) ++r.degenerate_gates;
        break;
    }
  }
  if (c.inputs != declared_inputs)
    r.violations.push_back("input list does not match Input nodes in order");
  if (c.outputs.empty()) r.violations.push_back("empty output list");
  for (uint32_t o : c.outputs)
    if (o >= c.nodes.size())
      r.violations.push_back("output references missing node " +
                             std::to_string(o));
  return r;
}

Circuit prune(const Circuit& c) {
  std::vector<char> live(c.nodes.size(), 0);
  for (uint32_t o : c.outputs)
    if (o < c.nodes.size()) live[o] = 1;
  for (size_t i = c.nodes.size(); i-- > 0;) {
    if (!live[i]) continue;
    const Node& n = c.nodes[i];
    if (n.kind == NodeKind::Gate) {
      live[n.a] = 1;
      live[n.b] = 1;
    }
  }
  for (uint32_t in : c.inputs) live[in] = 1;

  Circuit out;
  out.name = c.name;
  out.meta = c.meta;
  std::vector<uint32_t> remap(c.nodes.size(), 0);
  for (size_t i = 0; i < c.nodes.size(); ++i) {
    if (!live[i]) continue;
    remap[i] = static_cast<uint32_t>(out.nodes.size());
    Node n = c.nodes[i];
    if (n.kind == NodeKind::Gate) {
      n.a = remap[n.a];
      n.b = remap[n.b];
    }
    out.nodes.push_back(std::move(n));
  }
  for (uint32_t in : c.inputs) out.inputs.push_back(remap[in]);
  for (uint32_t o : c.outputs) out.outputs.push_back(remap[o]);
  return out;
}

}  // namespace boolforge
