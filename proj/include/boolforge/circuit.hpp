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
#include <string>
#include <vector>

#include "boolforge/gate_func.hpp"

namespace boolforge {

enum class NodeKind : uint8_t { Input, Const, Gate };

struct Node {
  NodeKind kind;
  GateFunc func;   // Gate only
  uint32_t a = 0;  // Gate operand node indices; Const stores value in a
  uint32_t b = 0;
  std::string label;  // Input only
};

/// Immutable acyclic netlist. Gate operands always reference strictly
/// earlier nodes, so the node order is a topological order.
struct Circuit {
  std::string name;
  std::vector<Node> nodes;
  std::vector<uint32_t> inputs;   // node indices, declaration order
  std::vector<uint32_t> outputs;  // node indices, output order
  std::map<std::string, std::string> meta;

  size_t num_inputs() const { return inputs.size(); }
  size_t num_outputs() const { return outputs.size(); }
};

struct Metrics {
  size_t size = 0;              // gate count, inputs/constants excluded
  size_t depth = 0;             // longest gate path, inputs at depth 0
  size_t degenerate_gates = 0;  // gates with a degenerate function code
};

Metrics metrics(const Circuit& c);

/// Per-node depth (inputs and constants at 0).
std::vector<uint32_t> node_depths(const Circuit& c);

struct ValidationReport {
  std::vector<std::string> violations;  // structural problems
  size_t degenerate_gates = 0;          // warning, not a violation
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Circuit& c);

/// Removes gates not reachable from any output. Inputs are always kept.
/// Node order (and thus input order) is preserved.
Circuit prune(const Circuit& c);

/// Multi-bit value: an ordered list of wires plus its index convention.
enum class BitOrder : uint8_t {
  String,  // index 0 = leftmost character, paper-style strings
  Number,  // index 0 = least significant bit
};

}  // namespace boolforge
