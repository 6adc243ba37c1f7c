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

#include "boolforge/netlist_io.hpp"

#include <sstream>

#include <json.hpp>

namespace boolforge {

namespace {

constexpr int kFormatVersion = 1;

using nlohmann::json;

std::string net_name(const Circuit& c, uint32_t idx) {
  const Node& n = c.nodes[idx];
  if (n.kind == NodeKind::Input && !n.label.empty()) return n.label;
  return "n" + std::to_string(idx);
}

// Minimal exact ON-set cover of a two-input function: merged cubes first
// (only those entirely inside the ON-set), then leftover minterms, in a
// fixed order so output is stable.
std::vector<std::string> onset_cover(uint8_t code) {
  if (code == 0xf) return {"--"};
  struct Cube {
    const char* pat;
    uint8_t rows;  // covered minterm bits, bit (2a+b)
  };
  static constexpr Cube kCubes[] = {
      {"0-", 0x3}, {"1-", 0xc}, {"-0", 0x5}, {"-1", 0xa},
      {"00", 0x1}, {"01", 0x2}, {"10", 0x4}, {"11", 0x8},
  };
  std::vector<std::string> rows;
  uint8_t left = code;
  for (const Cube& cb : kCubes) {
    if ((cb.rows & code) != cb.rows) continue;  // would cover an OFF row
    if (!(cb.rows & left)) continue;            // redundant
    rows.push_back(cb.pat);
    left &= static_cast<uint8_t>(~cb.rows);
  }
  return rows;
}

}  // namespace

std::string to_json(const Circuit& c) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["name"] = c.name;
  doc["meta"] = c.meta;
  json nodes = json::array();
  for (const Node& n : c.nodes) {
    json jn;
    switch (n.kind) {
      case NodeKind::Input:
        jn["kind"] = "input";
        jn["label"] = n.label;
        break;
      case NodeKind::Const:
        jn["kind"] = "const";
        jn["value"] = n.a != 0;
        break;
      case NodeKind::Gate:
        jn["kind"] = "gate";
        jn["func"] = n.func.code();
        jn["a"] = n.a;
        jn["b"] = n.b;
        break;
    }
    nodes.push_back(std::move(jn));
  }
  doc["nodes"] = std::move(nodes);
  doc["inputs"] = c.inputs;
  doc["outputs"] = c.outputs;
  return doc.dump(2);
}

Circuit from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.contains("format_version") ||
        doc["format_version"].get<int>() != kFormatVersion)
      throw ParseError("unsupported format_version");
    Circuit c;
    c.name = doc.value("name", std::string{});
    if (doc.contains("meta"))
      c.meta = doc["meta"].get<std::map<std::string, std::string>>();
    const json& nodes = doc.at("nodes");
    c.nodes.reserve(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
      const json& jn = nodes[i];
      std::string at = " at node " + std::to_string(i);
      Node n;
      std::string kind = jn.at("kind").get<std::string>();
      if (kind == "input") {
        n.kind = NodeKind::Input;
        n.label = jn.value("label", std::string{});
      } else if (kind == "const") {
        n.kind = NodeKind::Const;
        n.a = jn.at("value").get<bool>() ? 1 : 0;
      } else if (kind == "gate") {
        n.kind = NodeKind::Gate;
        int code = jn.at("func").get<int>();
        if (code < 0 || code > 15)
          throw ParseError("gate code out of range" + at);
        n.func = GateFunc(static_cast<uint8_t>(code));
        n.a = jn.at("a").get<uint32_t>();
        n.b = jn.at("b").get<uint32_t>();
        if (n.a >= i || n.b >= i)
          throw ParseError("operand is not an earlier node" + at);
      } else {
        throw ParseError("unknown node kind '" + kind + "'" + at);
      }
      c.nodes.push_back(std::move(n));
    }
    for (uint32_t idx : doc.at("inputs").get<std::vector<uint32_t>>()) {
      if (idx >= c.nodes.size() || c.nodes[idx].kind != NodeKind::Input)
        throw ParseError("input list entry " + std::to_string(idx) +
                         " is not an input node");
      c.inputs.push_back(idx);
    }
    for (uint32_t idx : doc.at("outputs").get<std::vector<uint32_t>>()) {
      if (idx >= c.nodes.size())
        throw ParseError("output index " + std::to_string(idx) +
                         " out of range");
      c.outputs.push_back(idx);
    }
    ValidationReport vr = validate(c);
    if (!vr.ok()) throw ParseError("invalid circuit: " + vr.violations[0]);
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

std::string to_blif(const Circuit& c) {
  std::ostringstream os;
  os << ".model " << (c.name.empty() ? "circuit" : c.name) << "\n";
  os << ".inputs";
  for (uint32_t i : c.inputs) os << " " << net_name(c, i);
  os << "\n.outputs";
  for (uint32_t o : c.outputs) os << " " << net_name(c, o);
  os << "\n";
  for (uint32_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    if (n.kind == NodeKind::Const) {
      // Constant net: single-row cover for 1, empty cover for 0.
      os << ".names " << net_name(c, i) << "\n";
      if (n.a) os << "1\n";
    } else if (n.kind == NodeKind::Gate) {
      os << ".names " << net_name(c, n.a) << " " << net_name(c, n.b) << " "
         << net_name(c, i) << "\n";
      for (const std::string& row : onset_cover(n.func.code()))
        os << row << " 1\n";
    }
  }
  os << ".end\n";
  return os.str();
}

std::string to_dot(const Circuit& c) {
  std::vector<uint32_t> depth = node_depths(c);
  uint32_t max_depth = 0;
  for (uint32_t d : depth) max_depth = std::max(max_depth, d);
  std::ostringstream os;
  os << "digraph \"" << (c.name.empty() ? "circuit" : c.name) << "\" {\n";
  os << "  rankdir=LR;\n  node [shape=box];\n";
  for (uint32_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    os << "  n" << i << " [label=\"";
    switch (n.kind) {
      case NodeKind::Input:
        os << net_name(c, i);
        break;
      case NodeKind::Const:
        os << (n.a ? "1" : "0");
        break;
      case NodeKind::Gate:
        os << n.func.name() << "#" << i;
        break;
    }
    os << "\"];\n";
  }
  for (uint32_t d = 0; d <= max_depth; ++d) {
    os << "  { rank=same;";
    for (uint32_t i = 0; i < c.nodes.size(); ++i)
      if (depth[i] == d) os << " n" << i << ";";
    os << " }\n";
  }
  for (uint32_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    if (n.kind != NodeKind::Gate) continue;
    os << "  n" << n.a << " -> n" << i << ";\n";
    os << "  n" << n.b << " -> n" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace boolforge
