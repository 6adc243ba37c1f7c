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

#include <stdexcept>
#include <string>

#include "boolforge/circuit.hpp"

namespace boolforge {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Versioned JSON document. from_json(to_json(c)) reproduces a circuit
/// with identical structure and metrics; unknown format versions and
/// malformed nodes (forward references, bad gate codes) are rejected
/// with the offending node index in the message.
std::string to_json(const Circuit& c);
Circuit from_json(const std::string& text);

/// BLIF export (no import): one two-input .names section per gate with a
/// minimal ON-set cover (at most 3 rows), constants as trivial .names.
std::string to_blif(const Circuit& c);

/// Graphviz export; nodes ranked by logic depth.
std::string to_dot(const Circuit& c);

}  // namespace boolforge
