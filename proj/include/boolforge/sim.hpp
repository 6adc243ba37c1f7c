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
#include <stdexcept>
#include <string>
#include <vector>

#include "boolforge/circuit.hpp"

namespace boolforge {

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Assignment = std::vector<uint8_t>;  // one bit per circuit input

/// Evaluates the circuit on a single assignment. Outputs follow the
/// circuit's output-list order.
std::vector<uint8_t> evaluate(const Circuit& c, const Assignment& a);

/// Batch of assignments packed 64 per machine word, one lane per input.
/// words[i][w] bit j holds input i of assignment 64*w + j.
struct BitBatch {
  size_t count = 0;
  std::vector<std::vector<uint64_t>> lanes;

  static BitBatch from_assignments(const std::vector<Assignment>& as,
                                   size_t num_inputs);
  /// Batch whose assignment t is the bits of values[t] (input i = bit i).
  static BitBatch from_values(const std::vector<uint64_t>& values,
                              size_t num_inputs);
  void push(const Assignment& a);  // lanes must already be sized
  Assignment get(size_t t) const;
};

/// Word-level bit-parallel evaluation; OpenMP-parallel over words when
/// available. Results are identical to per-assignment evaluate calls
/// regardless of worker count.
BitBatch evaluate_block(const Circuit& c, const BitBatch& batch);

/// Single-threaded reference used by tests and the benchmark target.
BitBatch evaluate_block_serial(const Circuit& c, const BitBatch& batch);

struct EquivFailure {
  Assignment input;
  std::vector<uint8_t> expected;
  std::vector<uint8_t> got;
};

struct EquivReport {
  enum class Mode { Exhaustive, Sampled } mode = Mode::Exhaustive;
  size_t tested = 0;
  std::vector<EquivFailure> failures;
  uint64_t seed = 0;
  bool pass() const { return failures.empty(); }
};

struct CheckBudget {
  unsigned exhaustive_limit = 22;  // max total input bits for exhaustion
  size_t samples = 100000;
  uint64_t seed = 0;
};

}  // namespace boolforge
