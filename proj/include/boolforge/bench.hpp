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

#include "boolforge/oracle.hpp"

namespace boolforge {

/// One measured configuration of the size sweep. `pass` is true when the
/// size relation to the bound holds (equality for exact bounds, <= for
/// caps) or when there is no bound to assert.
struct SweepRow {
  std::string op;
  uint32_t n = 0;
  uint32_t k = 0;
  std::string variant;
  size_t size = 0;
  size_t depth = 0;
  std::string bound_formula;
  double bound_value = 0;
  bool exact = false;
  bool asserted = false;  // false: measured-only row
  bool pass = true;
  std::string error;  // non-empty: generator failed, row not measured
};

/// Sizes/depths for one family over an inclusive n range; k defaults per
/// family. Generator failures mark the row and the sweep continues.
std::vector<SweepRow> sweep(const OperatorSpec& spec, uint32_t n_lo,
                            uint32_t n_hi);

/// Whole registry, ordering fixed by (operator, n).
std::vector<SweepRow> sweep_all(uint32_t n_lo, uint32_t n_hi);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_table(const std::vector<SweepRow>& rows);

/// One depth measurement of a parallel (or single-construction) variant
/// against the family's declared envelope c*ceil(log2 n) + d.
struct DepthRow {
  std::string op;
  uint32_t n = 0;
  size_t depth = 0;
  uint32_t ceil_log = 0;
  double cap = 0;
  bool pass = true;
  std::string error;
};

std::vector<DepthRow> depth_report(const OperatorSpec& spec,
                                   const std::vector<uint32_t>& ns);
std::vector<DepthRow> depth_report_all(const std::vector<uint32_t>& ns);
std::string depth_table(const std::vector<DepthRow>& rows);

/// Bound-summary table: one line per tabulated operator, annotated
/// implemented (with measured size at a reference width) or out-of-scope
/// with the reason. Asymptotic terms are reported as measured values,
/// never asserted.
std::string table1_report();

/// True iff every asserted row in `rows` passes and none errored.
bool all_pass(const std::vector<SweepRow>& rows);
bool all_pass(const std::vector<DepthRow>& rows);

}  // namespace boolforge
