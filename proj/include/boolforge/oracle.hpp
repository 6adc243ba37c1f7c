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

#include <functional>
#include <random>
#include <string_view>

#include "boolforge/sim.hpp"
#include "boolforge/prefix.hpp"

namespace boolforge {

/// Concrete configuration of an operator family.
struct OpParams {
  uint32_t n = 0;
  uint32_t k = 0;  // secondary parameter; meaning documented per family
  Variant variant = Variant::Sequential;
};

/// Size bound attached to a configuration; `exact` bounds are equalities,
/// others are upper caps. An empty formula means measured-only.
struct Bound {
  std::string formula;
  double value = 0;
  bool exact = false;
  bool has_bound() const { return !formula.empty(); }
};

/// Word-level reference semantics plus metadata for one operator family.
/// Oracles deliberately compute with plain integer/string arithmetic,
/// independent of the netlist constructions.
struct OperatorSpec {
  std::string name;
  std::string summary;
  uint32_t min_n = 1;
  bool takes_k = false;
  bool takes_variant = true;
  /// Default secondary parameter for sweeps (0 = derive from n).
  std::function<uint32_t(uint32_t n)> default_k;
  /// Depth envelope depth <= c*ceil(log2 n) + d for the parallel variant
  /// (or the single construction when the family has no variants).
  double depth_c = 0;
  double depth_d = 0;

  std::function<Circuit(const OpParams&)> generate;
  std::function<std::vector<uint8_t>(const OpParams&, const Assignment&)>
      oracle;
  /// Null means the operator is total.
  std::function<bool(const OpParams&, const Assignment&)> in_domain;
  /// Draws an in-domain assignment; null means uniform bits.
  std::function<Assignment(const OpParams&, std::mt19937_64&)> sample;
  /// Per-output compare mask (1 = compare); null means all outputs.
  std::function<std::vector<uint8_t>(const OpParams&, const Assignment&)>
      care;
  /// Null means measured-only (no size assertion).
  std::function<Bound(const OpParams&)> bound;
};

const std::vector<OperatorSpec>& operator_registry();
const OperatorSpec* find_operator(std::string_view name);

/// Checks the generated circuit against the oracle: exhaustive over all
/// assignments (out-of-domain skipped) when the input count fits the
/// budget, otherwise fixed-seed sampling plus corner cases. At most a
/// handful of failures are recorded.
EquivReport check_operator(const OperatorSpec& spec, const OpParams& p,
                           const CheckBudget& budget);

/// All in-domain assignments; requires the input count to fit max_bits.
std::vector<Assignment> enumerate_domain(const OperatorSpec& spec,
                                         const OpParams& p,
                                         unsigned max_bits = 22);

}  // namespace boolforge
