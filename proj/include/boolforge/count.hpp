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

#include "boolforge/prefix.hpp"

namespace boolforge {

/// Sum-preserving 3->2 and 2->2 compressor primitives: a+b+c = 2u+v.
struct CompressorOut {
  Ref u;  // weight-2 output
  Ref v;  // weight-1 output
};

/// Full compressor, 5 gates, valid on all 8 input patterns.
CompressorOut full_compressor(CircuitBuilder& bld, Ref a, Ref b, Ref c);

/// Block compressor, 4 gates: u = b(a|c), v = a^b^c. Valid on every
/// pattern except (1,0,1), which cannot occur when the operands are
/// adjacent bits of a single-block string.
CompressorOut block_compressor(CircuitBuilder& bld, Ref a, Ref b, Ref c);

/// Half adder, 2 gates.
CompressorOut half_compressor(CircuitBuilder& bld, Ref a, Ref b);

/// Popcount: ⌈log(n+1)⌉ outputs equal to the number of ones.
/// Sequential: per-column compressor chains; parallel: reduction rounds
/// plus a short carry ripple, depth O(log n). Size <= 5n.
Circuit gen_sum(uint32_t n, Variant v);

/// Width of the single block of ones (domain-restricted); same tree as
/// gen_sum but with 4-gate block compressors. Size <= 4n (sequential).
Circuit gen_bw(uint32_t n, Variant v);

/// Threshold predicate [popcount(X) >= k]; k is a structural constant.
Circuit gen_thr(uint32_t n, uint32_t k, Variant v);

/// Sorts the input string, zeros left: output [0]^(n-w)[1]^w.
Circuit gen_sort(uint32_t n, Variant v);

/// Popcount digits of `xs` emitted into an existing builder.
std::vector<Ref> build_sum(CircuitBuilder& b, const std::vector<Ref>& xs,
                           Variant v);

}  // namespace boolforge
