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

// Numeric bundles are LSB-at-index-0 throughout. Input order is the
// declaration order given in each generator's comment.

/// X + 1 mod 2^n. Inputs x_0..x_{n-1}; outputs z_0..z_{n-1}.
/// Sequential size is exactly 2n-2 for n >= 2.
Circuit gen_inc(uint32_t n, Variant v);
/// X - 1 mod 2^n, the dual construction with negated prefix literals.
Circuit gen_dec(uint32_t n, Variant v);

/// Inputs x_0..x_{n-1}, sigma. sigma=1 increments, sigma=0 decrements.
/// n >= 2.
Circuit gen_udc(uint32_t n, Variant v);

/// Cyclic successor in standard Gray order. Inputs x_0..x_{n-1}
/// (numbered right to left), outputs likewise. n in {1,2} uses a direct
/// truth-table netlist.
Circuit gen_grc(uint32_t n, Variant v);

/// Carry system c_1 = x_0, c_{i+1} = x_i ^ y_i c_i.
/// Inputs x_0..x_{n-1}, y_0..y_{n-1} (y_0 unused); outputs c_1..c_n.
Circuit gen_car(uint32_t n, Variant v);

/// A + B as an (n+1)-bit sum. Inputs a_0.., b_0..; outputs z_0..z_n.
/// Sequential size is exactly 5n-3.
Circuit gen_add(uint32_t n, Variant v);

/// Predicate A > B; extended form also outputs A = B.
/// Inputs a_0.., b_0..; outputs [gt] or [gt, eq].
Circuit gen_cmp(uint32_t n, Variant v, bool extended = false);

/// max(A, B), optionally min(A, B) as well.
/// Inputs a_0.., b_0..; outputs max_0..max_{n-1} (then min_0..min_{n-1}).
Circuit gen_max(uint32_t n, Variant v, bool with_min = false);

}  // namespace boolforge
