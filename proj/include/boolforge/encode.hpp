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

/// Linear encoder: on a one-hot input x_0..x_{n-1} the ⌈log n⌉ outputs
/// are the binary index of the set position (all-zero input gives 0).
/// The circuit is XOR-only, hence linear over GF(2) on every input.
/// Size exactly 2(n - ⌈log n⌉ - 1), depth ⌈log n⌉ - 1.
Circuit gen_enc(uint32_t n, Variant v);

/// Unary (thermometer) code of a number K <= n given on ⌈log(n+1)⌉
/// bits: outputs u_1..u_n with u_j = [K >= j].
Circuit gen_un(uint32_t n, Variant v);

/// Inverse of the unary code: inputs u_1..u_n monotone nonincreasing,
/// outputs the ⌈log(n+1)⌉-bit count of ones. Size exactly n-1.
Circuit gen_un_inv(uint32_t n);

/// Truncation: keeps the first K characters of an n-bit string and
/// zeroes the rest. Inputs K (⌈log(n+1)⌉ bits), then x_0..x_{n-1}.
Circuit gen_trn(uint32_t n);

/// First-one isolation: y_k = x_k & ~(x_0 | ... | x_{k-1}), plus an
/// any-one indicator. Outputs y_0..y_{n-1}, z. Sequential size 2n-2.
Circuit gen_foi(uint32_t n, Variant v);

/// Priority encoder: position of the first one (⌈log n⌉ bits, valid
/// when some input is set) and an any-one indicator as last output.
/// Sequential size 2n-3 for n >= 3.
Circuit gen_penc(uint32_t n, Variant v);

// Builder-level pieces shared with other generator modules.

/// Thermometer wires u_1..u_n of the number given by kbits (LSB first,
/// ⌈log(n+1)⌉ bits); valid for values <= n.
std::vector<Ref> build_un(CircuitBuilder& b, const std::vector<Ref>& kbits,
                          uint32_t n);

/// Number of ones in a monotone string u_1..u_n, ⌈log(n+1)⌉ bits out.
std::vector<Ref> build_un_inv(CircuitBuilder& b, const std::vector<Ref>& u);

}  // namespace boolforge
