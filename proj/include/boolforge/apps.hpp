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

/// Two-selector: keeps the leftmost and rightmost ones of a string,
/// zeroes the rest, and appends a presence indicator. n >= 2.
Circuit gen_toi(uint32_t n);

/// Next number of the same binary weight (the input itself when it is
/// the largest such number, including zero). Inputs/outputs LSB-first.
/// With simplified=true the cheaper final merge is used and a validity
/// flag is appended; outputs are then contractually valid only when
/// the flag is 1. n >= 2.
Circuit gen_nck(uint32_t n, bool simplified = false);

/// Double selection: outputs (y_a, y_b) for two ⌈log n⌉-bit addresses
/// over an n-bit data string (0 for out-of-range addresses). n >= 4.
Circuit gen_sel2(uint32_t n);

/// Exchange: output string equals Y with positions a and b swapped
/// (identity when a = b). Addresses must be < n. n >= 4.
Circuit gen_exc(uint32_t n);

}  // namespace boolforge
