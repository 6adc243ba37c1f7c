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
#include <string>

namespace boolforge {

/// One of the 16 two-input boolean functions, encoded as a 4-bit truth
/// table: bit (2*a + b) of `code` equals f(a, b).
class GateFunc {
 public:
  constexpr GateFunc() = default;
  constexpr explicit GateFunc(uint8_t code) : code_(code & 0xf) {}

  constexpr uint8_t code() const { return code_; }

  constexpr bool eval(bool a, bool b) const {
    return (code_ >> ((a ? 2 : 0) | (b ? 1 : 0))) & 1;
  }

  /// Word-parallel evaluation: each bit position is an independent
  /// assignment.
  constexpr uint64_t eval_word(uint64_t a, uint64_t b) const {
    uint64_t r = 0;
    if (code_ & 1) r |= ~a & ~b;
    if (code_ & 2) r |= ~a & b;
    if (code_ & 4) r |= a & ~b;
    if (code_ & 8) r |= a & b;
    return r;
  }

  /// True iff the function ignores at least one argument or is constant.
  constexpr bool degenerate() const {
    switch (code_) {
      case 0x0:  // const 0
      case 0x3:  // !a
      case 0x5:  // !b
      case 0xa:  // b
      case 0xc:  // a
      case 0xf:  // const 1
        return true;
      default:
        return false;
    }
  }

  /// Equivalent code when the first operand arrives complemented.
  constexpr GateFunc flip_a() const {
    return GateFunc(static_cast<uint8_t>(((code_ & 0x3) << 2) | (code_ >> 2)));
  }
  /// Equivalent code when the second operand arrives complemented.
  constexpr GateFunc flip_b() const {
    return GateFunc(
        static_cast<uint8_t>(((code_ & 0x5) << 1) | ((code_ & 0xa) >> 1)));
  }
  /// Code with both operands swapped: f'(a, b) = f(b, a).
  constexpr GateFunc swapped() const {
    return GateFunc(static_cast<uint8_t>((code_ & 0x9) | ((code_ & 0x2) << 1) |
                                         ((code_ & 0x4) >> 1)));
  }

  friend constexpr bool operator==(GateFunc x, GateFunc y) {
    return x.code_ == y.code_;
  }
  friend constexpr bool operator!=(GateFunc x, GateFunc y) {
    return x.code_ != y.code_;
  }

  std::string name() const;

 private:
  uint8_t code_ = 0;
};

inline constexpr GateFunc kConst0{0x0};
inline constexpr GateFunc kNor{0x1};      // !a & !b
inline constexpr GateFunc kAndNotA{0x2};  // !a & b
inline constexpr GateFunc kNotA{0x3};
inline constexpr GateFunc kAndNotB{0x4};  // a & !b
inline constexpr GateFunc kNotB{0x5};
inline constexpr GateFunc kXor{0x6};
inline constexpr GateFunc kNand{0x7};
inline constexpr GateFunc kAnd{0x8};
inline constexpr GateFunc kXnor{0x9};
inline constexpr GateFunc kBufB{0xa};
inline constexpr GateFunc kOrNotA{0xb};  // !a | b
inline constexpr GateFunc kBufA{0xc};
inline constexpr GateFunc kOrNotB{0xd};  // a | !b
inline constexpr GateFunc kOr{0xe};
inline constexpr GateFunc kConst1{0xf};

}  // namespace boolforge
