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

#include <optional>

#include "boolforge/prefix.hpp"

namespace boolforge {

/// Decoder: n one-hot outputs over an address of ⌈log n⌉ bits; output j
/// is [addr = j], all-zero for addr >= n. With demux, a data input y is
/// threaded through the recursion so output j is [addr = j] & y.
Circuit gen_decoder(uint32_t n, bool demux = false);

/// (n,1)-multiplexor: selects y_addr. Sequential variant is a balanced
/// tree of 2-way selects; parallel is the two-level split with a shared
/// low-bits decoder.
Circuit gen_mux(uint32_t n, Variant v);

/// (n,k)-multiplexor over k-bit words sharing both decoders.
Circuit gen_mux_k(uint32_t n, uint32_t k);

/// Cyclic shift of an n-bit string by X in [0,k) positions toward
/// higher string index; barrel of ⌈log k⌉ select layers.
Circuit gen_cyc(uint32_t k, uint32_t n);

/// Regular shift: output widens to n+k-1; vacated positions are zero.
Circuit gen_sft(uint32_t k, uint32_t n);

// Builder-level pieces shared with other generator modules.

/// One-hot [addr = j] wires for j < count; zero for addr >= count.
/// Requires count <= 2^addr.size(). If data is set, it is conjoined
/// into every output through the high half of the recursion.
std::vector<Ref> build_onehot(CircuitBuilder& b, const std::vector<Ref>& addr,
                              uint32_t count, std::optional<Ref> data);

/// data[addr], or 0 when addr >= data.size(). Two-level decoder split;
/// requires data.size() <= 2^addr.size() and 2^(addr.size()-1) <
/// data.size() for the intended cost, though any sizes work.
Ref build_mux(CircuitBuilder& b, const std::vector<Ref>& addr,
              const std::vector<Ref>& data);

/// Balanced tree of 2-way selects computing data[addr].
Ref build_mux_tree(CircuitBuilder& b, const std::vector<Ref>& addr,
                   const std::vector<Ref>& data);

}  // namespace boolforge
