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

#include "boolforge/sim.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace boolforge {

std::vector<uint8_t> evaluate(const Circuit& c, const Assignment& a) {
  if (a.size() != c.inputs.size())
    throw ArgumentError("assignment length does not match input count");
  std::vector<uint8_t> val(c.nodes.size(), 0);
  size_t next_input = 0;
  for (size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    switch (n.kind) {
      case NodeKind::Input:
        val[i] = a[next_input++] & 1;
        break;
      case NodeKind::Const:
        val[i] = static_cast<uint8_t>(n.a);
        break;
      case NodeKind::Gate:
        val[i] = n.func.eval(val[n.a], val[n.b]);
        break;
    }
  }
  std::vector<uint8_t> out;
  out.reserve(c.outputs.size());
  for (uint32_t o : c.outputs) out.push_back(val[o]);
  return out;
}

BitBatch BitBatch::from_assignments(const std::vector<Assignment>& as,
                                    size_t num_inputs) {
  BitBatch b;
  b.lanes.assign(num_inputs, {});
  for (const auto& a : as) b.push(a);
  return b;
}

BitBatch BitBatch::from_values(const std::vector<uint64_t>& values,
                               size_t num_inputs) {
  BitBatch b;
  size_t words = (values.size() + 63) / 64;
  b.count = values.size();
  b.lanes.assign(num_inputs, std::vector<uint64_t>(words, 0));
  for (size_t t = 0; t < values.size(); ++t)
    for (size_t i = 0; i < num_inputs; ++i)
      if ((values[t] >> i) & 1) b.lanes[i][t / 64] |= 1ull << (t % 64);
  return b;
}

void BitBatch::push(const Assignment& a) {
  size_t t = count++;
  size_t words = t / 64 + 1;
  for (size_t i = 0; i < lanes.size(); ++i) {
    lanes[i].resize(words, 0);
    if (i < a.size() && a[i]) lanes[i][t / 64] |= 1ull << (t % 64);
  }
}

Assignment BitBatch::get(size_t t) const {
  Assignment a(lanes.size(), 0);
  for (size_t i = 0; i < lanes.size(); ++i)
    a[i] = (lanes[i][t / 64] >> (t % 64)) & 1;
  return a;
}

namespace {

// Evaluates one 64-assignment word column through the whole netlist.
void eval_word_column(const Circuit& c, const BitBatch& batch, size_t w,
                      std::vector<uint64_t>& val, BitBatch& out) {
  size_t next_input = 0;
  for (size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    switch (n.kind) {
      case NodeKind::Input:
        val[i] = batch.lanes[next_input++][w];
        break;
      case NodeKind::Const:
        val[i] = n.a ? ~0ull : 0ull;
        break;
      case NodeKind::Gate:
        val[i] = n.func.eval_word(val[n.a], val[n.b]);
        break;
    }
  }
  for (size_t o = 0; o < c.outputs.size(); ++o)
    out.lanes[o][w] = val[c.outputs[o]];
}

BitBatch make_output_batch(const Circuit& c, const BitBatch& batch) {
  BitBatch out;
  out.count = batch.count;
  size_t words = batch.count == 0 ? 0 : (batch.count + 63) / 64;
  out.lanes.assign(c.outputs.size(), std::vector<uint64_t>(words, 0));
  return out;
}

}  // namespace

BitBatch evaluate_block_serial(const Circuit& c, const BitBatch& batch) {
  if (batch.lanes.size() != c.inputs.size())
    throw ArgumentError("batch lane count does not match input count");
  BitBatch out = make_output_batch(c, batch);
  size_t words = batch.count == 0 ? 0 : (batch.count + 63) / 64;
  std::vector<uint64_t> val(c.nodes.size(), 0);
  for (size_t w = 0; w < words; ++w) eval_word_column(c, batch, w, val, out);
  return out;
}

BitBatch evaluate_block(const Circuit& c, const BitBatch& batch) {
  if (batch.lanes.size() != c.inputs.size())
    throw ArgumentError("batch lane count does not match input count");
  BitBatch out = make_output_batch(c, batch);
  ptrdiff_t words =
      batch.count == 0 ? 0 : static_cast<ptrdiff_t>((batch.count + 63) / 64);
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<uint64_t> val(c.nodes.size(), 0);
#pragma omp for schedule(static)
    for (ptrdiff_t w = 0; w < words; ++w)
      eval_word_column(c, batch, static_cast<size_t>(w), val, out);
  }
#else
  std::vector<uint64_t> val(c.nodes.size(), 0);
  for (ptrdiff_t w = 0; w < words; ++w)
    eval_word_column(c, batch, static_cast<size_t>(w), val, out);
#endif
  return out;
}

}  // namespace boolforge
