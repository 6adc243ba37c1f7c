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

// Wall-clock comparison of the serial and worker-parallel bit-parallel
// simulators on a mid-size netlist. Informational only; correctness of
// both paths is covered by the test suite.

#include <chrono>
#include <iostream>
#include <random>

#include "boolforge/count.hpp"
#include "boolforge/sim.hpp"

using namespace boolforge;

int main() {
  Circuit c = gen_sum(64, Variant::Parallel);
  constexpr size_t kCount = 1 << 20;
  std::mt19937_64 rng(0);
  std::vector<Assignment> as;
  as.reserve(kCount);
  for (size_t i = 0; i < kCount; ++i) {
    Assignment a(c.num_inputs());
    for (auto& bit : a) bit = rng() & 1;
    as.push_back(std::move(a));
  }
  BitBatch batch = BitBatch::from_assignments(as, c.num_inputs());
  auto time = [&](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    BitBatch out = fn();
    auto t1 = std::chrono::steady_clock::now();
    uint64_t sum = 0;
    for (const auto& lane : out.lanes)
      for (uint64_t w : lane) sum ^= w;
    std::chrono::duration<double> dt = t1 - t0;
    return std::pair<double, uint64_t>(dt.count(), sum);
  };
  auto [ts, hs] = time([&] { return evaluate_block_serial(c, batch); });
  auto [tp, hp] = time([&] { return evaluate_block(c, batch); });
  std::cout << "netlist " << c.name << ", " << kCount << " assignments\n";
  std::cout << "serial   " << ts << " s\n";
  std::cout << "parallel " << tp << " s (identical results: "
            << (hs == hp ? "yes" : "NO") << ")\n";
  return hs == hp ? 0 : 1;
}
