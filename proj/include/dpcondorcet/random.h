//
// Copyright 2026 The dpcondorcet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPCONDORCET_RANDOM_H_
#define DPCONDORCET_RANDOM_H_

#include <cstdint>
#include <random>

namespace dpcondorcet {

// Explicitly seeded random source. Every sampler takes one by reference;
// there is no global generator. Output is a pure function of the seed and
// the sequence of calls, independent of the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t seed() const { return seed_; }

  uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double UniformDouble();

  // Uniform on (0, 1).
  double UniformOpenDouble();

  // Independent child stream; advances this stream by one draw.
  Rng Split();

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

// SplitMix64 finaliser; used to derive seeds.
uint64_t MixSeed(uint64_t x);

}  // namespace dpcondorcet

#endif  // DPCONDORCET_RANDOM_H_
