/*
 * Copyright 2026 The blendaug Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BLENDAUG_RNG_H_
#define BLENDAUG_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace blendaug {

// Seeded random source. The engine is std::mt19937_64, whose output sequence
// is fixed by the standard; the derived draws below are implemented here
// rather than with <random> distributions so results do not depend on the
// standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform01();

  // Uniform integer in [0, n). n must be positive.
  std::size_t UniformIndex(std::size_t n);

  // True with probability p.
  bool Bernoulli(double p) { return Uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

// 64-bit FNV-1a over `bytes`, continuing from `hash`.
std::uint64_t Fnv1a(std::string_view bytes,
                    std::uint64_t hash = 0xcbf29ce484222325ULL);

// Per-item seed: FNV-1a over the 8 little-endian bytes of `seed` followed by
// the bytes of `key`. Used to give every utterance its own stream so results
// do not depend on scheduling.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view key);

}  // namespace blendaug

#endif  // BLENDAUG_RNG_H_
