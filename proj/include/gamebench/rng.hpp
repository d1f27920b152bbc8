// Copyright 2026 The GameBench Authors
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

#ifndef GAMEBENCH_RNG_HPP_
#define GAMEBENCH_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "gamebench/rational.hpp"

namespace gamebench {

// A deterministic substream keyed by (seed, purpose, round, player).
//
// The engine is std::mt19937_64 seeded through std::seed_seq, both of which
// are fully specified by the standard. The integer and Bernoulli mappings
// below are implemented here rather than with <random> distributions, whose
// output is implementation-defined, so draws are identical on every platform.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view purpose, std::int64_t round, std::int64_t player);

  std::uint64_t NextU64() { return engine_(); }

  // Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // Uniform integer in [0, 2^53).
  std::uint64_t NextU53() { return NextU64() >> 11; }

  // True with probability exactly p for p in [0,1] (up to 2^-53 resolution):
  // compares a 53-bit draw u against p * 2^53 without rounding.
  bool Bernoulli(const Rational& p);

  double UniformDouble() { return static_cast<double>(NextU53()) / 9007199254740992.0; }

 private:
  std::mt19937_64 engine_;
};

inline RngStream MakeRngStream(std::uint64_t seed, std::string_view purpose, std::int64_t round,
                               std::int64_t player) {
  return RngStream(seed, purpose, round, player);
}

// True iff draw / 2^53 < p.
bool DrawBelow(std::uint64_t draw53, const Rational& p);

// Stable 64-bit FNV-1a of a label.
std::uint64_t HashLabel(std::string_view label);

// Per-cell seed derivation for experiment plans.
std::uint64_t DeriveSeed(std::uint64_t base_seed, std::string_view label, std::uint64_t index);

// Substream purposes used by the engine and agents.
inline constexpr std::string_view kPurposeValuation = "valuation";
inline constexpr std::string_view kPurposeShot = "shot";
inline constexpr std::string_view kPurposeAgent = "agent";
inline constexpr std::string_view kPurposeFallback = "fallback";

}  // namespace gamebench

#endif  // GAMEBENCH_RNG_HPP_
