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

#include "gamebench/rng.hpp"

#include <limits>
#include <stdexcept>

namespace gamebench {
namespace {

std::mt19937_64 SeededEngine(std::uint64_t seed, std::uint64_t label, std::int64_t round,
                             std::int64_t player) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  const auto r = static_cast<std::uint64_t>(round);
  const auto p = static_cast<std::uint64_t>(player);
  std::seed_seq seq{lo(seed), hi(seed), lo(label), hi(label), lo(r), hi(r), lo(p), hi(p)};
  return std::mt19937_64(seq);
}

}  // namespace

std::uint64_t HashLabel(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

RngStream::RngStream(std::uint64_t seed, std::string_view purpose, std::int64_t round,
                     std::int64_t player)
    : engine_(SeededEngine(seed, HashLabel(purpose), round, player)) {}

std::int64_t RngStream::UniformInt(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("UniformInt: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(NextU64());
  const std::uint64_t range = span + 1;
  // Largest multiple of range that fits; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  std::uint64_t draw = NextU64();
  while (draw > limit) draw = NextU64();
  return lo + static_cast<std::int64_t>(draw % range);
}

bool DrawBelow(std::uint64_t draw53, const Rational& p) {
  // draw / 2^53 < num / den  <=>  draw * den < num * 2^53
  const BigInt num = boost::multiprecision::numerator(p);
  const BigInt den = boost::multiprecision::denominator(p);
  const BigInt two53 = BigInt(1) << 53;
  return BigInt(draw53) * den < num * two53;
}

bool RngStream::Bernoulli(const Rational& p) { return DrawBelow(NextU53(), p); }

std::uint64_t DeriveSeed(std::uint64_t base_seed, std::string_view label, std::uint64_t index) {
  RngStream stream(base_seed, label, static_cast<std::int64_t>(index), -1);
  return stream.NextU64();
}

}  // namespace gamebench
