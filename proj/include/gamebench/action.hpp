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

#ifndef GAMEBENCH_ACTION_HPP_
#define GAMEBENCH_ACTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace gamebench {

// 0-based internally. Prompts render id + 1.
using PlayerId = int;

struct ChosenNumber {
  std::int64_t value = 0;
  bool operator==(const ChosenNumber&) const = default;
};

enum class BarChoice { kGo, kStay };
struct BarDecision {
  BarChoice choice = BarChoice::kStay;
  bool operator==(const BarDecision&) const = default;
};

struct Bid {
  std::int64_t amount = 0;
  bool operator==(const Bid&) const = default;
};

struct Contribution {
  std::int64_t tokens = 0;
  bool operator==(const Contribution&) const = default;
};

enum class DishChoice { kCostly, kCheap };
struct Dish {
  DishChoice choice = DishChoice::kCheap;
  bool operator==(const Dish&) const = default;
};

struct AuctionBid {
  std::int64_t amount = 0;
  bool operator==(const AuctionBid&) const = default;
};

// An empty target is an intentional miss.
struct Shot {
  std::optional<PlayerId> target;
  bool operator==(const Shot&) const = default;
};

// Allocation over the alive pirates in seniority order, starting with the
// proposer.
struct PirateProposal {
  std::vector<std::int64_t> allocation;
  bool operator==(const PirateProposal&) const = default;
};

struct PirateVote {
  bool accept = false;
  bool operator==(const PirateVote&) const = default;
};

using Action = std::variant<ChosenNumber, BarDecision, Bid, Contribution, Dish, AuctionBid, Shot,
                            PirateProposal, PirateVote>;

// Canonical tagged form used in logs and configs, e.g.
// {"type":"bid","amount":91} or {"type":"shot","target":null}.
nlohmann::json ActionToJson(const Action& action);
Action ActionFromJson(const nlohmann::json& json);

// Short human-readable form for diagnostics ("bid 91", "shot at player 3").
std::string DescribeAction(const Action& action);

}  // namespace gamebench

#endif  // GAMEBENCH_ACTION_HPP_
