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

#ifndef GAMEBENCH_OUTCOME_HPP_
#define GAMEBENCH_OUTCOME_HPP_

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gamebench/action.hpp"
#include "gamebench/rational.hpp"
#include "json.hpp"

namespace gamebench {

struct GuessOutcome {
  Rational average;
  Rational target;
  std::vector<PlayerId> winners;
  std::vector<std::int64_t> winning_numbers;  // distinct, ascending
  bool operator==(const GuessOutcome&) const = default;
};

struct BarOutcome {
  int goers = 0;
  int stayers = 0;
  bool crowded = false;
  std::vector<Rational> utilities;
  bool operator==(const BarOutcome&) const = default;
};

struct DollarOutcome {
  std::int64_t total = 0;
  bool exceeded = false;
  std::vector<std::int64_t> payouts;
  bool operator==(const DollarOutcome&) const = default;
};

struct PublicGoodsOutcome {
  std::vector<std::int64_t> contributions;
  std::int64_t pot = 0;
  Rational gain;  // R * pot / N, identical for every player
  std::vector<Rational> balances_after;
  bool operator==(const PublicGoodsOutcome&) const = default;
};

struct DinerOutcome {
  int costly = 0;
  int cheap = 0;
  Rational total_cost;
  Rational share;
  std::vector<Rational> utilities;
  bool operator==(const DinerOutcome&) const = default;
};

struct AuctionOutcome {
  std::vector<std::int64_t> valuations;
  PlayerId winner = 0;
  std::int64_t winning_bid = 0;
  std::int64_t price = 0;
  std::vector<std::int64_t> utilities;
  bool operator==(const AuctionOutcome&) const = default;
};

struct RoyaleOutcome {
  PlayerId actor = 0;
  std::optional<PlayerId> target;  // empty: intentional miss
  bool hit = false;
  std::vector<PlayerId> alive_before;
  std::vector<PlayerId> alive_after;
  bool operator==(const RoyaleOutcome&) const = default;
};

struct PirateProposalOutcome {
  PlayerId proposer = 0;
  std::vector<std::int64_t> allocation;  // over alive pirates, proposer first
  bool operator==(const PirateProposalOutcome&) const = default;
};

struct PirateVoteOutcome {
  PlayerId proposer = 0;
  std::vector<std::int64_t> allocation;
  int accepts = 0;  // includes the proposer's implicit accept
  int alive = 0;
  bool accepted = false;
  std::optional<PlayerId> eliminated;
  // Final gold per player (all N) once the game ends; empty otherwise.
  std::vector<std::int64_t> payouts;
  bool operator==(const PirateVoteOutcome&) const = default;
};

using RoundOutcome = std::variant<GuessOutcome, BarOutcome, DollarOutcome, PublicGoodsOutcome,
                                  DinerOutcome, AuctionOutcome, RoyaleOutcome, PirateProposalOutcome,
                                  PirateVoteOutcome>;

nlohmann::json OutcomeToJson(const RoundOutcome& outcome);
RoundOutcome OutcomeFromJson(const nlohmann::json& json);

}  // namespace gamebench

#endif  // GAMEBENCH_OUTCOME_HPP_
