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


#ifndef GAMEBENCH_AGENTS_HPP_
#define GAMEBENCH_AGENTS_HPP_

#include <memory>
#include <string>

#include "gamebench/games.hpp"
#include "gamebench/rng.hpp"
#include "gamebench/types.hpp"

namespace gamebench {

// A seat in a match. Agents see the engine read-only and return one action
// for the current step; the orchestrator checks legality.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual Action Act(const GameEngine& engine, PlayerId player) = 0;
  // True for agents that block on the network; the orchestrator queries
  // those in parallel.
  virtual bool remote() const { return false; }
  // Whether the last action came from a fallback policy.
  virtual bool last_coerced() const { return false; }
};

// Stream used by a seat's own randomness for the engine's current step.
RngStream AgentStream(const GameEngine& engine, PlayerId player, std::string_view purpose = kPurposeAgent);

// Equilibrium / scoring-optimal action for the current step:
//   guess: MIN if R < 1, MAX if R > 1, the midpoint if R == 1
//   bar: go with probability R
//   dollar: G / N, with the remainder spread one each over the lowest ids
//   public goods: nothing if R / N <= 1, else the whole balance
//   diner: the costly dish
//   auction: floor(bid_fraction * v) first-price, v second-price
//   royale: the alive opponent with the highest hit rate (lowest id on ties)
//   pirate: the parity proposal and vote, backward induction when gold is short
Action OracleAction(const GameEngine& engine, PlayerId player, const Rational& bid_fraction, RngStream& rng);

// Uniform over the legal actions of the current step.
Action RandomAction(const GameEngine& engine, PlayerId player, RngStream& rng);

// Player i goes in round j iff (i + j) mod N < floor(R * N).
Action RotationBarAction(const GameEngine& engine, PlayerId player);

// Action of a kFixed catalog strategy.
Action FixedStrategyAction(const AgentSpec& spec, const GameEngine& engine, PlayerId player);

// Oracle, random, fixed and scripted seats. Throws Error(kConfigInvalid) for
// kLlm and kHuman specs, which are built by the gateway and the service.
std::unique_ptr<Agent> MakeLocalAgent(const AgentSpec& spec);

// Text summary of the reference strategy profile for one configuration.
std::string ReferenceStrategyText(const MatchConfig& config);

std::string FormatAllocation(const std::vector<std::int64_t>& allocation);

}  // namespace gamebench

#endif  // GAMEBENCH_AGENTS_HPP_
