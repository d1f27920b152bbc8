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


#include "gamebench/agents.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gamebench/error.hpp"
#include "gamebench/pirate.hpp"

namespace gamebench {

namespace {

Action OraclePirate(const GameEngine& engine, PlayerId player) {
  const int alive = engine.n_players() - engine.proposer();
  const std::int64_t gold = engine.gold();
  if (engine.step_kind() == StepKind::kPropose) return PirateProposal{OptimalPirateProposal(alive, gold)};
  const int offset = player - engine.proposer();
  const std::int64_t offered = engine.pending_proposal()->allocation.at(static_cast<std::size_t>(offset));
  if (gold >= PirateBribeCount(alive)) return PirateVote{OptimalPirateVote(offset, offered)};
  const auto solution = SolvePirateGame(alive, gold);
  return PirateVote{BackwardInductionVote(solution, alive, offset, offered)};
}

PlayerId HighestRateOpponent(const GameEngine& engine, PlayerId player) {
  PlayerId best = -1;
  for (PlayerId p : engine.alive_players()) {
    if (p == player) continue;
    if (best < 0 || engine.HitRate(p) > engine.HitRate(best)) best = p;
  }
  return best;
}

// Uniform composition of `total` into `parts` non-negative integers.
std::vector<std::int64_t> RandomComposition(std::int64_t total, int parts, RngStream& rng) {
  const std::int64_t slots = total + parts - 1;
  const std::int64_t bars = parts - 1;
  // Floyd's algorithm: uniform subset of size `bars` from [0, slots).
  std::set<std::int64_t> chosen;
  for (std::int64_t j = slots - bars; j < slots; ++j) {
    const std::int64_t t = rng.UniformInt(0, j);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::int64_t> out;
  std::int64_t previous = -1;
  for (std::int64_t bar : chosen) {
    out.push_back(bar - previous - 1);
    previous = bar;
  }
  out.push_back(slots - previous - 1);
  return out;
}

class OracleAgent : public Agent {
 public:
  explicit OracleAgent(Rational bid_fraction) : bid_fraction_(std::move(bid_fraction)) {}
  Action Act(const GameEngine& engine, PlayerId player) override {
    RngStream rng = AgentStream(engine, player);
    return OracleAction(engine, player, bid_fraction_, rng);
  }

 private:
  Rational bid_fraction_;
};

class RandomAgent : public Agent {
 public:
  Action Act(const GameEngine& engine, PlayerId player) override {
    RngStream rng = AgentStream(engine, player);
    return RandomAction(engine, player, rng);
  }
};

class FixedAgent : public Agent {
 public:
  explicit FixedAgent(AgentSpec spec) : spec_(std::move(spec)) {}
  Action Act(const GameEngine& engine, PlayerId player) override {
    return FixedStrategyAction(spec_, engine, player);
  }

 private:
  AgentSpec spec_;
};

class ScriptedAgent : public Agent {
 public:
  explicit ScriptedAgent(std::vector<Action> script) : script_(std::move(script)) {}
  Action Act(const GameEngine&, PlayerId player) override {
    if (next_ >= script_.size()) {
      throw Error(ErrorCode::kAgentFailure,
                  "script for player " + std::to_string(player + 1) + " ran out after " +
                      std::to_string(script_.size()) + " actions");
    }
    return script_[next_++];
  }

 private:
  std::vector<Action> script_;
  std::size_t next_ = 0;
};

}  // namespace

RngStream AgentStream(const GameEngine& engine, PlayerId player, std::string_view purpose) {
  return RngStream(engine.config().seed, purpose, static_cast<std::int64_t>(engine.history().size()), player);
}

Action OracleAction(const GameEngine& engine, PlayerId player, const Rational& bid_fraction, RngStream& rng) {
  const MatchConfig& config = engine.config();
  const int n = engine.n_players();
  switch (engine.kind()) {
    case GameKind::kGuessAverage: {
      const auto& p = config.Get<GuessParams>();
      if (p.ratio < 1) return ChosenNumber{p.min};
      if (p.ratio > 1) return ChosenNumber{p.max};
      return ChosenNumber{p.min + (p.max - p.min) / 2};
    }
    case GameKind::kElFarolBar:
      return BarDecision{rng.Bernoulli(config.Get<BarParams>().capacity_ratio) ? BarChoice::kGo : BarChoice::kStay};
    case GameKind::kDivideDollar: {
      const std::int64_t gold = config.Get<DollarParams>().gold;
      return Bid{gold / n + (player < gold % n ? 1 : 0)};
    }
    case GameKind::kPublicGoods: {
      const auto& p = config.Get<PublicGoodsParams>();
      return Contribution{p.multiplier / n <= 1 ? 0 : engine.ContributionCap(player)};
    }
    case GameKind::kDinersDilemma: return Dish{DishChoice::kCostly};
    case GameKind::kSealedBidAuction: {
      const std::int64_t v = engine.Valuation(player);
      if (config.Get<AuctionParams>().pricing == Pricing::kSecondPrice) return AuctionBid{v};
      return AuctionBid{FloorToInt(bid_fraction * v)};
    }
    case GameKind::kBattleRoyale: {
      const PlayerId target = HighestRateOpponent(engine, player);
      return target < 0 ? Shot{} : Shot{target};
    }
    case GameKind::kPirateGame: return OraclePirate(engine, player);
  }
  throw Error(ErrorCode::kAgentFailure, "unknown game");
}

Action RandomAction(const GameEngine& engine, PlayerId player, RngStream& rng) {
  const MatchConfig& config = engine.config();
  switch (engine.kind()) {
    case GameKind::kGuessAverage: {
      const auto& p = config.Get<GuessParams>();
      return ChosenNumber{rng.UniformInt(p.min, p.max)};
    }
    case GameKind::kElFarolBar: return BarDecision{rng.UniformInt(0, 1) ? BarChoice::kGo : BarChoice::kStay};
    case GameKind::kDivideDollar: return Bid{rng.UniformInt(0, config.Get<DollarParams>().gold)};
    case GameKind::kPublicGoods: return Contribution{rng.UniformInt(0, engine.ContributionCap(player))};
    case GameKind::kDinersDilemma: return Dish{rng.UniformInt(0, 1) ? DishChoice::kCostly : DishChoice::kCheap};
    case GameKind::kSealedBidAuction: return AuctionBid{rng.UniformInt(0, engine.Valuation(player))};
    case GameKind::kBattleRoyale: {
      std::vector<std::optional<PlayerId>> options{std::nullopt};
      const bool self_ok = config.Get<RoyaleParams>().allow_self_target;
      for (PlayerId p : engine.alive_players()) {
        if (p != player || self_ok) options.emplace_back(p);
      }
      const auto pick = rng.UniformInt(0, static_cast<std::int64_t>(options.size()) - 1);
      return Shot{options[static_cast<std::size_t>(pick)]};
    }
    case GameKind::kPirateGame: {
      if (engine.step_kind() == StepKind::kPropose) {
        const int alive = engine.n_players() - engine.proposer();
        return PirateProposal{RandomComposition(engine.gold(), alive, rng)};
      }
      return PirateVote{rng.UniformInt(0, 1) == 1};
    }
  }
  throw Error(ErrorCode::kAgentFailure, "unknown game");
}

Action RotationBarAction(const GameEngine& engine, PlayerId player) {
  const int n = engine.n_players();
  const std::int64_t quota = FloorToInt(engine.config().Get<BarParams>().capacity_ratio * n);
  return BarDecision{(player + engine.round()) % n < quota ? BarChoice::kGo : BarChoice::kStay};
}

Action FixedStrategyAction(const AgentSpec& spec, const GameEngine& engine, PlayerId player) {
  const std::string& s = spec.strategy;
  if (s == "oracle") {
    RngStream rng = AgentStream(engine, player);
    return OracleAction(engine, player, spec.bid_fraction, rng);
  }
  if (s == "random") {
    RngStream rng = AgentStream(engine, player);
    return RandomAction(engine, player, rng);
  }
  if (s == "constant_bid") {
    const std::int64_t c = spec.value.value_or(0);
    if (engine.kind() == GameKind::kSealedBidAuction) return AuctionBid{std::min(c, engine.Valuation(player))};
    return Bid{std::min(c, engine.config().Get<DollarParams>().gold)};
  }
  if (s == "free_rider") return Contribution{0};
  if (s == "always_go") return BarDecision{BarChoice::kGo};
  if (s == "always_stay") return BarDecision{BarChoice::kStay};
  if (s == "rotation_bar") return RotationBarAction(engine, player);
  if (s == "truthful_bidder") return AuctionBid{engine.Valuation(player)};
  if (s == "zero_bidder") return AuctionBid{0};
  throw Error(ErrorCode::kConfigInvalid, "unknown strategy '" + s + "'");
}

std::unique_ptr<Agent> MakeLocalAgent(const AgentSpec& spec) {
  switch (spec.kind) {
    case AgentKind::kOracle: return std::make_unique<OracleAgent>(spec.bid_fraction);
    case AgentKind::kRandom: return std::make_unique<RandomAgent>();
    case AgentKind::kFixed: return std::make_unique<FixedAgent>(spec);
    case AgentKind::kScripted: return std::make_unique<ScriptedAgent>(spec.script);
    case AgentKind::kLlm:
    case AgentKind::kHuman: break;
  }
  throw Error(ErrorCode::kConfigInvalid,
              std::string(AgentKindName(spec.kind)) + " seats are not local agents");
}

std::string FormatAllocation(const std::vector<std::int64_t>& allocation) {
  std::string out = "(";
  for (std::size_t i = 0; i < allocation.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(allocation[i]);
  }
  return out + ")";
}

std::string ReferenceStrategyText(const MatchConfig& config) {
  const int n = config.n_players;
  std::ostringstream out;
  switch (config.kind()) {
    case GameKind::kGuessAverage: {
      const auto& p = config.Get<GuessParams>();
      const std::int64_t c = p.ratio < 1 ? p.min : p.ratio > 1 ? p.max : p.min + (p.max - p.min) / 2;
      out << "chosen_number " << c;
      break;
    }
    case GameKind::kElFarolBar: {
      const auto& p = config.Get<BarParams>();
      out << "go with probability " << RationalToString(p.capacity_ratio) << "\n"
          << "rotation: player i goes in round j iff (i + j) mod " << n << " < "
          << FloorToInt(p.capacity_ratio * n);
      break;
    }
    case GameKind::kDivideDollar: {
      const std::int64_t gold = config.Get<DollarParams>().gold;
      std::vector<std::int64_t> bids;
      for (int i = 0; i < n; ++i) bids.push_back(gold / n + (i < gold % n ? 1 : 0));
      out << "bids " << FormatAllocation(bids);
      break;
    }
    case GameKind::kPublicGoods: {
      const auto& p = config.Get<PublicGoodsParams>();
      out << (p.multiplier / n <= 1 ? "contribute 0" : "contribute the whole balance");
      break;
    }
    case GameKind::kDinersDilemma: out << "costly"; break;
    case GameKind::kSealedBidAuction:
      out << (config.Get<AuctionParams>().pricing == Pricing::kFirstPrice ? "bid 0 (first price)"
                                                                          : "bid the valuation (second price)");
      break;
    case GameKind::kBattleRoyale: {
      const auto& rates = config.Get<RoyaleParams>().hit_rates;
      std::vector<PlayerId> order(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
      std::stable_sort(order.begin(), order.end(), [&](PlayerId a, PlayerId b) {
        return rates[static_cast<std::size_t>(a)] < rates[static_cast<std::size_t>(b)];
      });
      out << "shoot the alive opponent with the highest hit rate; turn order";
      for (PlayerId p : order) out << " " << p + 1;
      break;
    }
    case GameKind::kPirateGame:
      out << FormatAllocation(OptimalPirateProposal(n, config.Get<PirateParams>().gold));
      break;
  }
  return out.str();
}

}  // namespace gamebench
