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

#include "gamebench/games.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gamebench/config.hpp"
#include "gamebench/detail/overloaded.hpp"
#include "gamebench/error.hpp"
#include "gamebench/rng.hpp"

namespace gamebench {

using detail::Overloaded;

// ---------------------------------------------------------------------------
// Resolution

GuessOutcome ResolveGuess(std::span<const std::int64_t> choices, const GuessParams& params) {
  GuessOutcome out;
  const auto n = static_cast<std::int64_t>(choices.size());
  const std::int64_t sum = std::accumulate(choices.begin(), choices.end(), std::int64_t{0});
  out.average = Rational(sum, n);
  out.target = params.ratio * out.average;
  Rational best = -1;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const Rational distance = Abs(Rational(choices[i]) - out.target);
    if (best < 0 || distance < best) {
      best = distance;
      out.winners.clear();
    }
    if (distance == best) out.winners.push_back(static_cast<PlayerId>(i));
  }
  std::set<std::int64_t> numbers;
  for (PlayerId w : out.winners) numbers.insert(choices[static_cast<std::size_t>(w)]);
  out.winning_numbers.assign(numbers.begin(), numbers.end());
  return out;
}

BarOutcome ResolveBar(std::span<const BarChoice> choices, const BarParams& params) {
  BarOutcome out;
  const int n = static_cast<int>(choices.size());
  out.goers = static_cast<int>(std::count(choices.begin(), choices.end(), BarChoice::kGo));
  out.stayers = n - out.goers;
  out.crowded = Rational(out.goers, n) > params.capacity_ratio;
  const Rational go_utility = out.crowded ? params.u_go_crowded : params.u_go_uncrowded;
  for (BarChoice c : choices) out.utilities.push_back(c == BarChoice::kGo ? go_utility : params.u_home);
  return out;
}

DollarOutcome ResolveDollar(std::span<const std::int64_t> bids, const DollarParams& params) {
  DollarOutcome out;
  out.total = std::accumulate(bids.begin(), bids.end(), std::int64_t{0});
  out.exceeded = out.total > params.gold;
  for (std::int64_t b : bids) out.payouts.push_back(out.exceeded ? 0 : b);
  return out;
}

PublicGoodsOutcome ResolvePublicGoods(std::span<const std::int64_t> contributions,
                                      std::span<const Rational> balances,
                                      const PublicGoodsParams& params) {
  PublicGoodsOutcome out;
  const auto n = static_cast<std::int64_t>(contributions.size());
  out.contributions.assign(contributions.begin(), contributions.end());
  out.pot = std::accumulate(contributions.begin(), contributions.end(), std::int64_t{0});
  out.gain = params.multiplier * out.pot / n;
  for (std::size_t i = 0; i < contributions.size(); ++i) {
    Rational next = balances[i] - contributions[i] + out.gain;
    if (params.fresh_endowment) next += params.endowment;
    out.balances_after.push_back(next);
  }
  return out;
}

DinerOutcome ResolveDiner(std::span<const DishChoice> choices, const DinerParams& params) {
  DinerOutcome out;
  const int n = static_cast<int>(choices.size());
  out.costly = static_cast<int>(std::count(choices.begin(), choices.end(), DishChoice::kCostly));
  out.cheap = n - out.costly;
  out.total_cost = params.price_costly * out.costly + params.price_cheap * out.cheap;
  out.share = out.total_cost / n;
  for (DishChoice c : choices) {
    const Rational& utility = c == DishChoice::kCostly ? params.utility_costly : params.utility_cheap;
    out.utilities.push_back(utility - out.share);
  }
  return out;
}

AuctionOutcome ResolveAuction(std::span<const std::int64_t> bids,
                              std::span<const std::int64_t> valuations, const AuctionParams& params) {
  AuctionOutcome out;
  out.valuations.assign(valuations.begin(), valuations.end());
  // max_element returns the first maximum, which is the lowest player id.
  const auto top = std::max_element(bids.begin(), bids.end());
  out.winner = static_cast<PlayerId>(top - bids.begin());
  out.winning_bid = *top;
  std::int64_t second = 0;
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (static_cast<PlayerId>(i) != out.winner) second = std::max(second, bids[i]);
  }
  out.price = params.pricing == Pricing::kFirstPrice ? out.winning_bid : second;
  out.utilities.assign(bids.size(), 0);
  out.utilities[static_cast<std::size_t>(out.winner)] =
      valuations[static_cast<std::size_t>(out.winner)] - out.price;
  return out;
}

RoyaleOutcome ResolveShot(std::span<const PlayerId> alive, PlayerId actor, const Shot& shot,
                          const RoyaleParams& params, std::uint64_t draw53) {
  RoyaleOutcome out;
  out.actor = actor;
  out.target = shot.target;
  out.alive_before.assign(alive.begin(), alive.end());
  std::sort(out.alive_before.begin(), out.alive_before.end());
  out.alive_after = out.alive_before;
  if (shot.target) {
    out.hit = DrawBelow(draw53, params.hit_rates.at(static_cast<std::size_t>(actor)));
    if (out.hit) std::erase(out.alive_after, *shot.target);
  }
  return out;
}

PirateVoteOutcome ResolvePirateVote(PlayerId proposer, std::span<const std::int64_t> allocation,
                                    std::span<const bool> votes, int n_players) {
  PirateVoteOutcome out;
  out.proposer = proposer;
  out.allocation.assign(allocation.begin(), allocation.end());
  out.alive = static_cast<int>(votes.size()) + 1;
  out.accepts = 1 + static_cast<int>(std::count(votes.begin(), votes.end(), true));
  out.accepted = 2 * out.accepts >= out.alive;
  const std::int64_t gold = std::accumulate(allocation.begin(), allocation.end(), std::int64_t{0});
  if (out.accepted) {
    out.payouts.assign(static_cast<std::size_t>(n_players), 0);
    for (std::size_t i = 0; i < allocation.size(); ++i) {
      out.payouts[static_cast<std::size_t>(proposer) + i] = allocation[i];
    }
  } else {
    out.eliminated = proposer;
    if (out.alive - 1 == 1) {
      out.payouts.assign(static_cast<std::size_t>(n_players), 0);
      out.payouts[static_cast<std::size_t>(n_players - 1)] = gold;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Names

std::string_view IllegalReasonName(IllegalReason reason) {
  switch (reason) {
    case IllegalReason::kNone: return "None";
    case IllegalReason::kGameOver: return "GameOver";
    case IllegalReason::kNotYourTurn: return "NotYourTurn";
    case IllegalReason::kWrongActionType: return "WrongActionType";
    case IllegalReason::kOutOfRange: return "OutOfRange";
    case IllegalReason::kExceedsBalance: return "ExceedsBalance";
    case IllegalReason::kExceedsValuation: return "ExceedsValuation";
    case IllegalReason::kSumMismatch: return "SumMismatch";
    case IllegalReason::kNegativeAllocation: return "NegativeAllocation";
    case IllegalReason::kWrongLength: return "WrongLength";
    case IllegalReason::kTargetNotAlive: return "TargetNotAlive";
    case IllegalReason::kTargetIsSelf: return "TargetIsSelf";
  }
  return "Unknown";
}

std::string_view StepKindName(StepKind kind) {
  switch (kind) {
    case StepKind::kSimultaneous: return "simultaneous";
    case StepKind::kShoot: return "shoot";
    case StepKind::kPropose: return "propose";
    case StepKind::kVote: return "vote";
  }
  return "unknown";
}

StepKind ParseStepKind(std::string_view name) {
  for (auto k : {StepKind::kSimultaneous, StepKind::kShoot, StepKind::kPropose, StepKind::kVote}) {
    if (StepKindName(k) == name) return k;
  }
  throw Error(ErrorCode::kMalformedLog, "unknown phase '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// GameEngine

namespace {

LegalCheck Illegal(IllegalReason reason, std::string message) { return {reason, std::move(message)}; }

LegalCheck CheckRange(std::int64_t value, std::int64_t lo, std::int64_t hi, IllegalReason reason,
                      std::string_view what) {
  if (value < lo || value > hi) {
    return Illegal(reason, std::string(what) + " must be an integer between " + std::to_string(lo) + " and " +
                               std::to_string(hi) + ", got " + std::to_string(value));
  }
  return {};
}

}  // namespace

GameEngine::GameEngine(MatchConfig config) : config_(std::move(config)) {
  RequireValid(config_);
  const auto n = static_cast<std::size_t>(config_.n_players);
  alive_.assign(n, true);
  if (kind() == GameKind::kPublicGoods) {
    balances_.assign(n, Rational(config_.Get<PublicGoodsParams>().endowment));
  }
  if (kind() == GameKind::kBattleRoyale) {
    const auto& rates = config_.Get<RoyaleParams>().hit_rates;
    royale_order_.resize(n);
    std::iota(royale_order_.begin(), royale_order_.end(), 0);
    std::stable_sort(royale_order_.begin(), royale_order_.end(), [&](PlayerId a, PlayerId b) {
      return rates[static_cast<std::size_t>(a)] < rates[static_cast<std::size_t>(b)];
    });
  }
}

StepKind GameEngine::step_kind() const {
  switch (kind()) {
    case GameKind::kBattleRoyale: return StepKind::kShoot;
    case GameKind::kPirateGame: return proposal_ ? StepKind::kVote : StepKind::kPropose;
    default: return StepKind::kSimultaneous;
  }
}

std::vector<PlayerId> GameEngine::alive_players() const {
  std::vector<PlayerId> out;
  for (PlayerId p = 0; p < n_players(); ++p) {
    if (IsAlive(p)) out.push_back(p);
  }
  return out;
}

PlayerId GameEngine::NextRoyaleActor() const {
  const std::size_t n = royale_order_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const PlayerId p = royale_order_[(royale_cursor_ + k) % n];
    if (IsAlive(p)) return p;
  }
  return -1;
}

std::vector<PlayerId> GameEngine::RoyaleQueue() const {
  std::vector<PlayerId> out;
  const std::size_t n = royale_order_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const PlayerId p = royale_order_[(royale_cursor_ + k) % n];
    if (IsAlive(p)) out.push_back(p);
  }
  return out;
}

const Rational& GameEngine::HitRate(PlayerId player) const {
  return config_.Get<RoyaleParams>().hit_rates.at(static_cast<std::size_t>(player));
}

std::vector<PlayerId> GameEngine::pending_players() const {
  if (terminal_) return {};
  switch (kind()) {
    case GameKind::kBattleRoyale: return {NextRoyaleActor()};
    case GameKind::kPirateGame: {
      if (!proposal_) return {proposer_};
      std::vector<PlayerId> voters;
      for (PlayerId p = proposer_ + 1; p < n_players(); ++p) voters.push_back(p);
      return voters;
    }
    default: {
      std::vector<PlayerId> all(static_cast<std::size_t>(n_players()));
      std::iota(all.begin(), all.end(), 0);
      return all;
    }
  }
}

std::int64_t GameEngine::ContributionCap(PlayerId player) const {
  return FloorToInt(balances_.at(static_cast<std::size_t>(player)));
}

std::int64_t GameEngine::ValuationAt(int round, PlayerId player) const {
  const auto& params = config_.Get<AuctionParams>();
  RngStream stream(config_.seed, kPurposeValuation, round, player);
  return stream.UniformInt(1, params.valuation_max);
}

std::int64_t GameEngine::gold() const { return config_.Get<PirateParams>().gold; }

LegalCheck GameEngine::Legal(PlayerId player, const Action& action) const {
  if (terminal_) return Illegal(IllegalReason::kGameOver, "the game is over");
  if (player < 0 || player >= n_players()) return Illegal(IllegalReason::kNotYourTurn, "unknown player");
  const auto pending = pending_players();
  if (std::find(pending.begin(), pending.end(), player) == pending.end()) {
    return Illegal(IllegalReason::kNotYourTurn, "player " + std::to_string(player + 1) + " is not to move");
  }
  return LegalForGame(player, action);
}

LegalCheck GameEngine::LegalForGame(PlayerId player, const Action& action) const {
  const auto wrong = [&](std::string_view expected) {
    return Illegal(IllegalReason::kWrongActionType,
                   "expected " + std::string(expected) + ", got " + DescribeAction(action));
  };
  switch (kind()) {
    case GameKind::kGuessAverage: {
      const auto* a = std::get_if<ChosenNumber>(&action);
      if (!a) return wrong("a chosen number");
      const auto& p = config_.Get<GuessParams>();
      return CheckRange(a->value, p.min, p.max, IllegalReason::kOutOfRange, "chosen_number");
    }
    case GameKind::kElFarolBar:
      return std::holds_alternative<BarDecision>(action) ? LegalCheck{} : wrong("a go/stay decision");
    case GameKind::kDivideDollar: {
      const auto* a = std::get_if<Bid>(&action);
      if (!a) return wrong("a bid");
      return CheckRange(a->amount, 0, config_.Get<DollarParams>().gold, IllegalReason::kOutOfRange, "bid_amount");
    }
    case GameKind::kPublicGoods: {
      const auto* a = std::get_if<Contribution>(&action);
      if (!a) return wrong("a contribution");
      return CheckRange(a->tokens, 0, ContributionCap(player), IllegalReason::kExceedsBalance,
                        "tokens_contributed");
    }
    case GameKind::kDinersDilemma:
      return std::holds_alternative<Dish>(action) ? LegalCheck{} : wrong("a dish choice");
    case GameKind::kSealedBidAuction: {
      const auto* a = std::get_if<AuctionBid>(&action);
      if (!a) return wrong("a bid");
      return CheckRange(a->amount, 0, Valuation(player), IllegalReason::kExceedsValuation, "bid");
    }
    case GameKind::kBattleRoyale: {
      const auto* a = std::get_if<Shot>(&action);
      if (!a) return wrong("a shot");
      if (!a->target) return {};
      const PlayerId t = *a->target;
      if (t < 0 || t >= n_players() || !IsAlive(t)) {
        return Illegal(IllegalReason::kTargetNotAlive, "target player " + std::to_string(t + 1) + " is not alive");
      }
      if (t == player && !config_.Get<RoyaleParams>().allow_self_target) {
        return Illegal(IllegalReason::kTargetIsSelf, "cannot target yourself");
      }
      return {};
    }
    case GameKind::kPirateGame: {
      if (!proposal_) {
        const auto* a = std::get_if<PirateProposal>(&action);
        if (!a) return wrong("a proposal");
        const auto alive = static_cast<std::size_t>(n_players() - proposer_);
        if (a->allocation.size() != alive) {
          return Illegal(IllegalReason::kWrongLength, "proposal must list " + std::to_string(alive) +
                                                          " pirates, got " + std::to_string(a->allocation.size()));
        }
        std::int64_t sum = 0;
        for (std::int64_t g : a->allocation) {
          if (g < 0) return Illegal(IllegalReason::kNegativeAllocation, "allocations must be non-negative");
          sum += g;
        }
        if (sum != gold()) {
          return Illegal(IllegalReason::kSumMismatch,
                         "proposal sums to " + std::to_string(sum) + " but must sum to " + std::to_string(gold()));
        }
        return {};
      }
      return std::holds_alternative<PirateVote>(action) ? LegalCheck{} : wrong("an accept/reject vote");
    }
  }
  return wrong("a known action");
}

const RoundRecord& GameEngine::Step(const std::map<PlayerId, Action>& actions) {
  if (terminal_) throw Error(ErrorCode::kGameOver, "the game is over");
  const auto pending = pending_players();
  if (actions.size() != pending.size() ||
      !std::all_of(pending.begin(), pending.end(), [&](PlayerId p) { return actions.count(p) == 1; })) {
    throw Error(ErrorCode::kNotYourTurn, "step needs exactly one action from each pending player");
  }
  for (const auto& [player, action] : actions) {
    if (LegalCheck check = LegalForGame(player, action); !check) {
      throw Error(ErrorCode::kIllegalAction, "player " + std::to_string(player + 1) + ": " +
                                                 std::string(IllegalReasonName(check.reason)) + ": " + check.message);
    }
  }
  RoundRecord record;
  record.round = round_;
  record.phase = step_kind();
  record.actions = actions;
  switch (kind()) {
    case GameKind::kBattleRoyale: record.outcome = ResolveRoyaleTurn(actions); break;
    case GameKind::kPirateGame: record.outcome = ResolvePirateStep(actions); break;
    default: record.outcome = ResolveSimultaneous(actions); break;
  }
  history_.push_back(std::move(record));
  return history_.back();
}

void GameEngine::MarkCoerced(PlayerId player) {
  if (history_.empty()) return;
  auto& coerced = history_.back().coerced;
  if (std::find(coerced.begin(), coerced.end(), player) == coerced.end()) coerced.push_back(player);
  std::sort(coerced.begin(), coerced.end());
}

RoundOutcome GameEngine::ResolveSimultaneous(const std::map<PlayerId, Action>& actions) {
  const auto n = static_cast<std::size_t>(n_players());
  RoundOutcome outcome;
  switch (kind()) {
    case GameKind::kGuessAverage: {
      std::vector<std::int64_t> v(n);
      for (const auto& [p, a] : actions) v[static_cast<std::size_t>(p)] = std::get<ChosenNumber>(a).value;
      outcome = ResolveGuess(v, config_.Get<GuessParams>());
      break;
    }
    case GameKind::kElFarolBar: {
      std::vector<BarChoice> v(n);
      for (const auto& [p, a] : actions) v[static_cast<std::size_t>(p)] = std::get<BarDecision>(a).choice;
      outcome = ResolveBar(v, config_.Get<BarParams>());
      break;
    }
    case GameKind::kDivideDollar: {
      std::vector<std::int64_t> v(n);
      for (const auto& [p, a] : actions) v[static_cast<std::size_t>(p)] = std::get<Bid>(a).amount;
      outcome = ResolveDollar(v, config_.Get<DollarParams>());
      break;
    }
    case GameKind::kPublicGoods: {
      std::vector<std::int64_t> v(n);
      for (const auto& [p, a] : actions) v[static_cast<std::size_t>(p)] = std::get<Contribution>(a).tokens;
      auto resolved = ResolvePublicGoods(v, balances_, config_.Get<PublicGoodsParams>());
      balances_ = resolved.balances_after;
      outcome = std::move(resolved);
      break;
    }
    case GameKind::kDinersDilemma: {
      std::vector<DishChoice> v(n);
      for (const auto& [p, a] : actions) v[static_cast<std::size_t>(p)] = std::get<Dish>(a).choice;
      outcome = ResolveDiner(v, config_.Get<DinerParams>());
      break;
    }
    case GameKind::kSealedBidAuction: {
      std::vector<std::int64_t> bids(n);
      std::vector<std::int64_t> valuations(n);
      for (const auto& [p, a] : actions) {
        bids[static_cast<std::size_t>(p)] = std::get<AuctionBid>(a).amount;
        valuations[static_cast<std::size_t>(p)] = Valuation(p);
      }
      outcome = ResolveAuction(bids, valuations, config_.Get<AuctionParams>());
      break;
    }
    default: throw Error(ErrorCode::kIllegalAction, "not a simultaneous game");
  }
  ++round_;
  if (round_ >= config_.n_rounds) terminal_ = true;
  return outcome;
}

RoundOutcome GameEngine::ResolveRoyaleTurn(const std::map<PlayerId, Action>& actions) {
  const auto& [actor, action] = *actions.begin();
  const auto& params = config_.Get<RoyaleParams>();
  RngStream stream(config_.seed, kPurposeShot, round_, actor);
  RoyaleOutcome outcome = ResolveShot(alive_players(), actor, std::get<Shot>(action), params, stream.NextU53());
  if (outcome.hit) alive_[static_cast<std::size_t>(*outcome.target)] = false;
  // Advance the cursor past the actor.
  const auto pos = static_cast<std::size_t>(
      std::find(royale_order_.begin(), royale_order_.end(), actor) - royale_order_.begin());
  royale_cursor_ = (pos + 1) % royale_order_.size();
  ++round_;
  if (outcome.alive_after.size() <= 1 || round_ >= params.max_turns) terminal_ = true;
  return outcome;
}

RoundOutcome GameEngine::ResolvePirateStep(const std::map<PlayerId, Action>& actions) {
  if (!proposal_) {
    proposal_ = std::get<PirateProposal>(actions.at(proposer_));
    return PirateProposalOutcome{proposer_, proposal_->allocation};
  }
  std::vector<bool> votes;
  for (const auto& [p, a] : actions) votes.push_back(std::get<PirateVote>(a).accept);
  // std::vector<bool> is not contiguous; copy into a plain buffer for span.
  std::unique_ptr<bool[]> buffer(new bool[votes.size()]);
  std::copy(votes.begin(), votes.end(), buffer.get());
  PirateVoteOutcome outcome = ResolvePirateVote(proposer_, proposal_->allocation,
                                                std::span<const bool>(buffer.get(), votes.size()), n_players());
  proposal_.reset();
  if (outcome.accepted) {
    terminal_ = true;
  } else {
    alive_[static_cast<std::size_t>(proposer_)] = false;
    ++proposer_;
    ++round_;
    if (proposer_ == n_players() - 1) terminal_ = true;
  }
  if (terminal_) payouts_ = outcome.payouts;
  return outcome;
}

}  // namespace gamebench
