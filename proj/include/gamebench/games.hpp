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

#ifndef GAMEBENCH_GAMES_HPP_
#define GAMEBENCH_GAMES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gamebench/action.hpp"
#include "gamebench/outcome.hpp"
#include "gamebench/types.hpp"

namespace gamebench {

// ---------------------------------------------------------------------------
// Pure round resolution. Inputs are indexed by player id and assumed legal.

GuessOutcome ResolveGuess(std::span<const std::int64_t> choices, const GuessParams& params);

// Goers earn u_go_uncrowded when goers / N <= R, else u_go_crowded; stayers
// earn u_home.
BarOutcome ResolveBar(std::span<const BarChoice> choices, const BarParams& params);

DollarOutcome ResolveDollar(std::span<const std::int64_t> bids, const DollarParams& params);

// balance' = balance - contribution + R * pot / N (+ endowment when
// fresh_endowment is set).
PublicGoodsOutcome ResolvePublicGoods(std::span<const std::int64_t> contributions,
                                      std::span<const Rational> balances,
                                      const PublicGoodsParams& params);

DinerOutcome ResolveDiner(std::span<const DishChoice> choices, const DinerParams& params);

// Highest bid wins; ties go to the lowest player id.
AuctionOutcome ResolveAuction(std::span<const std::int64_t> bids,
                              std::span<const std::int64_t> valuations, const AuctionParams& params);

// `draw53` is a uniform integer in [0, 2^53); the shot hits iff
// draw53 / 2^53 < hit rate of the actor.
RoyaleOutcome ResolveShot(std::span<const PlayerId> alive, PlayerId actor, const Shot& shot,
                          const RoyaleParams& params, std::uint64_t draw53);

// `votes` holds one entry per alive non-proposer in seniority order. The
// proposer's accept is implicit. Accepted iff 2 * accepts >= alive.
PirateVoteOutcome ResolvePirateVote(PlayerId proposer, std::span<const std::int64_t> allocation,
                                    std::span<const bool> votes, int n_players);

// ---------------------------------------------------------------------------
// Legality

enum class IllegalReason {
  kNone,
  kGameOver,
  kNotYourTurn,
  kWrongActionType,
  kOutOfRange,
  kExceedsBalance,
  kExceedsValuation,
  kSumMismatch,
  kNegativeAllocation,
  kWrongLength,
  kTargetNotAlive,
  kTargetIsSelf,
};

std::string_view IllegalReasonName(IllegalReason reason);

struct LegalCheck {
  IllegalReason reason = IllegalReason::kNone;
  std::string message;
  bool ok() const { return reason == IllegalReason::kNone; }
  explicit operator bool() const { return ok(); }
};

enum class StepKind { kSimultaneous, kShoot, kPropose, kVote };
std::string_view StepKindName(StepKind kind);
StepKind ParseStepKind(std::string_view name);

struct RoundRecord {
  int round = 0;
  StepKind phase = StepKind::kSimultaneous;
  std::map<PlayerId, Action> actions;
  RoundOutcome outcome;
  std::vector<PlayerId> coerced;  // seats whose action was substituted by the fallback policy
  bool operator==(const RoundRecord&) const = default;
};

// ---------------------------------------------------------------------------
// GameEngine owns the state of one match and advances it one step at a time.
//
// Simultaneous games: each step collects one action from every player and
// resolves a round; the game ends after n_rounds.
// Battle Royale: each step is one shot by the next alive player in ascending
// hit-rate order.
// Pirate Game: a propose step (most senior alive pirate) is followed by a vote
// step (every other alive pirate); rejection throws the proposer overboard.
class GameEngine {
 public:
  // Throws Error(kConfigInvalid) when the config fails validation.
  explicit GameEngine(MatchConfig config);

  const MatchConfig& config() const { return config_; }
  GameKind kind() const { return config_.kind(); }
  int n_players() const { return config_.n_players; }

  bool terminal() const { return terminal_; }
  StepKind step_kind() const;
  // 0-based index of the round (simultaneous), turn (royale) or proposal
  // (pirate) currently being played.
  int round() const { return round_; }
  std::vector<PlayerId> pending_players() const;

  bool IsAlive(PlayerId player) const { return alive_.at(static_cast<std::size_t>(player)); }
  std::vector<PlayerId> alive_players() const;

  LegalCheck Legal(PlayerId player, const Action& action) const;

  // Applies one step. `actions` must contain exactly the pending players.
  // Throws Error(kIllegalAction) / Error(kNotYourTurn) / Error(kGameOver)
  // without mutating state.
  const RoundRecord& Step(const std::map<PlayerId, Action>& actions);

  const std::vector<RoundRecord>& history() const { return history_; }
  void MarkCoerced(PlayerId player);  // annotates the most recent record

  // Public Goods balances before the current round.
  const std::vector<Rational>& balances() const { return balances_; }
  // Largest legal contribution this round.
  std::int64_t ContributionCap(PlayerId player) const;

  // Sealed-bid auction valuation for the current round / any round.
  std::int64_t Valuation(PlayerId player) const { return ValuationAt(round_, player); }
  std::int64_t ValuationAt(int round, PlayerId player) const;

  // Battle Royale: alive players in shooting order starting with the next
  // actor, and the fixed ascending hit-rate order of all players.
  std::vector<PlayerId> RoyaleQueue() const;
  const std::vector<PlayerId>& RoyaleOrder() const { return royale_order_; }
  const Rational& HitRate(PlayerId player) const;

  // Pirate Game.
  PlayerId proposer() const { return proposer_; }
  const std::optional<PirateProposal>& pending_proposal() const { return proposal_; }
  std::int64_t gold() const;
  // Final gold per player when terminal.
  const std::vector<std::int64_t>& payouts() const { return payouts_; }

 private:
  LegalCheck LegalForGame(PlayerId player, const Action& action) const;
  RoundOutcome ResolveSimultaneous(const std::map<PlayerId, Action>& actions);
  RoundOutcome ResolveRoyaleTurn(const std::map<PlayerId, Action>& actions);
  RoundOutcome ResolvePirateStep(const std::map<PlayerId, Action>& actions);
  PlayerId NextRoyaleActor() const;

  MatchConfig config_;
  int round_ = 0;
  bool terminal_ = false;
  std::vector<bool> alive_;
  std::vector<RoundRecord> history_;

  std::vector<Rational> balances_;

  std::vector<PlayerId> royale_order_;
  std::size_t royale_cursor_ = 0;  // position in royale_order_ to scan from

  PlayerId proposer_ = 0;
  std::optional<PirateProposal> proposal_;
  std::vector<std::int64_t> payouts_;
};

}  // namespace gamebench

#endif  // GAMEBENCH_GAMES_HPP_
