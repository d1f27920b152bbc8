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


#include "gamebench/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "gamebench/config.hpp"
#include "gamebench/error.hpp"
#include "gamebench/pirate.hpp"

namespace gamebench {

using nlohmann::json;

namespace {

const Rational kHundred = 100;

void RequireComplete(const MatchLog& log) {
  const MatchConfig& c = log.config;
  if (IsSimultaneous(c.kind())) {
    if (static_cast<int>(log.rounds.size()) != c.n_rounds) {
      throw Error(ErrorCode::kIncompleteLog, "log has " + std::to_string(log.rounds.size()) + " of " +
                                                 std::to_string(c.n_rounds) + " rounds");
    }
  } else if (!log.terminal) {
    throw Error(ErrorCode::kIncompleteLog, "sequential game log has no terminal marker");
  }
  if (log.rounds.empty()) throw Error(ErrorCode::kIncompleteLog, "log has no rounds");
}

template <typename Outcome>
const Outcome& OutcomeOf(const RoundRecord& record) {
  const auto* outcome = std::get_if<Outcome>(&record.outcome);
  if (!outcome) throw Error(ErrorCode::kMalformedLog, "round outcome does not match the game");
  return *outcome;
}

template <typename A>
const A& ActionOf(const RoundRecord& record, PlayerId player) {
  const auto it = record.actions.find(player);
  if (it == record.actions.end()) throw Error(ErrorCode::kIncompleteLog, "missing action in round record");
  const auto* action = std::get_if<A>(&it->second);
  if (!action) throw Error(ErrorCode::kMalformedLog, "action does not match the game");
  return *action;
}

Rational Mean(const std::vector<Rational>& values) {
  Rational sum = 0;
  for (const auto& v : values) sum += v;
  return values.empty() ? Rational(0) : Rational(sum / static_cast<std::int64_t>(values.size()));
}

ScoreReport Report(const MatchLog& log, Rational raw, Rational rescaled, std::vector<Rational> per_round) {
  ScoreReport report;
  report.game = log.config.kind();
  report.raw = std::move(raw);
  report.rescaled = ClampScore(rescaled);
  report.per_round = std::move(per_round);
  return report;
}

// Per-round mean over all players of f(record, player).
template <typename F>
std::vector<Rational> PerRoundPlayerMeans(const MatchLog& log, F f) {
  std::vector<Rational> out;
  const int n = log.config.n_players;
  for (const auto& record : log.rounds) {
    Rational sum = 0;
    for (PlayerId p = 0; p < n; ++p) sum += f(record, p);
    out.push_back(sum / n);
  }
  return out;
}

std::string FormatDouble(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rescaling

Rational ClampScore(const Rational& value) {
  if (value < 0) return 0;
  if (value > kHundred) return kHundred;
  return value;
}

Rational RescaleGuess(const Rational& s1, const GuessParams& params) {
  const Rational range = params.max - params.min;
  if (params.ratio < 1) return ClampScore((range - s1) / range * kHundred);
  if (params.ratio == 1) return ClampScore((1 - Abs(2 * s1 - range) / range) * kHundred);
  return ClampScore(s1 / range * kHundred);
}

Rational RescaleBar(const Rational& s2, const BarParams& params) {
  const Rational& r = params.capacity_ratio;
  const Rational worst = std::max(r, Rational(1 - r));
  return ClampScore((worst - s2) / worst * kHundred);
}

Rational RescaleDollar(const Rational& s3, const DollarParams& params) {
  const Rational g = params.gold;
  return ClampScore((g - s3) / g * kHundred);
}

Rational RescalePublicGoods(const Rational& s4, const PublicGoodsParams& params, int n_players) {
  const Rational t = params.endowment;
  if (params.multiplier / n_players <= 1) return ClampScore((t - s4) / t * kHundred);
  return ClampScore(s4 / t * kHundred);
}

Rational RescaleDiner(const Rational& s5) { return ClampScore((1 - s5) * kHundred); }

Rational RescaleAuction(const Rational& s6) { return ClampScore(s6 * kHundred); }

Rational RescaleRoyale(const Rational& s7) { return ClampScore(s7 * kHundred); }

Rational RescalePirate(const Rational& s8p, const Rational& s8v, std::int64_t gold) {
  const Rational two_g = 2 * gold;
  if (gold == 0) return ClampScore(50 + s8v * 50);
  return ClampScore((two_g - s8p) / two_g * 50 + s8v * 50);
}

// ---------------------------------------------------------------------------
// Raw scores

ScoreReport ScoreGuess(const MatchLog& log) {
  RequireComplete(log);
  const auto& params = log.config.Get<GuessParams>();
  auto per_round = PerRoundPlayerMeans(log, [&](const RoundRecord& r, PlayerId p) {
    return Rational(ActionOf<ChosenNumber>(r, p).value - params.min);
  });
  Rational raw = Mean(per_round);
  return Report(log, raw, RescaleGuess(raw, params), std::move(per_round));
}

ScoreReport ScoreBar(const MatchLog& log) {
  const auto& params = log.config.Get<BarParams>();
  if (params.info_mode == InfoMode::kExplicit) {
    throw Error(ErrorCode::kNotScored, "only the implicit bar setting is scored");
  }
  RequireComplete(log);
  std::vector<Rational> per_round;
  for (const auto& record : log.rounds) {
    const auto& o = OutcomeOf<BarOutcome>(record);
    per_round.push_back(Abs(Rational(o.goers, log.config.n_players) - params.capacity_ratio));
  }
  Rational raw = Mean(per_round);
  return Report(log, raw, RescaleBar(raw, params), std::move(per_round));
}

ScoreReport ScoreDollar(const MatchLog& log) {
  RequireComplete(log);
  const auto& params = log.config.Get<DollarParams>();
  std::vector<Rational> per_round;
  for (const auto& record : log.rounds) {
    std::int64_t sum = 0;
    for (PlayerId p = 0; p < log.config.n_players; ++p) sum += ActionOf<Bid>(record, p).amount;
    per_round.push_back(Abs(Rational(sum - params.gold)));
  }
  Rational raw = Mean(per_round);
  return Report(log, raw, RescaleDollar(raw, params), std::move(per_round));
}

ScoreReport ScorePublicGoods(const MatchLog& log) {
  RequireComplete(log);
  const auto& params = log.config.Get<PublicGoodsParams>();
  auto per_round = PerRoundPlayerMeans(
      log, [](const RoundRecord& r, PlayerId p) { return Rational(ActionOf<Contribution>(r, p).tokens); });
  Rational raw = Mean(per_round);
  return Report(log, raw, RescalePublicGoods(raw, params, log.config.n_players), std::move(per_round));
}

ScoreReport ScoreDiner(const MatchLog& log) {
  RequireComplete(log);
  auto per_round = PerRoundPlayerMeans(log, [](const RoundRecord& r, PlayerId p) {
    return Rational(ActionOf<Dish>(r, p).choice == DishChoice::kCheap ? 1 : 0);
  });
  Rational raw = Mean(per_round);
  return Report(log, raw, RescaleDiner(raw), std::move(per_round));
}

ScoreReport ScoreAuction(const MatchLog& log) {
  const auto& params = log.config.Get<AuctionParams>();
  if (params.pricing != Pricing::kFirstPrice) {
    throw Error(ErrorCode::kNotScored, "only first-price auctions are scored");
  }
  RequireComplete(log);
  auto per_round = PerRoundPlayerMeans(log, [](const RoundRecord& r, PlayerId p) {
    const auto& o = OutcomeOf<AuctionOutcome>(r);
    const std::int64_t v = o.valuations.at(static_cast<std::size_t>(p));
    return Rational(v - ActionOf<AuctionBid>(r, p).amount, v);
  });
  Rational raw = Mean(per_round);
  return Report(log, raw, RescaleAuction(raw), std::move(per_round));
}

ScoreReport ScoreRoyale(const MatchLog& log) {
  RequireComplete(log);
  const auto& rates = log.config.Get<RoyaleParams>().hit_rates;
  std::vector<Rational> per_round;
  for (const auto& record : log.rounds) {
    const auto& o = OutcomeOf<RoyaleOutcome>(record);
    bool correct = false;
    if (o.target && *o.target != o.actor) {
      Rational best = -1;
      for (PlayerId p : o.alive_before) {
        if (p != o.actor) best = std::max(best, rates.at(static_cast<std::size_t>(p)));
      }
      correct = rates.at(static_cast<std::size_t>(*o.target)) == best;
    }
    per_round.push_back(correct ? 1 : 0);
  }
  Rational raw = Mean(per_round);
  return Report(log, raw, RescaleRoyale(raw), std::move(per_round));
}

ScoreReport ScorePirate(const MatchLog& log) {
  RequireComplete(log);
  const int n = log.config.n_players;
  const std::int64_t gold = log.config.Get<PirateParams>().gold;
  std::vector<Rational> distances;
  std::vector<Rational> accuracy;
  std::int64_t correct_total = 0;
  std::optional<std::vector<PirateSubgame>> solution;
  for (const auto& record : log.rounds) {
    if (record.phase == StepKind::kPropose) {
      const auto& o = OutcomeOf<PirateProposalOutcome>(record);
      const int alive = n - o.proposer;
      distances.push_back(L1Distance(o.allocation, OptimalPirateProposal(alive, gold)));
      continue;
    }
    const auto& o = OutcomeOf<PirateVoteOutcome>(record);
    const int alive = n - o.proposer;
    const bool closed_form = gold >= PirateBribeCount(alive);
    if (!closed_form && !solution) solution = SolvePirateGame(n, gold);
    std::int64_t correct = 0;
    for (const auto& [voter, action] : record.actions) {
      const int offset = voter - o.proposer;
      const std::int64_t offered = o.allocation.at(static_cast<std::size_t>(offset));
      const bool expected = closed_form ? OptimalPirateVote(offset, offered)
                                        : BackwardInductionVote(*solution, alive, offset, offered);
      if (std::get<PirateVote>(action).accept == expected) ++correct;
    }
    correct_total += correct;
    accuracy.push_back(Rational(correct, alive - 1));
  }
  const auto k = static_cast<std::int64_t>(distances.size());
  if (k == 0) throw Error(ErrorCode::kIncompleteLog, "pirate log has no proposals");
  const Rational s8p = Mean(distances);
  const Rational s8v = Rational(2 * correct_total, k * (2 * n - k - 1));
  ScoreReport report = Report(log, s8p, RescalePirate(s8p, s8v, gold), std::move(distances));
  report.per_round_votes = std::move(accuracy);
  report.components = {{"S8P", s8p}, {"S8V", s8v}};
  return report;
}

bool IsScored(const MatchConfig& config) {
  switch (config.kind()) {
    case GameKind::kElFarolBar: return config.Get<BarParams>().info_mode == InfoMode::kImplicit;
    case GameKind::kSealedBidAuction: return config.Get<AuctionParams>().pricing == Pricing::kFirstPrice;
    default: return true;
  }
}

ScoreReport ScoreMatch(const MatchLog& log) {
  switch (log.config.kind()) {
    case GameKind::kGuessAverage: return ScoreGuess(log);
    case GameKind::kElFarolBar: return ScoreBar(log);
    case GameKind::kDivideDollar: return ScoreDollar(log);
    case GameKind::kPublicGoods: return ScorePublicGoods(log);
    case GameKind::kDinersDilemma: return ScoreDiner(log);
    case GameKind::kSealedBidAuction: return ScoreAuction(log);
    case GameKind::kBattleRoyale: return ScoreRoyale(log);
    case GameKind::kPirateGame: return ScorePirate(log);
  }
  throw Error(ErrorCode::kNotScored, "unknown game");
}

// ---------------------------------------------------------------------------
// Serialization

json ScoreReportToJson(const ScoreReport& report) {
  json per_round = json::array();
  for (const auto& v : report.per_round) per_round.push_back(RationalToString(v));
  json j{{"game", GameKindName(report.game)},
         {"raw", RationalToString(report.raw)},
         {"rescaled", RationalToString(report.rescaled)},
         {"rescaled_decimal", FormatDecimal(report.rescaled, 2)},
         {"per_round", std::move(per_round)},
         {"run_id", report.run_id}};
  if (!report.per_round_votes.empty()) {
    json votes = json::array();
    for (const auto& v : report.per_round_votes) votes.push_back(RationalToString(v));
    j["per_round_votes"] = std::move(votes);
  }
  if (!report.components.empty()) {
    json components = json::object();
    for (const auto& [key, value] : report.components) components[key] = RationalToString(value);
    j["components"] = std::move(components);
  }
  return j;
}

ScoreReport ScoreReportFromJson(const json& j) {
  try {
    ScoreReport report;
    report.game = ParseGameKind(j.at("game").get<std::string>());
    report.raw = RationalFromJson(j.at("raw"));
    report.rescaled = RationalFromJson(j.at("rescaled"));
    for (const auto& v : j.at("per_round")) report.per_round.push_back(RationalFromJson(v));
    if (j.contains("per_round_votes")) {
      for (const auto& v : j.at("per_round_votes")) report.per_round_votes.push_back(RationalFromJson(v));
    }
    if (j.contains("components")) {
      for (const auto& [key, value] : j.at("components").items()) report.components[key] = RationalFromJson(value);
    }
    report.run_id = j.value("run_id", "");
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedLog, std::string("score report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Aggregation

Aggregate AggregateScores(std::span<const double> scores) {
  Aggregate out;
  out.runs = static_cast<int>(scores.size());
  if (scores.empty()) {
    out.degenerate = true;
    return out;
  }
  out.mean = std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
  if (scores.size() < 2) {
    out.degenerate = true;
    return out;
  }
  double ss = 0;
  for (double s : scores) ss += (s - out.mean) * (s - out.mean);
  out.std = std::sqrt(ss / static_cast<double>(scores.size() - 1));
  return out;
}

std::vector<LeaderboardRow> BuildLeaderboard(const std::vector<std::pair<std::string, ScoreReport>>& scored_runs) {
  std::vector<std::string> models;
  std::map<std::string, std::map<GameKind, std::vector<double>>> by_model;
  for (const auto& [model, report] : scored_runs) {
    if (!by_model.count(model)) models.push_back(model);
    by_model[model][report.game].push_back(ToDouble(report.rescaled));
  }
  std::vector<LeaderboardRow> rows;
  for (const auto& model : models) {
    const auto& games = by_model[model];
    std::vector<double> means;
    for (GameKind kind : kAllGames) {
      const auto it = games.find(kind);
      if (it == games.end()) continue;
      Aggregate stats = AggregateScores(it->second);
      means.push_back(stats.mean);
      rows.push_back({model, std::string(GameKindName(kind)), stats});
    }
    if (means.size() == kAllGames.size()) rows.push_back({model, "overall", AggregateScores(means)});
  }
  return rows;
}

std::string LeaderboardCsv(const std::vector<LeaderboardRow>& rows) {
  std::string out = "model,game,mean,std,runs\n";
  for (const auto& row : rows) {
    out += row.model + "," + row.game + "," + FormatDouble(row.stats.mean) + "," + FormatDouble(row.stats.std) +
           "," + std::to_string(row.stats.runs) + "\n";
  }
  return out;
}

}  // namespace gamebench
