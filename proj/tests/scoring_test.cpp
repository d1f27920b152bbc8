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


#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "gamebench/agents.hpp"
#include "gamebench/config.hpp"
#include "gamebench/error.hpp"
#include "gamebench/scoring.hpp"
#include "test_support.hpp"

namespace gamebench {
namespace {

using testing::Config;
using testing::OracleSeat;
using testing::RandomSeat;

template <typename Pick>
MatchLog Play(const MatchConfig& config, Pick pick) {
  GameEngine engine(config);
  testing::PlayOut(engine, pick);
  return LogFromEngine(engine);
}

Action RandomMove(const GameEngine& engine, PlayerId player) {
  RngStream rng = AgentStream(engine, player);
  return RandomAction(engine, player, rng);
}

Action OracleMove(const GameEngine& engine, PlayerId player) {
  RngStream rng = AgentStream(engine, player);
  return OracleAction(engine, player, 0, rng);
}

double Rescaled(const MatchLog& log) { return ToDouble(ScoreMatch(log).rescaled); }

// ---- Anchors ----

TEST(Rescale, DinerAnchor) { EXPECT_EQ(RescaleDiner(Rational(96, 100)), 4); }

TEST(Rescale, AuctionAnchor) { EXPECT_EQ(RescaleAuction(Rational(146, 1000)), Rational(146, 10)); }

TEST(Rescale, GuessAnchor) { EXPECT_EQ(RescaleGuess(Rational(3459, 100), GuessParams{}), Rational(6541, 100)); }

TEST(Rescale, GuessBranches) {
  GuessParams p;
  p.ratio = 1;
  EXPECT_EQ(RescaleGuess(50, p), 100);
  EXPECT_EQ(RescaleGuess(0, p), 0);
  p.ratio = Rational(3, 2);
  EXPECT_EQ(RescaleGuess(100, p), 100);
}

TEST(Rescale, ClampsToUnitRange) {
  EXPECT_EQ(RescaleDollar(900, DollarParams{}), 0);
  EXPECT_EQ(ClampScore(-3), 0);
  EXPECT_EQ(ClampScore(130), 100);
  PublicGoodsParams p;
  EXPECT_EQ(RescalePublicGoods(-5, p, 10), 100);
}

// ---- Guess ----

double GuessOracle(const MatchLog& log) {
  const auto& p = log.config.Get<GuessParams>();
  double sum = 0;
  int count = 0;
  for (const auto& r : log.rounds) {
    for (const auto& [player, action] : r.actions) {
      sum += static_cast<double>(std::get<ChosenNumber>(action).value - p.min);
      ++count;
    }
  }
  const double s1 = sum / count;
  const double range = static_cast<double>(p.max - p.min);
  const double ratio = ToDouble(p.ratio);
  if (ratio < 1) return (range - s1) / range * 100;
  if (ratio > 1) return s1 / range * 100;
  return (1 - std::abs(2 * s1 - range) / range) * 100;
}

TEST(ScoreGuess, AllMinimumScoresFull) {
  const auto log = Play(Config(GameKind::kGuessAverage, 10, 5, OracleSeat()),
                        [](const GameEngine&, PlayerId) { return Action{ChosenNumber{0}}; });
  EXPECT_EQ(ScoreMatch(log).rescaled, 100);
}

TEST(ScoreGuess, MatchesFormulaOracleOverRatios) {
  for (const Rational& ratio : {Rational(1, 2), Rational(1), Rational(4, 3)}) {
    MatchConfig config = Config(GameKind::kGuessAverage, 6, 8, RandomSeat(), 5);
    std::get<GuessParams>(config.params).ratio = ratio;
    const auto log = Play(config, RandomMove);
    EXPECT_NEAR(Rescaled(log), GuessOracle(log), 1e-9);
  }
}

// ---- Bar ----

TEST(ScoreBar, RotationHitsCapacityExactly) {
  const auto log = Play(Config(GameKind::kElFarolBar, 10, 20, OracleSeat()),
                        [](const GameEngine& e, PlayerId p) { return RotationBarAction(e, p); });
  const auto report = ScoreMatch(log);
  EXPECT_EQ(report.raw, 0);
  EXPECT_EQ(report.rescaled, 100);
}

TEST(ScoreBar, EveryoneGoes) {
  const auto log = Play(Config(GameKind::kElFarolBar, 10, 4, OracleSeat()),
                        [](const GameEngine&, PlayerId) { return Action{BarDecision{BarChoice::kGo}}; });
  const auto report = ScoreMatch(log);
  EXPECT_EQ(report.raw, Rational(2, 5));
  EXPECT_EQ(report.rescaled, Rational(100, 3));
}

TEST(ScoreBar, NobodyGoes) {
  const auto log = Play(Config(GameKind::kElFarolBar, 10, 4, OracleSeat()),
                        [](const GameEngine&, PlayerId) { return Action{BarDecision{BarChoice::kStay}}; });
  EXPECT_EQ(ScoreMatch(log).rescaled, 0);
}

TEST(ScoreBar, ExplicitModeIsNotScored) {
  MatchConfig config = Config(GameKind::kElFarolBar, 10, 2, OracleSeat());
  std::get<BarParams>(config.params).info_mode = InfoMode::kExplicit;
  const auto log = Play(config, OracleMove);
  EXPECT_FALSE(IsScored(config));
  try {
    ScoreMatch(log);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotScored);
  }
}

// ---- Dollar ----

TEST(ScoreDollar, EqualSplitScoresFull) {
  const auto log = Play(Config(GameKind::kDivideDollar, 10, 5, OracleSeat()),
                        [](const GameEngine&, PlayerId) { return Action{Bid{10}}; });
  EXPECT_EQ(ScoreMatch(log).rescaled, 100);
}

TEST(ScoreDollar, AllBidEverythingClampsToZero) {
  const auto log = Play(Config(GameKind::kDivideDollar, 10, 5, OracleSeat()),
                        [](const GameEngine&, PlayerId) { return Action{Bid{100}}; });
  const auto report = ScoreMatch(log);
  EXPECT_EQ(report.raw, 900);
  EXPECT_EQ(report.rescaled, 0);
}

TEST(ScoreDollar, AlternatingSums) {
  // Round sums 90, 110, 90, 110.
  const auto log = Play(Config(GameKind::kDivideDollar, 10, 4, OracleSeat()), [](const GameEngine& e, PlayerId p) {
    return Action{Bid{e.round() % 2 == 0 ? 9 : (p == 0 ? 20 : 10)}};
  });
  const auto report = ScoreMatch(log);
  EXPECT_EQ(report.raw, 10);
  EXPECT_EQ(report.rescaled, 90);
}

// ---- Public goods ----

TEST(ScorePublicGoods, FreeRidingScoresFull) {
  const auto log = Play(Config(GameKind::kPublicGoods, 10, 5, OracleSeat()),
                        [](const GameEngine&, PlayerId) { return Action{Contribution{0}}; });
  EXPECT_EQ(ScoreMatch(log).rescaled, 100);
}

TEST(ScorePublicGoods, ContributingTScoresZero) {
  const auto log = Play(Config(GameKind::kPublicGoods, 10, 5, OracleSeat()),
                        [](const GameEngine&, PlayerId) { return Action{Contribution{20}}; });
  EXPECT_EQ(ScoreMatch(log).rescaled, 0);
}

TEST(ScorePublicGoods, HighMultiplierRewardsContribution) {
  MatchConfig config = Config(GameKind::kPublicGoods, 3, 5, OracleSeat());
  std::get<PublicGoodsParams>(config.params).multiplier = 4;
  const auto log = Play(config, [](const GameEngine&, PlayerId) { return Action{Contribution{20}}; });
  EXPECT_EQ(ScoreMatch(log).rescaled, 100);
}

// ---- Diner ----

TEST(ScoreDiner, NinetySixPercentCheap) {
  // 100 choices, 4 costly.
  const auto log = Play(Config(GameKind::kDinersDilemma, 10, 10, OracleSeat()), [](const GameEngine& e, PlayerId p) {
    const bool costly = p == 0 && e.round() < 4;
    return Action{Dish{costly ? DishChoice::kCostly : DishChoice::kCheap}};
  });
  const auto report = ScoreMatch(log);
  EXPECT_EQ(report.raw, Rational(96, 100));
  EXPECT_EQ(report.rescaled, 4);
}

TEST(ScoreDiner, Extremes) {
  const auto costly = Play(Config(GameKind::kDinersDilemma, 10, 3, OracleSeat()),
                           [](const GameEngine&, PlayerId) { return Action{Dish{DishChoice::kCostly}}; });
  EXPECT_EQ(ScoreMatch(costly).rescaled, 100);
  const auto cheap = Play(Config(GameKind::kDinersDilemma, 10, 3, OracleSeat()),
                          [](const GameEngine&, PlayerId) { return Action{Dish{DishChoice::kCheap}}; });
  EXPECT_EQ(ScoreMatch(cheap).rescaled, 0);
}

// ---- Auction ----

TEST(ScoreAuction, TruthfulAndZeroBids) {
  const MatchConfig config = Config(GameKind::kSealedBidAuction, 10, 5, OracleSeat());
  const auto truthful = Play(config, [](const GameEngine& e, PlayerId p) { return Action{AuctionBid{e.Valuation(p)}}; });
  EXPECT_EQ(ScoreMatch(truthful).rescaled, 0);
  const auto zero = Play(config, [](const GameEngine&, PlayerId) { return Action{AuctionBid{0}}; });
  EXPECT_EQ(ScoreMatch(zero).rescaled, 100);
}

TEST(ScoreAuction, MatchesFormulaOracle) {
  const auto log = Play(Config(GameKind::kSealedBidAuction, 7, 9, RandomSeat(), 23), RandomMove);
  double sum = 0;
  int count = 0;
  for (const auto& r : log.rounds) {
    const auto& o = std::get<AuctionOutcome>(r.outcome);
    for (const auto& [p, a] : r.actions) {
      const double v = static_cast<double>(o.valuations[static_cast<std::size_t>(p)]);
      sum += (v - static_cast<double>(std::get<AuctionBid>(a).amount)) / v;
      ++count;
    }
  }
  EXPECT_NEAR(Rescaled(log), sum / count * 100, 1e-9);
}

TEST(ScoreAuction, SecondPriceIsNotScored) {
  MatchConfig config = Config(GameKind::kSealedBidAuction, 4, 2, OracleSeat());
  std::get<AuctionParams>(config.params).pricing = Pricing::kSecondPrice;
  EXPECT_THROW(ScoreMatch(Play(config, OracleMove)), Error);
}

// ---- Royale ----

TEST(ScoreRoyale, AlwaysTargetingStrongestScoresFull) {
  const auto log = Play(Config(GameKind::kBattleRoyale, 10, 1, OracleSeat()), OracleMove);
  EXPECT_EQ(ScoreMatch(log).rescaled, 100);
}

TEST(ScoreRoyale, AlwaysMissingScoresZero) {
  MatchConfig config = Config(GameKind::kBattleRoyale, 10, 1, OracleSeat());
  std::get<RoyaleParams>(config.params).max_turns = 30;
  const auto log = Play(config, [](const GameEngine&, PlayerId) { return Action{Shot{}}; });
  EXPECT_EQ(log.rounds.size(), 30u);
  EXPECT_EQ(ScoreMatch(log).rescaled, 0);
}

TEST(ScoreRoyale, FractionOfCorrectTurns) {
  // One correct turn in five.
  MatchConfig config = Config(GameKind::kBattleRoyale, 10, 1, OracleSeat());
  std::get<RoyaleParams>(config.params).max_turns = 5;
  const auto log = Play(config, [](const GameEngine& e, PlayerId p) {
    if (e.round() == 2) return OracleMove(e, p);
    return Action{Shot{}};
  });
  EXPECT_EQ(ScoreMatch(log).rescaled, 20);
}

// ---- Pirate ----

MatchConfig PirateTableConfig() {
  const Action reject = PirateVote{false};
  const Action accept = PirateVote{true};
  std::vector<std::vector<Action>> scripts = {
      {PirateProposal{{100, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {reject, PirateProposal{{99, 0, 1, 0, 0, 0, 0, 0, 0}}},
      {reject, reject, PirateProposal{{50, 1, 1, 1, 1, 1, 1, 44}}},
      {reject, accept, accept},
      {reject, accept, accept},
      {reject, reject, accept},
      {reject, reject, accept},
      {reject, reject, accept},
      {reject, reject, accept},
      {reject, accept, accept},
  };
  MatchConfig config = Config(GameKind::kPirateGame, 10, 1, OracleSeat());
  for (std::size_t i = 0; i < scripts.size(); ++i) config.roster[i] = testing::ScriptedSeat(scripts[i]);
  return config;
}

MatchLog PlayScripts(const MatchConfig& config) {
  std::vector<std::unique_ptr<Agent>> seats;
  for (const auto& spec : config.roster) seats.push_back(MakeLocalAgent(spec));
  return Play(config, [&](const GameEngine& e, PlayerId p) { return seats[static_cast<std::size_t>(p)]->Act(e, p); });
}

TEST(ScorePirate, ScriptedTableScores) {
  const auto report = ScoreMatch(PlayScripts(PirateTableConfig()));
  EXPECT_EQ(report.per_round, (std::vector<Rational>{8, 6, 94}));
  EXPECT_EQ(report.per_round_votes, (std::vector<Rational>{1, Rational(3, 4), Rational(4, 7)}));
  EXPECT_EQ(report.components.at("S8V"), Rational(19, 24));
  EXPECT_EQ(report.components.at("S8P"), 36);
  EXPECT_NEAR(ToDouble(report.rescaled), 80.6, 0.05);
}

TEST(ScorePirate, FixtureFileMatchesScriptedRun) {
  const MatchLog fixture = ReadMatchLog(std::string(GAMEBENCH_SOURCE_DIR) + "/fixtures/pirate_table.jsonl");
  const MatchLog fresh = PlayScripts(fixture.config);
  EXPECT_EQ(SerializeMatchLog(fixture), SerializeMatchLog(fresh));
  EXPECT_EQ(ScoreMatch(fixture), ScoreMatch(fresh));
}

TEST(ScorePirate, OptimalPlayScoresFull) {
  for (const std::int64_t gold : {4, 5, 100, 400}) {
    MatchConfig config = Config(GameKind::kPirateGame, 10, 1, OracleSeat());
    std::get<PirateParams>(config.params).gold = gold;
    const auto report = ScoreMatch(Play(config, OracleMove));
    EXPECT_EQ(report.rescaled, 100) << "gold " << gold;
  }
}

TEST(ScorePirate, WorstSingleRoundScoresZero) {
  // Proposal at distance 2G from (96,0,1,0,1,0,1,0,1,0); every vote wrong.
  const auto log = Play(Config(GameKind::kPirateGame, 10, 1, OracleSeat()), [](const GameEngine& e, PlayerId p) {
    if (e.step_kind() == StepKind::kPropose) return Action{PirateProposal{{0, 100, 0, 0, 0, 0, 0, 0, 0, 0}}};
    return Action{PirateVote{p != 1}};
  });
  ASSERT_EQ(log.rounds.size(), 2u);
  const auto report = ScoreMatch(log);
  EXPECT_EQ(report.raw, 200);
  EXPECT_EQ(report.components.at("S8V"), 0);
  EXPECT_EQ(report.rescaled, 0);
}

// ---- Properties ----

TEST(ScoringProperties, RescaledAlwaysWithinRange) {
  for (const GameKind kind : kAllGames) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto log = Play(Config(kind, 5, 6, RandomSeat(), seed), RandomMove);
      const auto report = ScoreMatch(log);
      ASSERT_GE(report.rescaled, 0) << GameKindName(kind);
      ASSERT_LE(report.rescaled, 100) << GameKindName(kind);
      ASSERT_EQ(ScoreMatch(log), report);
      ASSERT_EQ(ScoreReportFromJson(ScoreReportToJson(report)), report);
    }
  }
}

TEST(ScoringProperties, RelabelingPlayersLeavesScoreUnchanged) {
  // Replays the same multiset of choices with the player assignment rotated.
  for (const GameKind kind : {GameKind::kGuessAverage, GameKind::kDivideDollar, GameKind::kDinersDilemma,
                              GameKind::kElFarolBar, GameKind::kPublicGoods}) {
    const MatchConfig config = Config(kind, 6, 5, RandomSeat(), 31);
    const MatchLog original = Play(config, RandomMove);
    std::size_t round = 0;
    const MatchLog rotated = Play(config, [&](const GameEngine& e, PlayerId p) {
      round = static_cast<std::size_t>(e.round());
      return original.rounds[round].actions.at((p + 1) % 6);
    });
    EXPECT_EQ(ScoreMatch(original).raw, ScoreMatch(rotated).raw) << GameKindName(kind);
  }
}

TEST(ScoringErrors, IncompleteLogRejected) {
  MatchLog log = Play(Config(GameKind::kDivideDollar, 4, 5, OracleSeat()), OracleMove);
  log.rounds.pop_back();
  log.terminal = false;
  try {
    ScoreMatch(log);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteLog);
  }
  MatchLog royale = Play(Config(GameKind::kBattleRoyale, 4, 1, OracleSeat()), OracleMove);
  royale.terminal = false;
  EXPECT_THROW(ScoreMatch(royale), Error);
}

// ---- Aggregation ----

TEST(Aggregate, FiveRunAnchor) {
  const std::vector<double> runs = {65.4, 62.3, 63.9, 58.3, 67.3};
  const auto a = AggregateScores(runs);
  EXPECT_NEAR(a.mean, 63.4, 0.05);
  EXPECT_NEAR(a.std, 3.4, 0.05);
  EXPECT_EQ(a.runs, 5);
  EXPECT_FALSE(a.degenerate);
}

TEST(Aggregate, IdenticalRunsAndSingleRun) {
  const std::vector<double> same(5, 71.0);
  EXPECT_EQ(AggregateScores(same).std, 0);
  const std::vector<double> one = {42.0};
  const auto a = AggregateScores(one);
  EXPECT_EQ(a.std, 0);
  EXPECT_TRUE(a.degenerate);
}

TEST(Leaderboard, OverallRowIsMeanOfGameMeans) {
  std::vector<std::pair<std::string, ScoreReport>> runs;
  double sum_of_means = 0;
  int g = 0;
  for (const GameKind kind : kAllGames) {
    for (int r = 0; r < 2; ++r) {
      ScoreReport report;
      report.game = kind;
      report.rescaled = Rational(10 * g + r * 2, 1);
      runs.emplace_back("m", report);
    }
    sum_of_means += 10 * g + 1;
    ++g;
  }
  const auto rows = BuildLeaderboard(runs);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows.back().game, "overall");
  EXPECT_NEAR(rows.back().stats.mean, sum_of_means / 8, 1e-12);
  const std::string csv = LeaderboardCsv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "model,game,mean,std,runs");
  EXPECT_NE(csv.find("m,guess_average,1.0000,1.4142,2"), std::string::npos) << csv;
}

TEST(Leaderboard, NoOverallWithoutAllGames) {
  ScoreReport report;
  report.game = GameKind::kDivideDollar;
  report.rescaled = 50;
  const auto rows = BuildLeaderboard({{"m", report}});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].game, "divide_dollar");
}

}  // namespace
}  // namespace gamebench
