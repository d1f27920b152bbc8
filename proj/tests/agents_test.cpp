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

#include <chrono>
#include <numeric>

#include "gamebench/agents.hpp"
#include "gamebench/config.hpp"
#include "gamebench/error.hpp"
#include "gamebench/pirate.hpp"
#include "gamebench/scoring.hpp"
#include "test_support.hpp"

namespace gamebench {
namespace {

using testing::Config;
using testing::FixedSeat;
using testing::OracleSeat;
using testing::RandomSeat;

// Plays with the seats built from the roster and checks every action is legal.
MatchLog PlayRoster(const MatchConfig& config) {
  std::vector<std::unique_ptr<Agent>> seats;
  for (const auto& spec : config.roster) seats.push_back(MakeLocalAgent(spec));
  GameEngine engine(config);
  testing::PlayOut(engine, [&](const GameEngine& e, PlayerId p) {
    Action a = seats[static_cast<std::size_t>(p)]->Act(e, p);
    const auto legal = e.Legal(p, a);
    EXPECT_TRUE(legal.ok()) << GameKindName(config.kind()) << " player " << p << ": " << legal.message;
    return a;
  });
  return LogFromEngine(engine);
}

TEST(Agents, OracleAndRandomAlwaysLegal) {
  for (const GameKind kind : kAllGames) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      for (const int n : {2, 5, 10}) {
        if (!ValidateConfig(Config(kind, n, 4, RandomSeat(), seed)).ok()) continue;
        PlayRoster(Config(kind, n, 4, RandomSeat(), seed));
        PlayRoster(Config(kind, n, 4, OracleSeat(Rational(1, 2)), seed));
      }
    }
  }
}

TEST(Agents, RandomAgentsAreDeterministicPerSeed) {
  for (const GameKind kind : kAllGames) {
    const auto a = PlayRoster(Config(kind, 6, 5, RandomSeat(), 99));
    const auto b = PlayRoster(Config(kind, 6, 5, RandomSeat(), 99));
    EXPECT_EQ(SerializeMatchLog(a), SerializeMatchLog(b));
  }
}

TEST(Agents, RotationSendsFloorRNEveryRound) {
  for (const int n : {3, 7, 10, 13}) {
    const auto log = PlayRoster(Config(GameKind::kElFarolBar, n, 25, FixedSeat("rotation_bar")));
    const std::int64_t cap = 6 * n / 10;
    for (const auto& r : log.rounds) EXPECT_EQ(std::get<BarOutcome>(r.outcome).goers, cap) << n;
  }
}

TEST(Agents, ConstantBidEveryRound) {
  const auto log = PlayRoster(Config(GameKind::kDivideDollar, 10, 6, FixedSeat("constant_bid", 91)));
  for (const auto& r : log.rounds) {
    for (const auto& [p, a] : r.actions) EXPECT_EQ(std::get<Bid>(a).amount, 91);
  }
}

TEST(Agents, FixedCatalog) {
  const auto pgg = PlayRoster(Config(GameKind::kPublicGoods, 5, 4, FixedSeat("free_rider")));
  for (const auto& r : pgg.rounds) {
    for (const auto& [p, a] : r.actions) EXPECT_EQ(std::get<Contribution>(a).tokens, 0);
  }
  const auto truthful = PlayRoster(Config(GameKind::kSealedBidAuction, 5, 4, FixedSeat("truthful_bidder")));
  for (const auto& r : truthful.rounds) {
    const auto& o = std::get<AuctionOutcome>(r.outcome);
    for (const auto& [p, a] : r.actions) EXPECT_EQ(std::get<AuctionBid>(a).amount, o.valuations.at(p));
  }
}

TEST(Agents, UnknownStrategyOrRemoteKindRejected) {
  AgentSpec llm;
  llm.kind = AgentKind::kLlm;
  EXPECT_THROW(MakeLocalAgent(llm), Error);
  AgentSpec human;
  human.kind = AgentKind::kHuman;
  EXPECT_THROW(MakeLocalAgent(human), Error);
}

TEST(Agents, GuessOracleFollowsRatio) {
  for (const auto& [ratio, expected] : std::vector<std::pair<Rational, std::int64_t>>{
           {Rational(2, 3), 0}, {Rational(1), 50}, {Rational(3, 2), 100}}) {
    MatchConfig config = Config(GameKind::kGuessAverage, 4, 1, OracleSeat());
    std::get<GuessParams>(config.params).ratio = ratio;
    GameEngine engine(config);
    RngStream rng = AgentStream(engine, 0);
    EXPECT_EQ(std::get<ChosenNumber>(OracleAction(engine, 0, 0, rng)).value, expected);
  }
}

TEST(Agents, DollarOracleSplitsRemainder) {
  const auto log = PlayRoster(Config(GameKind::kDivideDollar, 7, 1, OracleSeat()));
  std::int64_t total = 0;
  for (const auto& [p, a] : log.rounds[0].actions) {
    const auto amount = std::get<Bid>(a).amount;
    EXPECT_EQ(amount, p < 100 % 7 ? 15 : 14);
    total += amount;
  }
  EXPECT_EQ(total, 100);
}

TEST(Agents, MixedBarOracleMonteCarlo) {
  // Oracle goes with probability R = 0.6 independently; the mean absolute
  // deviation of attendance from R over many rounds is bounded by sampling.
  MatchConfig config = Config(GameKind::kElFarolBar, 10, 10000, OracleSeat(), 2024);
  const auto log = PlayRoster(config);
  double goers = 0;
  for (const auto& r : log.rounds) goers += static_cast<double>(std::get<BarOutcome>(r.outcome).goers);
  EXPECT_NEAR(goers / 1e5, 0.6, 0.01);
}

TEST(Agents, RandomGuessMonteCarloScoresHalf) {
  // Uniform choices on [0,100] have mean 50, so the rescaled score tends to 50.
  const auto log = PlayRoster(Config(GameKind::kGuessAverage, 10, 10000, RandomSeat(), 2025));
  EXPECT_NEAR(ToDouble(ScoreMatch(log).rescaled), 50.0, 1.0);
}

TEST(Agents, ReferenceStrategyText) {
  EXPECT_FALSE(ReferenceStrategyText(Config(GameKind::kPirateGame, 10, 1, OracleSeat())).empty());
  EXPECT_EQ(FormatAllocation({96, 0, 1}), "(96,0,1)");
}

// ---- Pirate solutions ----

TEST(Pirate, ClosedFormKnownProposals) {
  EXPECT_EQ(ClosedFormPirateProposal(10, 100), (std::vector<std::int64_t>{96, 0, 1, 0, 1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(ClosedFormPirateProposal(1, 100), (std::vector<std::int64_t>{100}));
  EXPECT_EQ(ClosedFormPirateProposal(2, 100), (std::vector<std::int64_t>{100, 0}));
  EXPECT_EQ(ClosedFormPirateProposal(3, 100), (std::vector<std::int64_t>{99, 0, 1}));
}

TEST(Pirate, BackwardInductionMatchesClosedFormWhenAffordable) {
  const auto start = std::chrono::steady_clock::now();
  for (const std::int64_t gold : {4, 5, 100, 400}) {
    const auto solution = SolvePirateGame(10, gold);
    for (int n = 1; n <= 10; ++n) {
      if (gold < PirateBribeCount(n)) continue;
      const auto& sub = solution[static_cast<std::size_t>(n - 1)];
      EXPECT_EQ(sub.proposal, ClosedFormPirateProposal(n, gold)) << "n=" << n << " G=" << gold;
      EXPECT_FALSE(sub.doomed);
      // Votes agree on the equilibrium offer.
      for (int offset = 1; offset < n; ++offset) {
        const std::int64_t offered = sub.proposal[static_cast<std::size_t>(offset)];
        EXPECT_EQ(BackwardInductionVote(solution, n, offset, offered), OptimalPirateVote(offset, offered))
            << "n=" << n << " offset=" << offset << " offered=" << offered;
      }
    }
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

TEST(Pirate, ShortGoldKeepsNothing) {
  const auto proposal = OptimalPirateProposal(10, 4);
  EXPECT_EQ(proposal, (std::vector<std::int64_t>{0, 0, 1, 0, 1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(std::accumulate(proposal.begin(), proposal.end(), std::int64_t{0}), 4);
}

TEST(Pirate, Votes) {
  EXPECT_TRUE(OptimalPirateVote(7, 44));
  EXPECT_FALSE(OptimalPirateVote(1, 0));
  EXPECT_TRUE(OptimalPirateVote(2, 1));
  EXPECT_FALSE(OptimalPirateVote(3, 1));
  EXPECT_TRUE(OptimalPirateVote(3, 2));
}

TEST(Pirate, L1) {
  EXPECT_EQ(L1Distance({100, 0, 0}, {99, 0, 1}), 2);
  EXPECT_EQ(L1Distance({50, 1, 1, 1, 1, 1, 1, 44}, {97, 0, 1, 0, 1, 0, 1, 0}), 94);
}

TEST(Pirate, EqualityAndLadderInvariants) {
  // Proposals always sum to G and are nonnegative; the proposer survives
  // whenever they are not doomed.
  for (const std::int64_t gold : {1, 2, 3, 4, 5, 7, 100}) {
    const auto solution = SolvePirateGame(10, gold);
    for (const auto& sub : solution) {
      EXPECT_EQ(std::accumulate(sub.proposal.begin(), sub.proposal.end(), std::int64_t{0}), gold);
      for (const auto g : sub.proposal) EXPECT_GE(g, 0);
      if (!sub.doomed) {
        EXPECT_TRUE(sub.survives[0]);
      }
    }
  }
}

}  // namespace
}  // namespace gamebench
