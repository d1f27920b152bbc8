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
#include <fstream>
#include <random>
#include <set>
#include <thread>

#include "gamebench/config.hpp"
#include "gamebench/error.hpp"
#include "gamebench/orchestrator.hpp"
#include "json.hpp"
#include "test_support.hpp"

namespace gamebench {
namespace {

using nlohmann::json;
using testing::Config;
using testing::OracleSeat;
using testing::RandomSeat;
using testing::TempDir;

const std::filesystem::path kSource = GAMEBENCH_SOURCE_DIR;

// Deterministic function of the request body, answered after a random delay
// so arrival order varies between runs.
class EchoClient : public ChatClient {
 public:
  explicit EchoClient(unsigned jitter_seed) : rng_(jitter_seed) {}

  std::string Complete(const EndpointDescriptor&, const std::string& body) override {
    int delay = 0;
    {
      std::lock_guard lock(mutex_);
      bodies.insert(body);
      delay = static_cast<int>(rng_() % 15);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(delay));
    return R"({"chosen_number": ")" + std::to_string(std::hash<std::string>{}(body) % 101) + "\"}";
  }

  std::multiset<std::string> bodies;

 private:
  std::mutex mutex_;
  std::mt19937 rng_;
};

class DeadClient : public ChatClient {
 public:
  std::string Complete(const EndpointDescriptor&, const std::string&) override {
    throw TransportError("connection refused", false);
  }
};

AgentSpec LlmSeat() {
  AgentSpec spec;
  spec.kind = AgentKind::kLlm;
  EndpointDescriptor e;
  e.base_url = "http://stub.invalid/v1";
  e.model = "stub";
  spec.endpoint = e;
  return spec;
}

GatewayOptions With(std::shared_ptr<ChatClient> client) {
  GatewayOptions o;
  o.client = std::move(client);
  o.backoff_ms = 1;
  return o;
}

// Plays a fixed illegal action.
class IllegalAgent : public Agent {
 public:
  Action Act(const GameEngine&, PlayerId) override { return Bid{-5}; }
};

TEST(RunMatch, SampleConfigsScoreFullWithOracles) {
  for (const char* name : {"guess_average", "el_farol_bar", "divide_dollar", "public_goods", "diners_dilemma",
                           "sealed_bid_auction", "battle_royale", "pirate_game"}) {
    const auto result = RunMatch(LoadConfigFile(kSource / "configs" / (std::string(name) + ".json")));
    ASSERT_TRUE(result.valid) << name;
    ASSERT_TRUE(result.score.has_value()) << name;
    EXPECT_EQ(result.score->rescaled, 100) << name;
  }
}

TEST(RunMatch, ConstantBidderBidsEveryRound) {
  const auto result = RunMatch(LoadConfigFile(kSource / "configs" / "dollar_fixed_91.json"));
  ASSERT_EQ(result.log.rounds.size(), 20u);
  for (const auto& r : result.log.rounds) EXPECT_EQ(std::get<Bid>(r.actions.at(9)).amount, 91);
}

TEST(RunMatch, WritesArtifactsWithHashes) {
  TempDir dir;
  RunOptions options;
  options.out_dir = dir.path();
  const auto result = RunMatch(Config(GameKind::kPublicGoods, 4, 3, RandomSeat()), options);
  for (const char* file : {"log.jsonl", "score.json", "manifest.json"}) {
    EXPECT_TRUE(std::filesystem::exists(dir.path() / file)) << file;
  }
  const json manifest = json::parse(ReadTextFile(dir.path() / "manifest.json"));
  EXPECT_EQ(manifest["run_id"], result.run_id);
  EXPECT_TRUE(manifest["valid"].get<bool>());
  EXPECT_EQ(manifest["artifacts"]["log.jsonl"], Sha256Hex(ReadTextFile(dir.path() / "log.jsonl")));
  EXPECT_EQ(ReadMatchLog(dir.path() / "log.jsonl").rounds, result.log.rounds);
  // Rescoring the stored log reproduces score.json.
  const json stored = json::parse(ReadTextFile(dir.path() / "score.json"));
  ScoreReport rescored = ScoreMatch(ReadMatchLog(dir.path() / "log.jsonl"));
  rescored.run_id = result.run_id;
  EXPECT_EQ(stored, ScoreReportToJson(rescored));
}

TEST(RunMatch, RunIdDependsOnConfig) {
  const MatchConfig a = Config(GameKind::kGuessAverage, 4, 3, RandomSeat(), 1);
  const MatchConfig b = Config(GameKind::kGuessAverage, 4, 3, RandomSeat(), 2);
  EXPECT_EQ(RunId(a), RunId(a));
  EXPECT_NE(RunId(a), RunId(b));
  EXPECT_EQ(RunId(a).size(), 16u);
  EXPECT_EQ(Sha256Hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(RunMatch, IllegalActionsAreCoercedAndLogged) {
  RunOptions options;
  options.make_agent = [](const AgentSpec& spec, PlayerId player) -> std::unique_ptr<Agent> {
    if (player == 1) return std::make_unique<IllegalAgent>();
    return MakeLocalAgent(spec);
  };
  const auto result = RunMatch(Config(GameKind::kDivideDollar, 3, 4, OracleSeat()), options);
  for (const auto& r : result.log.rounds) {
    EXPECT_EQ(r.coerced, std::vector<PlayerId>{1});
    EXPECT_GE(std::get<Bid>(r.actions.at(1)).amount, 0);
  }
  EXPECT_EQ(Replay(result.log).rounds, result.log.rounds);
}

TEST(RunMatch, AgentFailureMarksMatchInvalid) {
  MatchConfig config = Config(GameKind::kGuessAverage, 3, 2, OracleSeat());
  config.roster[2] = LlmSeat();
  TempDir dir;
  RunOptions options;
  options.out_dir = dir.path();
  options.gateway = With(std::make_shared<DeadClient>());
  const auto result = RunMatch(config, options);
  EXPECT_FALSE(result.valid);
  EXPECT_FALSE(result.score.has_value());
  EXPECT_FALSE(result.failure.empty());
  const json manifest = json::parse(ReadTextFile(dir.path() / "manifest.json"));
  EXPECT_FALSE(manifest["valid"].get<bool>());
}

TEST(RunMatch, RemoteSeatsDoNotSeeEachOther) {
  // Same requests and the same log whatever order replies arrive in.
  MatchConfig config = Config(GameKind::kGuessAverage, 4, 5, OracleSeat());
  for (int i = 0; i < 3; ++i) config.roster[static_cast<std::size_t>(i)] = LlmSeat();
  auto first = std::make_shared<EchoClient>(1);
  auto second = std::make_shared<EchoClient>(2);
  RunOptions a;
  a.gateway = With(first);
  RunOptions b;
  b.gateway = With(second);
  const auto ra = RunMatch(config, a);
  const auto rb = RunMatch(config, b);
  EXPECT_EQ(SerializeMatchLog(ra.log), SerializeMatchLog(rb.log));
  EXPECT_EQ(first->bodies, second->bodies);
  EXPECT_EQ(first->bodies.size(), 15u);
}

// ---- Replay ----

TEST(Replay, ReproducesEveryGame) {
  for (const GameKind kind : kAllGames) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto result = RunMatch(Config(kind, 5, 4, RandomSeat(), seed));
      EXPECT_EQ(SerializeMatchLog(Replay(result.log)), SerializeMatchLog(result.log)) << GameKindName(kind);
    }
  }
}

void ExpectDivergence(const MatchLog& log) {
  try {
    Replay(log);
    FAIL() << "no divergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReplayDivergence);
  }
}

TEST(Replay, DetectsTamperedOutcome) {
  MatchLog log = RunMatch(Config(GameKind::kDivideDollar, 4, 3, RandomSeat())).log;
  std::get<DollarOutcome>(log.rounds[1].outcome).total += 1;
  ExpectDivergence(log);
}

TEST(Replay, DetectsTamperedAction) {
  MatchLog log = RunMatch(Config(GameKind::kDivideDollar, 4, 3, RandomSeat())).log;
  auto& bid = std::get<Bid>(log.rounds[2].actions.at(0));
  bid.amount = bid.amount == 0 ? 1 : 0;
  ExpectDivergence(log);
}

TEST(Replay, DetectsTamperedFixture) {
  MatchLog log = ReadMatchLog(kSource / "fixtures" / "pirate_table.jsonl");
  EXPECT_NO_THROW(Replay(log));
  log.config.seed += 1;
  std::get<PirateVote>(log.rounds[1].actions.begin()->second).accept ^= true;
  ExpectDivergence(log);
}

// ---- Experiments ----

ExperimentPlan LoadPlan(const char* name) { return LoadPlanFile(kSource / "plans" / name); }

TEST(Experiment, RepeatsUseDistinctDerivedSeeds) {
  ExperimentPlan plan;
  plan.seed = 42;
  plan.repeats = 5;
  plan.bases = {Config(GameKind::kGuessAverage, 4, 3, RandomSeat())};
  const auto cells = EnumerateCells(plan);
  ASSERT_EQ(cells.size(), 5u);
  std::set<std::uint64_t> seeds;
  for (const auto& c : cells) {
    seeds.insert(c.config.seed);
    EXPECT_EQ(c.group, cells[0].group);
  }
  EXPECT_EQ(seeds.size(), 5u);
  EXPECT_EQ(EnumerateCells(plan)[3].config.seed, cells[3].config.seed);
  const auto report = RunExperiment(plan);
  ASSERT_EQ(report.leaderboard.size(), 1u);
  EXPECT_EQ(report.leaderboard[0].stats.runs, 5);
}

TEST(Experiment, TemperatureSweepGivesOneRowPerTemperature) {
  const auto report = RunExperiment(LoadPlan("guess_temperatures.json"));
  EXPECT_EQ(report.leaderboard.size(), 6u);
  for (const auto& row : report.leaderboard) EXPECT_NEAR(row.stats.mean, 100.0, 1e-9);
}

TEST(Experiment, PirateGoldGrid) {
  const auto plan = LoadPlan("pirate_gold_grid.json");
  const auto cells = EnumerateCells(plan);
  ASSERT_EQ(cells.size(), 4u);
  std::set<std::int64_t> golds;
  for (const auto& c : cells) golds.insert(c.config.Get<PirateParams>().gold);
  EXPECT_EQ(golds, (std::set<std::int64_t>{4, 5, 100, 400}));
  const auto report = RunExperiment(plan);
  EXPECT_EQ(report.leaderboard.size(), 4u);
  for (const auto& row : report.leaderboard) EXPECT_NEAR(row.stats.mean, 100.0, 1e-9) << row.model;
}

TEST(Experiment, PlanJsonRoundTrip) {
  const auto plan = LoadPlan("pirate_gold_grid.json");
  EXPECT_EQ(PlanToJson(PlanFromJson(PlanToJson(plan))), PlanToJson(plan));
}

TEST(Experiment, ParallelJobsMatchSerialByteForByte) {
  const auto plan = LoadPlan("all_games_repeats.json");
  TempDir serial_dir;
  TempDir parallel_dir;
  ExperimentOptions serial;
  serial.out_dir = serial_dir.path();
  ExperimentOptions parallel;
  parallel.out_dir = parallel_dir.path();
  parallel.jobs = 4;
  const auto a = RunExperiment(plan, serial);
  const auto b = RunExperiment(plan, parallel);
  EXPECT_EQ(a.csv, b.csv);
  ASSERT_EQ(a.cells.size(), 40u);
  for (const auto& entry : std::filesystem::recursive_directory_iterator(serial_dir.path() / "cells")) {
    if (entry.path().filename() != "log.jsonl") continue;
    const auto rel = std::filesystem::relative(entry.path(), serial_dir.path());
    EXPECT_EQ(ReadTextFile(entry.path()), ReadTextFile(parallel_dir.path() / rel)) << rel;
  }
}

TEST(Experiment, ResumeSkipsFinishedCells) {
  ExperimentPlan plan;
  plan.seed = 3;
  plan.repeats = 3;
  plan.bases = {Config(GameKind::kDivideDollar, 4, 3, RandomSeat())};
  TempDir dir;
  ExperimentOptions options;
  options.out_dir = dir.path();
  const auto first = RunExperiment(plan, options);
  for (const auto& c : first.cells) EXPECT_FALSE(c.resumed);

  // Corrupt one cell's log; only that cell reruns.
  const auto victim = dir.path() / "cells";
  std::filesystem::path corrupted;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(victim)) {
    if (entry.path().filename() == "log.jsonl") {
      corrupted = entry.path();
      break;
    }
  }
  ASSERT_FALSE(corrupted.empty());
  WriteTextFile(corrupted, "garbage\n");
  const auto second = RunExperiment(plan, options);
  int resumed = 0;
  for (const auto& c : second.cells) resumed += c.resumed ? 1 : 0;
  EXPECT_EQ(resumed, 2);
  EXPECT_EQ(first.csv, second.csv);
  EXPECT_EQ(RunExperiment(plan, options).cells[0].resumed, true);
}

TEST(Experiment, FailedCellsAreReportedAndExcluded) {
  MatchConfig llm = Config(GameKind::kGuessAverage, 3, 2, OracleSeat());
  llm.roster[0] = LlmSeat();
  ExperimentPlan plan;
  plan.repeats = 2;
  plan.bases = {Config(GameKind::kGuessAverage, 3, 2, OracleSeat()), llm};
  ExperimentOptions options;
  options.gateway = With(std::make_shared<DeadClient>());
  const auto report = RunExperiment(plan, options);
  ASSERT_EQ(report.cells.size(), 4u);
  EXPECT_EQ(report.failed.size(), 2u);
  int scored = 0;
  for (const auto& c : report.cells) scored += c.score ? 1 : 0;
  EXPECT_EQ(scored, 2);
  ASSERT_FALSE(report.leaderboard.empty());
  EXPECT_EQ(report.leaderboard[0].stats.runs, 2);
}

}  // namespace
}  // namespace gamebench
