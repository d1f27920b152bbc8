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
#include <sys/wait.h>

#include <array>
#include <cstdio>

#include "gamebench/match_log.hpp"
#include "json.hpp"
#include "test_support.hpp"

namespace gamebench {
namespace {

using nlohmann::json;
using testing::TempDir;

const std::string kSource = GAMEBENCH_SOURCE_DIR;

struct Output {
  int exit_code = -1;
  std::string text;
};

Output Cli(const std::string& args) {
  const std::string command = std::string(GAMEBENCH_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  Output out;
  if (!pipe) return out;
  std::array<char, 4096> buffer;
  while (const std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) out.text.append(buffer.data(), n);
  const int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

bool Contains(const std::string& text, std::string_view needle) { return text.find(needle) != std::string::npos; }

TEST(Cli, RunWritesArtifactsAndPrintsScore) {
  TempDir dir;
  const auto out = Cli(kSource + "/configs/guess_average.json --out-dir " + dir.path().string());
  // Bare config path is not a subcommand.
  EXPECT_EQ(out.exit_code, 2);
  const auto run = Cli("run " + kSource + "/configs/guess_average.json --out-dir " + dir.path().string());
  ASSERT_EQ(run.exit_code, 0) << run.text;
  EXPECT_TRUE(Contains(run.text, "score: 100.0")) << run.text;
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "log.jsonl"));
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "manifest.json"));
}

TEST(Cli, RunOverrides) {
  TempDir dir;
  const auto run = Cli("run " + kSource +
                       "/configs/pirate_game.json --n-players 5 --param gold=4 --seed 9 --out-dir " +
                       dir.path().string());
  ASSERT_EQ(run.exit_code, 0) << run.text;
  const MatchLog log = ReadMatchLog(dir.path() / "log.jsonl");
  EXPECT_EQ(log.config.n_players, 5);
  EXPECT_EQ(log.config.seed, 9u);
  EXPECT_EQ(log.config.Get<PirateParams>().gold, 4);
  EXPECT_EQ(log.config.roster.size(), 5u);
}

TEST(Cli, ScoreAndReplayFixture) {
  const auto score = Cli("score " + kSource + "/fixtures/pirate_table.jsonl");
  ASSERT_EQ(score.exit_code, 0);
  EXPECT_TRUE(Contains(score.text, "score: 80.6")) << score.text;
  const auto as_json = Cli("score --json " + kSource + "/fixtures/pirate_table.jsonl");
  ASSERT_EQ(as_json.exit_code, 0);
  EXPECT_EQ(json::parse(as_json.text)["components"]["S8V"], "19/24");
  const auto replay = Cli("replay " + kSource + "/fixtures/pirate_table.jsonl");
  EXPECT_EQ(replay.exit_code, 0) << replay.text;
}

TEST(Cli, ReplayRejectsTamperedLog) {
  TempDir dir;
  std::string text = ReadTextFile(kSource + "/fixtures/pirate_table.jsonl");
  const std::string from = "\"accepts\":1,";
  const auto pos = text.find(from);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, from.size(), "\"accepts\":2,");
  WriteTextFile(dir.path() / "bad.jsonl", text);
  const auto replay = Cli("replay " + (dir.path() / "bad.jsonl").string());
  EXPECT_EQ(replay.exit_code, 1) << replay.text;
  EXPECT_TRUE(Contains(replay.text, "ReplayDivergence")) << replay.text;
}

TEST(Cli, SweepWritesLeaderboard) {
  TempDir dir;
  const auto sweep = Cli("sweep " + kSource + "/plans/pirate_gold_grid.json --jobs 2 --out-dir " + dir.path().string());
  ASSERT_EQ(sweep.exit_code, 0) << sweep.text;
  const std::string csv = ReadTextFile(dir.path() / "leaderboard.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "model,game,mean,std,runs");
  EXPECT_TRUE(Contains(csv, "gold=4"));
}

TEST(Cli, OracleCommand) {
  const auto out = Cli("oracle pirate --n 10 --gold 100");
  ASSERT_EQ(out.exit_code, 0);
  EXPECT_TRUE(Contains(out.text, "(96,0,1,0,1,0,1,0,1,0)")) << out.text;
}

TEST(Cli, Errors) {
  EXPECT_EQ(Cli("run /nonexistent/config.json").exit_code, 1);
  EXPECT_EQ(Cli("frobnicate").exit_code, 2);
  EXPECT_EQ(Cli("run").exit_code, 2);
  const auto malformed = Cli("score " + kSource + "/CMakeLists.txt");
  EXPECT_EQ(malformed.exit_code, 1);
  EXPECT_TRUE(Contains(malformed.text, "MalformedLog")) << malformed.text;
}

}  // namespace
}  // namespace gamebench
