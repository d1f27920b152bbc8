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


#ifndef GAMEBENCH_ORCHESTRATOR_HPP_
#define GAMEBENCH_ORCHESTRATOR_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gamebench/agents.hpp"
#include "gamebench/llm_gateway.hpp"
#include "gamebench/match_log.hpp"
#include "gamebench/scoring.hpp"
#include "json.hpp"

namespace gamebench {

using AgentFactory = std::function<std::unique_ptr<Agent>(const AgentSpec& spec, PlayerId player)>;

// Local seats via MakeLocalAgent, LLM seats via the gateway. Human seats only
// exist inside service sessions and are rejected here.
std::unique_ptr<Agent> MakeAgent(const AgentSpec& spec, const GatewayOptions& gateway);

// Asks every pending seat for its action. Remote seats are queried in
// parallel. An illegal action is replaced by a uniform random legal one and
// the seat is listed in `coerced`.
std::map<PlayerId, Action> CollectActions(const GameEngine& engine, std::vector<std::unique_ptr<Agent>>& seats,
                                          std::vector<PlayerId>& coerced);
// Same, restricted to `players` (a subset of the pending seats).
std::map<PlayerId, Action> CollectActions(const GameEngine& engine, std::vector<std::unique_ptr<Agent>>& seats,
                                          const std::vector<PlayerId>& players, std::vector<PlayerId>& coerced);

struct RunOptions {
  std::filesystem::path out_dir;  // log.jsonl, score.json, manifest.json; nothing is written when empty
  GatewayOptions gateway;
  AgentFactory make_agent;  // defaults to MakeAgent
};

struct MatchResult {
  MatchLog log;
  std::optional<ScoreReport> score;  // empty for unscored variants and invalid matches
  bool valid = true;                 // false after an AgentFailure
  std::string failure;
  std::string run_id;
  nlohmann::json manifest;
};

MatchResult RunMatch(const MatchConfig& config, const RunOptions& options = {});

// Re-resolves every record from its actions and the config seed. Throws
// Error(kReplayDivergence) at the first record that differs.
MatchLog Replay(const MatchLog& log);

std::string Sha256Hex(std::string_view data);

// Stable id for a configuration: the first 16 hex digits of the SHA-256 of
// its canonical JSON.
std::string RunId(const MatchConfig& config);

// A sweep over one or more base configurations. Cells are the product of
// bases, temperatures, prompt versions and the parameter grid; each cell is
// run `repeats` times with seeds derived from (seed, cell label, repeat).
struct ExperimentPlan {
  std::string model = "default";
  std::uint64_t seed = 0;
  int repeats = 1;
  std::vector<MatchConfig> bases;
  std::vector<Rational> temperatures;            // empty: keep each base's
  std::vector<PromptVersion> prompt_versions;    // empty: keep each base's
  std::map<std::string, std::vector<nlohmann::json>> param_grid;  // params field (or n_players / n_rounds) -> values
};

ExperimentPlan PlanFromJson(const nlohmann::json& json);
nlohmann::json PlanToJson(const ExperimentPlan& plan);
ExperimentPlan LoadPlanFile(const std::filesystem::path& path);

struct Cell {
  std::string label;  // e.g. "pirate_game|gold=4|r2"
  std::string group;  // leaderboard model column: model plus any swept coordinates
  int repeat = 0;
  MatchConfig config;
};

std::vector<Cell> EnumerateCells(const ExperimentPlan& plan);

struct CellResult {
  Cell cell;
  std::optional<ScoreReport> score;
  bool valid = true;
  bool resumed = false;  // loaded from a previous run's artifacts
  std::string failure;
};

struct ExperimentOptions {
  std::filesystem::path out_dir;  // cells/<label>/, leaderboard.csv, experiment.json
  int jobs = 1;
  GatewayOptions gateway;
};

struct ExperimentReport {
  std::vector<CellResult> cells;
  std::vector<LeaderboardRow> leaderboard;
  std::string csv;
  std::vector<std::string> failed;  // labels of invalid cells
};

// Cells whose directory already holds a valid manifest for the same config
// are loaded instead of rerun.
ExperimentReport RunExperiment(const ExperimentPlan& plan, const ExperimentOptions& options = {});

}  // namespace gamebench

#endif  // GAMEBENCH_ORCHESTRATOR_HPP_
