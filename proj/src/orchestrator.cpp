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


#include "gamebench/orchestrator.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <future>
#include <mutex>
#include <thread>

#include "gamebench/config.hpp"
#include "gamebench/error.hpp"
#include "gamebench/rng.hpp"

namespace gamebench {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kLogFile = "log.jsonl";
constexpr const char* kScoreFile = "score.json";
constexpr const char* kManifestFile = "manifest.json";

bool HasLlmSeat(const MatchConfig& config) {
  return std::any_of(config.roster.begin(), config.roster.end(),
                     [](const AgentSpec& spec) { return spec.kind == AgentKind::kLlm; });
}

std::string ValueLabel(const json& value) { return value.is_string() ? value.get<std::string>() : value.dump(); }

std::string SafeDirName(std::string_view label) {
  std::string out;
  for (const char c : label) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '=';
    out += keep ? c : (c == '|' ? '+' : '_');
  }
  return out;
}

// Applies one parameter assignment through the JSON form so every value goes
// through the same parsing and validation as a config file.
MatchConfig WithAssignments(const MatchConfig& base, const std::vector<std::pair<std::string, json>>& assignments) {
  if (assignments.empty()) return base;
  json j = ConfigToJson(base);
  for (const auto& [key, value] : assignments) {
    if (key == "n_players" || key == "n_rounds") {
      j[key] = value;
    } else if (j["params"].contains(key)) {
      j["params"][key] = value;
    } else {
      throw Error(ErrorCode::kConfigInvalid,
                  "param_grid key '" + key + "' is not a parameter of " + std::string(GameKindName(base.kind())));
    }
  }
  return ConfigFromJson(j);
}

std::optional<CellResult> TryResume(const Cell& cell, const fs::path& dir) {
  if (!fs::exists(dir / kManifestFile)) return std::nullopt;
  try {
    const json manifest = json::parse(ReadTextFile(dir / kManifestFile));
    if (!manifest.value("valid", false) || manifest.at("config") != ConfigToJson(cell.config)) return std::nullopt;
    for (const auto& [name, hash] : manifest.at("artifacts").items()) {
      if (Sha256Hex(ReadTextFile(dir / name)) != hash.get<std::string>()) return std::nullopt;
    }
    CellResult result{cell, std::nullopt, true, true, {}};
    if (manifest.at("artifacts").contains(kScoreFile)) {
      result.score = ScoreReportFromJson(json::parse(ReadTextFile(dir / kScoreFile)));
    }
    return result;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::unique_ptr<Agent> MakeAgent(const AgentSpec& spec, const GatewayOptions& gateway) {
  switch (spec.kind) {
    case AgentKind::kLlm: return MakeLlmAgent(spec, gateway);
    case AgentKind::kHuman:
      throw Error(ErrorCode::kConfigInvalid, "human seats can only play through a service session");
    default: return MakeLocalAgent(spec);
  }
}

std::map<PlayerId, Action> CollectActions(const GameEngine& engine, std::vector<std::unique_ptr<Agent>>& seats,
                                          std::vector<PlayerId>& coerced) {
  return CollectActions(engine, seats, engine.pending_players(), coerced);
}

std::map<PlayerId, Action> CollectActions(const GameEngine& engine, std::vector<std::unique_ptr<Agent>>& seats,
                                          const std::vector<PlayerId>& pending, std::vector<PlayerId>& coerced) {
  std::map<PlayerId, std::future<Action>> remote;
  std::map<PlayerId, Action> actions;
  for (const PlayerId p : pending) {
    Agent& agent = *seats.at(static_cast<std::size_t>(p));
    if (agent.remote()) {
      remote.emplace(p, std::async(std::launch::async, [&agent, &engine, p] { return agent.Act(engine, p); }));
    }
  }
  // Local seats run while remote requests are in flight. Every future is
  // joined before an exception leaves this function.
  std::exception_ptr failure;
  for (const PlayerId p : pending) {
    Agent& agent = *seats.at(static_cast<std::size_t>(p));
    if (agent.remote()) continue;
    try {
      actions.emplace(p, agent.Act(engine, p));
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  for (auto& [p, future] : remote) {
    try {
      actions.emplace(p, future.get());
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  coerced.clear();
  for (auto& [p, action] : actions) {
    bool substituted = seats.at(static_cast<std::size_t>(p))->last_coerced();
    if (!engine.Legal(p, action)) {
      RngStream rng = AgentStream(engine, p, kPurposeFallback);
      action = RandomAction(engine, p, rng);
      substituted = true;
    }
    if (substituted) coerced.push_back(p);
  }
  return actions;
}

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIo, "SHA-256 failed");
  }
  std::string out;
  char byte[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    out += byte;
  }
  return out;
}

std::string RunId(const MatchConfig& config) { return Sha256Hex(ConfigToJson(config).dump()).substr(0, 16); }

MatchResult RunMatch(const MatchConfig& config, const RunOptions& options) {
  GameEngine engine(config);
  MatchResult result;
  result.run_id = RunId(config);

  GatewayOptions gateway = options.gateway;
  if (!options.out_dir.empty() && !gateway.sidecar && HasLlmSeat(config)) {
    gateway.sidecar = std::make_shared<TranscriptSidecar>(options.out_dir / "transcripts.jsonl");
  }
  std::vector<std::unique_ptr<Agent>> seats;
  for (std::size_t p = 0; p < config.roster.size(); ++p) {
    seats.push_back(options.make_agent ? options.make_agent(config.roster[p], static_cast<PlayerId>(p))
                                       : MakeAgent(config.roster[p], gateway));
  }

  try {
    std::vector<PlayerId> coerced;
    while (!engine.terminal()) {
      const auto actions = CollectActions(engine, seats, coerced);
      engine.Step(actions);
      for (const PlayerId p : coerced) engine.MarkCoerced(p);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kAgentFailure) throw;
    result.valid = false;
    result.failure = e.what();
  }
  result.log = LogFromEngine(engine);
  if (result.valid && IsScored(config)) {
    result.score = ScoreMatch(result.log);
    result.score->run_id = result.run_id;
  }

  json artifacts = json::object();
  const std::string log_text = SerializeMatchLog(result.log);
  artifacts[kLogFile] = Sha256Hex(log_text);
  std::string score_text;
  if (result.score) {
    score_text = ScoreReportToJson(*result.score).dump(2) + "\n";
    artifacts[kScoreFile] = Sha256Hex(score_text);
  }
  result.manifest = json{{"run_id", result.run_id},
                         {"config", ConfigToJson(config)},
                         {"seeds", {{"match", config.seed}}},
                         {"valid", result.valid},
                         {"artifacts", artifacts}};
  if (!result.valid) result.manifest["failure"] = result.failure;

  if (!options.out_dir.empty()) {
    WriteTextFile(options.out_dir / kLogFile, log_text);
    if (result.score) WriteTextFile(options.out_dir / kScoreFile, score_text);
    WriteTextFile(options.out_dir / kManifestFile, result.manifest.dump(2) + "\n");
  }
  return result;
}

MatchLog Replay(const MatchLog& log) {
  GameEngine engine(log.config);
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const RoundRecord& record = log.rounds[i];
    const std::string where = "record " + std::to_string(i + 1);
    if (engine.terminal()) throw Error(ErrorCode::kReplayDivergence, where + " follows the end of the game");
    if (record.round != engine.round() || record.phase != engine.step_kind()) {
      throw Error(ErrorCode::kReplayDivergence, where + ": engine is at round " + std::to_string(engine.round()) +
                                                    " (" + std::string(StepKindName(engine.step_kind())) + ")");
    }
    try {
      engine.Step(record.actions);
    } catch (const Error& e) {
      throw Error(ErrorCode::kReplayDivergence, where + ": " + e.what());
    }
    for (const PlayerId p : record.coerced) engine.MarkCoerced(p);
    if (!(engine.history().back() == record)) {
      throw Error(ErrorCode::kReplayDivergence, where + ": recomputed outcome differs from the log");
    }
  }
  if (log.terminal != engine.terminal()) {
    throw Error(ErrorCode::kReplayDivergence, log.terminal ? "log is marked terminal but the game has not ended"
                                                           : "game ended but the log has no terminal marker");
  }
  return LogFromEngine(engine);
}

ExperimentPlan PlanFromJson(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kConfigInvalid, "plan must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> kKeys = {"model",       "seed",           "repeats",        "config",
                                                   "configs",     "temperatures",   "prompt_versions", "param_grid"};
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw Error(ErrorCode::kConfigInvalid, "unknown plan field '" + key + "'");
    }
  }
  ExperimentPlan plan;
  try {
    plan.model = j.value("model", plan.model);
    plan.repeats = j.value("repeats", 1);
    if (j.contains("config")) plan.bases.push_back(ConfigFromJson(j.at("config")));
    if (j.contains("configs")) {
      for (const auto& c : j.at("configs")) plan.bases.push_back(ConfigFromJson(c));
    }
    plan.seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>()
                                   : (plan.bases.empty() ? 0 : plan.bases.front().seed);
    const json temperatures = j.value("temperatures", json::array());
    for (const auto& t : temperatures) plan.temperatures.push_back(RationalFromJson(t));
    const json versions = j.value("prompt_versions", json::array());
    for (const auto& v : versions) {
      plan.prompt_versions.push_back(ParsePromptVersion(v.get<std::string>()));
    }
    const json grid = j.value("param_grid", json::object());
    for (const auto& [key, values] : grid.items()) {
      if (!values.is_array() || values.empty()) {
        throw Error(ErrorCode::kConfigInvalid, "param_grid." + key + " must be a non-empty array");
      }
      plan.param_grid[key] = values.get<std::vector<json>>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfigInvalid, std::string("plan: ") + e.what());
  }
  if (plan.bases.empty()) throw Error(ErrorCode::kConfigInvalid, "plan needs 'config' or 'configs'");
  if (plan.repeats < 1) throw Error(ErrorCode::kConfigInvalid, "repeats must be >= 1");
  return plan;
}

json PlanToJson(const ExperimentPlan& plan) {
  json configs = json::array();
  for (const auto& c : plan.bases) configs.push_back(ConfigToJson(c));
  json temperatures = json::array();
  for (const auto& t : plan.temperatures) temperatures.push_back(RationalToJson(t));
  json versions = json::array();
  for (const auto v : plan.prompt_versions) versions.push_back(PromptVersionName(v));
  json grid = json::object();
  for (const auto& [key, values] : plan.param_grid) grid[key] = values;
  return json{{"model", plan.model},     {"seed", plan.seed},           {"repeats", plan.repeats},
              {"configs", configs},      {"temperatures", temperatures}, {"prompt_versions", versions},
              {"param_grid", grid}};
}

ExperimentPlan LoadPlanFile(const fs::path& path) {
  const std::string text = ReadTextFile(path);
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kConfigInvalid, "plan file is not valid JSON: " + path.string());
  return PlanFromJson(j);
}

std::vector<Cell> EnumerateCells(const ExperimentPlan& plan) {
  // Cartesian product of the grid, keys in sorted order.
  std::vector<std::vector<std::pair<std::string, json>>> assignments{{}};
  for (const auto& [key, values] : plan.param_grid) {
    std::vector<std::vector<std::pair<std::string, json>>> next;
    for (const auto& partial : assignments) {
      for (const auto& value : values) {
        auto extended = partial;
        extended.emplace_back(key, value);
        next.push_back(std::move(extended));
      }
    }
    assignments = std::move(next);
  }

  std::map<GameKind, int> game_count;
  for (const auto& base : plan.bases) ++game_count[base.kind()];

  std::vector<Cell> cells;
  for (std::size_t b = 0; b < plan.bases.size(); ++b) {
    const MatchConfig& base = plan.bases[b];
    std::string base_label(GameKindName(base.kind()));
    if (game_count[base.kind()] > 1) base_label += "#" + std::to_string(b);
    const std::vector<std::optional<Rational>> temperatures =
        plan.temperatures.empty() ? std::vector<std::optional<Rational>>{std::nullopt}
                                  : std::vector<std::optional<Rational>>(plan.temperatures.begin(),
                                                                         plan.temperatures.end());
    const std::vector<std::optional<PromptVersion>> versions =
        plan.prompt_versions.empty()
            ? std::vector<std::optional<PromptVersion>>{std::nullopt}
            : std::vector<std::optional<PromptVersion>>(plan.prompt_versions.begin(), plan.prompt_versions.end());
    for (const auto& temperature : temperatures) {
      for (const auto& version : versions) {
        for (const auto& assignment : assignments) {
          MatchConfig config = WithAssignments(base, assignment);
          std::string coords;
          if (temperature) {
            config.temperature = *temperature;
            coords += "|temperature=" + FormatDecimal(*temperature, 2);
          }
          if (version) {
            config.prompt_version = *version;
            coords += "|prompt=" + PromptVersionName(*version);
          }
          for (const auto& [key, value] : assignment) coords += "|" + key + "=" + ValueLabel(value);
          for (int r = 0; r < plan.repeats; ++r) {
            Cell cell;
            cell.repeat = r;
            cell.group = plan.model + coords;
            cell.label = base_label + coords + "|r" + std::to_string(r);
            cell.config = config;
            cell.config.seed = DeriveSeed(plan.seed, base_label + coords, static_cast<std::uint64_t>(r));
            RequireValid(cell.config);
            cells.push_back(std::move(cell));
          }
        }
      }
    }
  }
  return cells;
}

ExperimentReport RunExperiment(const ExperimentPlan& plan, const ExperimentOptions& options) {
  const std::vector<Cell> cells = EnumerateCells(plan);
  ExperimentReport report;
  report.cells.resize(cells.size());

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell& cell = cells[i];
      try {
        const fs::path dir = options.out_dir.empty() ? fs::path() : options.out_dir / "cells" / SafeDirName(cell.label);
        if (!dir.empty()) {
          if (auto resumed = TryResume(cell, dir)) {
            report.cells[i] = std::move(*resumed);
            continue;
          }
        }
        RunOptions run;
        run.out_dir = dir;
        run.gateway = options.gateway;
        MatchResult match = RunMatch(cell.config, run);
        report.cells[i] = CellResult{cell, std::move(match.score), match.valid, false, match.failure};
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(cells.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<std::pair<std::string, ScoreReport>> scored;
  json cell_index = json::array();
  for (const CellResult& r : report.cells) {
    if (!r.valid) report.failed.push_back(r.cell.label);
    if (r.score) scored.emplace_back(r.cell.group, *r.score);
    json entry{{"label", r.cell.label}, {"group", r.cell.group}, {"repeat", r.cell.repeat},
               {"seed", r.cell.config.seed}, {"valid", r.valid}};
    if (r.score) entry["rescaled"] = RationalToJson(r.score->rescaled);
    if (!r.valid) entry["failure"] = r.failure;
    cell_index.push_back(std::move(entry));
  }
  report.leaderboard = BuildLeaderboard(scored);
  report.csv = LeaderboardCsv(report.leaderboard);
  if (!options.out_dir.empty()) {
    WriteTextFile(options.out_dir / "leaderboard.csv", report.csv);
    WriteTextFile(options.out_dir / "experiment.json",
                  json{{"plan", PlanToJson(plan)}, {"cells", cell_index}}.dump(2) + "\n");
  }
  return report;
}

}  // namespace gamebench
