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


// gamebench: run matches and sweeps, rescore or replay logs, serve sessions,
// print reference strategies.

#include <csignal>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gamebench/agents.hpp"
#include "gamebench/config.hpp"
#include "gamebench/error.hpp"
#include "gamebench/match_log.hpp"
#include "gamebench/orchestrator.hpp"
#include "gamebench/scoring.hpp"
#include "gamebench/service.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace gamebench;

// Config-field flags shared by run, sweep and oracle.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> prompt_version;
  std::optional<std::string> temperature;
  std::optional<int> n_players;
  std::optional<int> n_rounds;
  std::vector<std::string> params;  // key=value

  void Register(CLI::App* app, bool with_match_flags) {
    app->add_option("--seed", seed, "Base seed");
    if (with_match_flags) {
      app->add_option("--prompt-version", prompt_version, "Prompt version V1..V5");
      app->add_option("--temperature", temperature, "Sampling temperature in [0,1]");
    }
    app->add_option("--n-players,--n", n_players, "Number of players");
    app->add_option("--n-rounds,--rounds", n_rounds, "Number of rounds");
    app->add_option("--param", params, "Game parameter as key=value (repeatable)");
  }

  static json ParseValue(const std::string& text) {
    json value = json::parse(text, nullptr, false);
    return value.is_discarded() ? json(text) : value;
  }

  void Apply(json& config) const {
    if (seed) config["seed"] = *seed;
    if (prompt_version) config["prompt_version"] = *prompt_version;
    if (temperature) config["temperature"] = *temperature;
    if (n_rounds) config["n_rounds"] = *n_rounds;
    if (!config.contains("params")) config["params"] = json::object();
    for (const std::string& assignment : params) {
      const auto eq = assignment.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw Error(ErrorCode::kConfigInvalid, "--param expects key=value, got '" + assignment + "'");
      }
      config["params"][assignment.substr(0, eq)] = ParseValue(assignment.substr(eq + 1));
    }
    if (n_players && config.value("n_players", 10) != *n_players) {
      config["n_players"] = *n_players;
      ResizeRoster(config, *n_players);
      // Default hit rates follow the player count unless given explicitly.
      const bool explicit_rates = std::any_of(params.begin(), params.end(), [](const std::string& p) {
        return p.rfind("hit_rates=", 0) == 0;
      });
      if (!explicit_rates) config["params"].erase("hit_rates");
    }
  }

  // A roster made of one repeated seat spec is resized to n.
  static void ResizeRoster(json& config, int n) {
    if (!config.contains("agents") || !config["agents"].is_array() || config["agents"].empty()) return;
    json first = config["agents"].front();
    first.erase("count");
    for (json entry : config["agents"]) {
      entry.erase("count");
      if (entry != first) return;
    }
    first["count"] = n;
    config["agents"] = json::array({first});
  }
};

json ReadJsonFile(const std::string& path) {
  const json value = json::parse(ReadTextFile(path), nullptr, false);
  if (value.is_discarded()) throw Error(ErrorCode::kConfigInvalid, path + " is not valid JSON");
  return value;
}

std::string OneDecimal(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.1f", ToDouble(value));
  return buffer;
}

void PrintScore(const ScoreReport& report) {
  std::cout << "game: " << GameKindName(report.game) << "\n"
            << "raw: " << FormatDecimal(report.raw, 4) << "\n";
  for (const auto& [name, value] : report.components) std::cout << name << ": " << FormatDecimal(value, 4) << "\n";
  std::cout << "score: " << OneDecimal(report.rescaled) << "\n";
}

int Run(const std::string& config_path, const Overrides& overrides, const std::string& out_dir) {
  json config_json = ReadJsonFile(config_path);
  overrides.Apply(config_json);
  const MatchConfig config = ConfigFromJson(config_json);
  RequireValid(config);
  RunOptions options;
  options.out_dir = out_dir.empty() ? std::filesystem::path("runs") / RunId(config) : std::filesystem::path(out_dir);
  const MatchResult result = RunMatch(config, options);
  std::cout << "log: " << (options.out_dir / "log.jsonl").string() << "\n";
  if (result.score) std::cout << "score_report: " << (options.out_dir / "score.json").string() << "\n";
  std::cout << "manifest: " << (options.out_dir / "manifest.json").string() << "\n";
  if (!result.valid) {
    std::cerr << "error: match invalid: " << result.failure << "\n";
    return 1;
  }
  if (result.score) {
    PrintScore(*result.score);
  } else {
    std::cout << "score: not scored for this variant\n";
  }
  return 0;
}

int Sweep(const std::string& plan_path, const Overrides& overrides, int jobs, const std::string& out_dir) {
  json plan_json = ReadJsonFile(plan_path);
  if (overrides.seed) plan_json["seed"] = *overrides.seed;
  auto apply = [&](json& config) {
    Overrides per_config = overrides;
    per_config.seed.reset();
    per_config.Apply(config);
  };
  if (plan_json.contains("config")) apply(plan_json["config"]);
  if (plan_json.contains("configs")) {
    for (auto& c : plan_json["configs"]) apply(c);
  }
  const ExperimentPlan plan = PlanFromJson(plan_json);
  ExperimentOptions options;
  options.out_dir = out_dir.empty() ? std::filesystem::path("sweeps") / plan.model : std::filesystem::path(out_dir);
  options.jobs = jobs;
  const ExperimentReport report = RunExperiment(plan, options);
  std::cout << report.csv;
  std::cerr << "leaderboard: " << (options.out_dir / "leaderboard.csv").string() << "\n";
  int resumed = 0;
  for (const auto& cell : report.cells) resumed += cell.resumed ? 1 : 0;
  if (resumed) std::cerr << "resumed " << resumed << " of " << report.cells.size() << " cells\n";
  if (!report.failed.empty()) {
    std::cerr << "error: " << report.failed.size() << " cell(s) failed:\n";
    for (const auto& label : report.failed) std::cerr << "  " << label << "\n";
    return 1;
  }
  return 0;
}

int Score(const std::string& log_path, bool as_json) {
  const MatchLog log = ReadMatchLog(log_path);
  const ScoreReport report = ScoreMatch(log);
  if (as_json) {
    std::cout << ScoreReportToJson(report).dump(2) << "\n";
  } else {
    PrintScore(report);
  }
  return 0;
}

int Replay(const std::string& log_path) {
  const MatchLog log = ReadMatchLog(log_path);
  const MatchLog replayed = gamebench::Replay(log);
  if (SerializeMatchLog(replayed) != SerializeMatchLog(log)) {
    throw Error(ErrorCode::kReplayDivergence, "replayed log differs from " + log_path);
  }
  std::cout << "replay: " << replayed.rounds.size() << " records match\n";
  if (replayed.terminal && IsScored(replayed.config)) PrintScore(ScoreMatch(replayed));
  return 0;
}

HttpServer* g_server = nullptr;

int Serve(const std::string& bind) {
  const auto [host, port] = ParseBindAddress(bind);
  SessionService service;
  HttpServer server(service);
  const int bound = port == 0 ? server.BindToAnyPort(host) : server.Bind(host, port);
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->Stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_server) g_server->Stop();
  });
  std::cerr << "listening on " << host << ":" << bound << "\n";
  server.Listen();
  g_server = nullptr;
  return 0;
}

int Oracle(const std::string& game, const Overrides& overrides) {
  json config_json = ConfigToJson(VanillaConfig(ParseGameKind(game)));
  overrides.Apply(config_json);
  const MatchConfig config = ConfigFromJson(config_json);
  RequireValid(config);
  std::cout << ReferenceStrategyText(config) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-agent game benchmark"};
  app.require_subcommand(1);

  Overrides run_flags;
  std::string run_config;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Run one match from a config file");
  run->add_option("config,--config", run_config, "Config file (JSON)");
  run->add_option("--out-dir", out_dir, "Output directory (default runs/<run id>)");
  run_flags.Register(run, true);

  Overrides sweep_flags;
  std::string plan_path;
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "Run an experiment plan and write a leaderboard");
  sweep->add_option("plan,--plan", plan_path, "Plan file (JSON)");
  sweep->add_option("--jobs,-j", jobs, "Matches run in parallel")->check(CLI::PositiveNumber);
  sweep->add_option("--out-dir", out_dir, "Output directory (default sweeps/<model>)");
  sweep_flags.Register(sweep, true);

  std::string log_path;
  bool as_json = false;
  auto* score = app.add_subcommand("score", "Recompute the score of a match log");
  score->add_option("log", log_path, "Match log (JSONL)")->required();
  score->add_flag("--json", as_json, "Print the full score report");

  auto* replay = app.add_subcommand("replay", "Re-resolve a match log and check it matches");
  replay->add_option("log", log_path, "Match log (JSONL)")->required();

  std::string bind = "127.0.0.1:8080";
  auto* serve = app.add_subcommand("serve", "Serve sessions over HTTP");
  serve->add_option("bind,--bind", bind, "host:port");

  Overrides oracle_flags;
  std::string game;
  std::optional<std::int64_t> gold;
  auto* oracle = app.add_subcommand("oracle", "Print the reference strategy for a game");
  oracle->add_option("game", game, "Game name")->required();
  oracle->add_option("--gold", gold, "Gold (dollar and pirate games)");
  oracle_flags.Register(oracle, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      if (run_config.empty()) {
        std::cerr << "error: run needs a config file\n";
        return 2;
      }
      return Run(run_config, run_flags, out_dir);
    }
    if (*sweep) {
      if (plan_path.empty()) {
        std::cerr << "error: sweep needs a plan file\n";
        return 2;
      }
      return Sweep(plan_path, sweep_flags, jobs, out_dir);
    }
    if (*score) return Score(log_path, as_json);
    if (*replay) return Replay(log_path);
    if (*serve) return Serve(bind);
    if (*oracle) {
      if (gold) oracle_flags.params.push_back("gold=" + std::to_string(*gold));
      return Oracle(game, oracle_flags);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
