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


#include "gamebench/match_log.hpp"

#include <fstream>
#include <sstream>

#include "gamebench/config.hpp"
#include "gamebench/error.hpp"

namespace gamebench {

using nlohmann::json;

json RoundRecordToJson(const RoundRecord& record) {
  json actions = json::object();
  for (const auto& [player, action] : record.actions) actions[std::to_string(player)] = ActionToJson(action);
  return json{{"round", record.round},
              {"phase", StepKindName(record.phase)},
              {"actions", std::move(actions)},
              {"outcome", OutcomeToJson(record.outcome)},
              {"coerced", record.coerced}};
}

RoundRecord RoundRecordFromJson(const json& j) {
  try {
    RoundRecord record;
    record.round = j.at("round").get<int>();
    record.phase = ParseStepKind(j.at("phase").get<std::string>());
    for (const auto& [key, value] : j.at("actions").items()) {
      std::size_t used = 0;
      const int player = std::stoi(key, &used);
      if (used != key.size()) throw Error(ErrorCode::kMalformedLog, "bad player key '" + key + "'");
      record.actions.emplace(player, ActionFromJson(value));
    }
    record.outcome = OutcomeFromJson(j.at("outcome"));
    if (j.contains("coerced")) record.coerced = j.at("coerced").get<std::vector<PlayerId>>();
    return record;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedLog, std::string("round record: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kMalformedLog, "round record: player keys must be integers");
  }
}

std::string SerializeMatchLog(const MatchLog& log) {
  std::string out = json{{"config", ConfigToJson(log.config)}}.dump() + "\n";
  for (const auto& record : log.rounds) out += RoundRecordToJson(record).dump() + "\n";
  if (log.terminal) out += json{{"terminal", true}, {"records", log.rounds.size()}}.dump() + "\n";
  return out;
}

MatchLog ParseMatchLog(std::string_view text) {
  MatchLog log;
  bool have_config = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kMalformedLog, where + e.what());
    }
    try {
      if (!have_config) {
        if (!j.contains("config")) throw Error(ErrorCode::kMalformedLog, "first line must hold the config");
        log.config = ConfigFromJson(j.at("config"));
        have_config = true;
      } else if (j.contains("terminal")) {
        log.terminal = j.at("terminal").get<bool>();
      } else {
        if (log.terminal) throw Error(ErrorCode::kMalformedLog, "round record after terminal marker");
        log.rounds.push_back(RoundRecordFromJson(j));
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedLog, where + e.what());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kMalformedLog, where + e.what());
    }
  }
  if (!have_config) throw Error(ErrorCode::kMalformedLog, "log is empty");
  return log;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "': no such file or not readable");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

void WriteMatchLog(const std::filesystem::path& path, const MatchLog& log) {
  WriteTextFile(path, SerializeMatchLog(log));
}

MatchLog ReadMatchLog(const std::filesystem::path& path) { return ParseMatchLog(ReadTextFile(path)); }

MatchLog LogFromEngine(const GameEngine& engine) {
  return MatchLog{engine.config(), engine.history(), engine.terminal()};
}

}  // namespace gamebench
