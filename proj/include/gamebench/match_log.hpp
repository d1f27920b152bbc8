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


#ifndef GAMEBENCH_MATCH_LOG_HPP_
#define GAMEBENCH_MATCH_LOG_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gamebench/games.hpp"
#include "gamebench/types.hpp"
#include "json.hpp"

namespace gamebench {

// Append-only record of one match. Serialized as JSONL: a header line
// {"config": ...}, one line per round, and a closing {"terminal": true, ...}
// line once the game has ended.
struct MatchLog {
  MatchConfig config;
  std::vector<RoundRecord> rounds;
  bool terminal = false;
};

nlohmann::json RoundRecordToJson(const RoundRecord& record);
RoundRecord RoundRecordFromJson(const nlohmann::json& json);

// Canonical serialization; byte-identical for equal logs.
std::string SerializeMatchLog(const MatchLog& log);
// Throws Error(kMalformedLog) with the offending line number.
MatchLog ParseMatchLog(std::string_view text);

void WriteMatchLog(const std::filesystem::path& path, const MatchLog& log);
MatchLog ReadMatchLog(const std::filesystem::path& path);

// Builds a log from an engine's history.
MatchLog LogFromEngine(const GameEngine& engine);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace gamebench

#endif  // GAMEBENCH_MATCH_LOG_HPP_
