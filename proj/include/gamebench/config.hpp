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

#ifndef GAMEBENCH_CONFIG_HPP_
#define GAMEBENCH_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "gamebench/types.hpp"
#include "json.hpp"

namespace gamebench {

enum class ViolationCode {
  kRosterSizeMismatch,
  kTooFewPlayers,
  kBadRoundCount,
  kDegenerateRange,
  kNegativeRatio,
  kRatioOutOfRange,
  kUtilityOrdering,
  kNonPositive,
  kDinerPriceOrdering,
  kDinerUtilityOrdering,
  kDinerAssumption1,
  kDinerAssumption2,
  kHitRateCount,
  kHitRateOutOfRange,
  kTemperatureOutOfRange,
  kUnknownStrategy,
  kStrategyNotApplicable,
  kMissingEndpoint,
  kMissingValue,
  kClassicalRangeWarning,
};

std::string_view ViolationCodeName(ViolationCode code);

struct Violation {
  std::string field;  // e.g. "params.price_costly", "agents[3].strategy"
  ViolationCode code;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> errors;
  std::vector<Violation> warnings;
  bool ok() const { return errors.empty(); }
  std::string Summary() const;
};

ValidationResult ValidateConfig(const MatchConfig& config);

// Whether a kStrategyCatalog entry can play the given game.
bool StrategyAppliesTo(std::string_view strategy, GameKind kind);

// Returns the config unchanged, or throws Error(kConfigInvalid) listing every
// violation.
const MatchConfig& RequireValid(const MatchConfig& config);

// Canonical JSON: keys sorted, rationals as strings ("2/3"), player-facing
// defaults written out explicitly. ConfigFromJson(ConfigToJson(c)) == c.
nlohmann::json ConfigToJson(const MatchConfig& config);
// Accepts rationals as strings ("3/5", "0.6", "60%") or JSON numbers, and
// agents[] entries with a "count" field that expands into repeated seats.
// An absent agents[] means an all-oracle roster. Throws Error(kConfigInvalid)
// on schema problems; semantic checks are left to ValidateConfig.
MatchConfig ConfigFromJson(const nlohmann::json& json);

nlohmann::json AgentSpecToJson(const AgentSpec& spec);
AgentSpec AgentSpecFromJson(const nlohmann::json& json);

nlohmann::json ParamsToJson(const GameParams& params);
GameParams ParamsFromJson(GameKind kind, const nlohmann::json& json, int n_players);

MatchConfig LoadConfigFile(const std::filesystem::path& path);

// Rational fields may appear as JSON strings or numbers.
Rational RationalFromJson(const nlohmann::json& json);
inline nlohmann::json RationalToJson(const Rational& value) { return RationalToString(value); }

}  // namespace gamebench

#endif  // GAMEBENCH_CONFIG_HPP_
