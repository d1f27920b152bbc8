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

#include "gamebench/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "gamebench/detail/overloaded.hpp"
#include "gamebench/error.hpp"

namespace gamebench {

using detail::Overloaded;
using nlohmann::json;

std::string_view ViolationCodeName(ViolationCode code) {
  switch (code) {
    case ViolationCode::kRosterSizeMismatch: return "RosterSizeMismatch";
    case ViolationCode::kTooFewPlayers: return "TooFewPlayers";
    case ViolationCode::kBadRoundCount: return "BadRoundCount";
    case ViolationCode::kDegenerateRange: return "DegenerateRange";
    case ViolationCode::kNegativeRatio: return "NegativeRatio";
    case ViolationCode::kRatioOutOfRange: return "RatioOutOfRange";
    case ViolationCode::kUtilityOrdering: return "UtilityOrdering";
    case ViolationCode::kNonPositive: return "NonPositive";
    case ViolationCode::kDinerPriceOrdering: return "DinerPriceOrdering";
    case ViolationCode::kDinerUtilityOrdering: return "DinerUtilityOrdering";
    case ViolationCode::kDinerAssumption1: return "DinerAssumptionViolated(1)";
    case ViolationCode::kDinerAssumption2: return "DinerAssumptionViolated(2)";
    case ViolationCode::kHitRateCount: return "HitRateCount";
    case ViolationCode::kHitRateOutOfRange: return "HitRateOutOfRange";
    case ViolationCode::kTemperatureOutOfRange: return "TemperatureOutOfRange";
    case ViolationCode::kUnknownStrategy: return "UnknownStrategy";
    case ViolationCode::kStrategyNotApplicable: return "StrategyNotApplicable";
    case ViolationCode::kMissingEndpoint: return "MissingEndpoint";
    case ViolationCode::kMissingValue: return "MissingValue";
    case ViolationCode::kClassicalRangeWarning: return "ClassicalRangeWarning";
  }
  return "Unknown";
}

std::string ValidationResult::Summary() const {
  std::ostringstream out;
  for (const auto& v : errors) {
    out << v.field << ": " << ViolationCodeName(v.code) << ": " << v.message << "\n";
  }
  return out.str();
}

bool StrategyAppliesTo(std::string_view strategy, GameKind kind) {
  if (strategy == "oracle" || strategy == "random") return true;
  if (strategy == "constant_bid") {
    return kind == GameKind::kDivideDollar || kind == GameKind::kSealedBidAuction;
  }
  if (strategy == "free_rider") return kind == GameKind::kPublicGoods;
  if (strategy == "always_go" || strategy == "always_stay" || strategy == "rotation_bar") {
    return kind == GameKind::kElFarolBar;
  }
  if (strategy == "truthful_bidder" || strategy == "zero_bidder") {
    return kind == GameKind::kSealedBidAuction;
  }
  return false;
}

namespace {

class Collector {
 public:
  void AddError(std::string field, ViolationCode code, std::string message) {
    result.errors.push_back({std::move(field), code, std::move(message)});
  }
  void AddWarning(std::string field, ViolationCode code, std::string message) {
    result.warnings.push_back({std::move(field), code, std::move(message)});
  }
  ValidationResult result;
};

void ValidateParams(const MatchConfig& config, Collector& out) {
  const int n = config.n_players;
  std::visit(
      Overloaded{
          [&](const GuessParams& p) {
            if (p.min >= p.max) {
              out.AddError("params.min", ViolationCode::kDegenerateRange,
                        "min (" + std::to_string(p.min) + ") must be below max (" +
                            std::to_string(p.max) + ")");
            }
            if (p.ratio < 0) out.AddError("params.ratio", ViolationCode::kNegativeRatio, "ratio must be >= 0");
          },
          [&](const BarParams& p) {
            if (p.capacity_ratio < 0 || p.capacity_ratio > 1) {
              out.AddError("params.capacity_ratio", ViolationCode::kRatioOutOfRange,
                        "capacity ratio must lie in [0,1]");
            }
            const bool ordered = p.u_go_crowded < p.u_home && p.u_home < p.u_go_uncrowded;
            if (!ordered && !p.allow_nonstandard_utilities) {
              out.AddError("params.u_home", ViolationCode::kUtilityOrdering,
                        "expected u_go_crowded < u_home < u_go_uncrowded");
            }
          },
          [&](const DollarParams& p) {
            if (p.gold < 1) out.AddError("params.gold", ViolationCode::kNonPositive, "gold must be >= 1");
          },
          [&](const PublicGoodsParams& p) {
            if (p.multiplier < 0) {
              out.AddError("params.multiplier", ViolationCode::kNegativeRatio, "multiplier must be >= 0");
            } else if (!(p.multiplier > 1 && p.multiplier < n)) {
              out.AddWarning("params.multiplier", ViolationCode::kClassicalRangeWarning,
                       "classical setting has 1 < R < N");
            }
            if (p.endowment < 1) {
              out.AddError("params.endowment", ViolationCode::kNonPositive, "endowment must be >= 1");
            }
          },
          [&](const DinerParams& p) {
            for (auto [name, v] : {std::pair{"params.price_costly", &p.price_costly},
                                   std::pair{"params.price_cheap", &p.price_cheap},
                                   std::pair{"params.utility_costly", &p.utility_costly},
                                   std::pair{"params.utility_cheap", &p.utility_cheap}}) {
              if (*v <= 0) out.AddError(name, ViolationCode::kNonPositive, "must be positive");
            }
            if (!(p.price_costly > p.price_cheap)) {
              out.AddError("params.price_costly", ViolationCode::kDinerPriceOrdering,
                        "costly price must exceed cheap price");
            }
            if (!(p.utility_costly > p.utility_cheap)) {
              out.AddError("params.utility_costly", ViolationCode::kDinerUtilityOrdering,
                        "costly utility must exceed cheap utility");
            }
            if (!(p.utility_costly - p.price_costly < p.utility_cheap - p.price_cheap)) {
              out.AddError("params", ViolationCode::kDinerAssumption1, "requires a - x < b - y");
            }
            if (n >= 1 && !(p.utility_costly - p.price_costly / n > p.utility_cheap - p.price_cheap / n)) {
              out.AddError("params", ViolationCode::kDinerAssumption2, "requires a - x/N > b - y/N");
            }
          },
          [&](const AuctionParams& p) {
            if (p.valuation_max < 1) {
              out.AddError("params.valuation_max", ViolationCode::kNonPositive, "valuation_max must be >= 1");
            }
          },
          [&](const RoyaleParams& p) {
            if (static_cast<int>(p.hit_rates.size()) != n) {
              out.AddError("params.hit_rates", ViolationCode::kHitRateCount,
                        "need one hit rate per player (" + std::to_string(n) + "), got " +
                            std::to_string(p.hit_rates.size()));
            }
            for (std::size_t i = 0; i < p.hit_rates.size(); ++i) {
              if (p.hit_rates[i] <= 0 || p.hit_rates[i] >= 1) {
                out.AddError("params.hit_rates[" + std::to_string(i) + "]", ViolationCode::kHitRateOutOfRange,
                          "hit rates must lie strictly inside (0,1)");
              }
            }
            if (p.max_turns < 1) {
              out.AddError("params.max_turns", ViolationCode::kNonPositive, "max_turns must be >= 1");
            }
          },
          [&](const PirateParams& p) {
            if (p.gold < 0) out.AddError("params.gold", ViolationCode::kNonPositive, "gold must be >= 0");
          },
      },
      config.params);
}

void ValidateRoster(const MatchConfig& config, Collector& out) {
  const GameKind kind = config.kind();
  for (std::size_t i = 0; i < config.roster.size(); ++i) {
    const AgentSpec& spec = config.roster[i];
    const std::string field = "agents[" + std::to_string(i) + "]";
    switch (spec.kind) {
      case AgentKind::kFixed: {
        const bool known = std::find(kStrategyCatalog.begin(), kStrategyCatalog.end(), spec.strategy) !=
                           kStrategyCatalog.end();
        if (!known) {
          out.AddError(field + ".strategy", ViolationCode::kUnknownStrategy,
                    "unknown strategy '" + spec.strategy + "'");
        } else if (!StrategyAppliesTo(spec.strategy, kind)) {
          out.AddError(field + ".strategy", ViolationCode::kStrategyNotApplicable,
                    "'" + spec.strategy + "' cannot play " + std::string(GameKindName(kind)));
        } else if (spec.strategy == "constant_bid" && (!spec.value || *spec.value < 0)) {
          out.AddError(field + ".value", ViolationCode::kMissingValue, "constant_bid needs a non-negative value");
        }
        break;
      }
      case AgentKind::kOracle:
        if (spec.bid_fraction < 0 || spec.bid_fraction > 1) {
          out.AddError(field + ".bid_fraction", ViolationCode::kRatioOutOfRange, "bid_fraction must lie in [0,1]");
        }
        break;
      case AgentKind::kLlm:
        if (!spec.endpoint || spec.endpoint->base_url.empty()) {
          out.AddError(field + ".endpoint", ViolationCode::kMissingEndpoint, "llm seat needs endpoint.base_url");
        } else if (spec.endpoint->temperature &&
                   (*spec.endpoint->temperature < 0 || *spec.endpoint->temperature > 1)) {
          out.AddError(field + ".endpoint.temperature", ViolationCode::kTemperatureOutOfRange,
                    "temperature must lie in [0,1]");
        }
        break;
      case AgentKind::kScripted:
        if (spec.script.empty()) {
          out.AddError(field + ".actions", ViolationCode::kMissingValue, "scripted seat needs actions");
        }
        break;
      case AgentKind::kRandom:
      case AgentKind::kHuman:
        break;
    }
  }
}

}  // namespace

ValidationResult ValidateConfig(const MatchConfig& config) {
  Collector out;
  if (config.n_players < 2) {
    out.AddError("n_players", ViolationCode::kTooFewPlayers, "need at least two players");
  }
  if (IsSimultaneous(config.kind()) && config.n_rounds < 1) {
    out.AddError("n_rounds", ViolationCode::kBadRoundCount, "need at least one round");
  }
  if (static_cast<int>(config.roster.size()) != config.n_players) {
    out.AddError("agents", ViolationCode::kRosterSizeMismatch,
              "roster has " + std::to_string(config.roster.size()) + " entries but n_players is " +
                  std::to_string(config.n_players));
  }
  if (config.temperature < 0 || config.temperature > 1) {
    out.AddError("temperature", ViolationCode::kTemperatureOutOfRange, "temperature must lie in [0,1]");
  }
  ValidateParams(config, out);
  ValidateRoster(config, out);
  return out.result;
}

const MatchConfig& RequireValid(const MatchConfig& config) {
  ValidationResult result = ValidateConfig(config);
  if (!result.ok()) throw Error(ErrorCode::kConfigInvalid, "invalid config:\n" + result.Summary());
  return config;
}

// ---------------------------------------------------------------------------
// JSON

Rational RationalFromJson(const json& j) {
  try {
    if (j.is_string()) return ParseRational(j.get<std::string>());
    if (j.is_number_integer()) {
      return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
    }
    if (j.is_number_float()) {
      // Shortest round-trip decimal, then exact parse: 0.6 -> 3/5.
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof(buf), j.get<double>());
      std::string text(buf, res.ptr);
      if (text.find_first_of("eE") != std::string::npos) {
        std::ostringstream fixed;
        fixed.precision(17);
        fixed << std::fixed << j.get<double>();
        text = fixed.str();
      }
      return ParseRational(text);
    }
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::kConfigInvalid, e.what());
  }
  throw Error(ErrorCode::kConfigInvalid, "expected a rational, got " + j.dump());
}

namespace {

void RejectUnknownKeys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorCode::kConfigInvalid, "unknown field '" + key + "' in " + where);
    }
  }
}

template <typename T>
T Field(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfigInvalid, std::string("field '") + key + "': " + e.what());
  }
}

Rational RationalField(const json& j, const char* key, const Rational& fallback) {
  if (!j.contains(key)) return fallback;
  return RationalFromJson(j.at(key));
}

std::string_view InformedName(InformedSetting s) {
  switch (s) {
    case InformedSetting::kNone: return "none";
    case InformedSetting::kToldOthersPlayEquilibrium: return "equilibrium";
    case InformedSetting::kToldOthersSmart: return "smart";
    case InformedSetting::kToldOthersRandom: return "random";
  }
  return "none";
}

InformedSetting ParseInformed(std::string_view name) {
  for (auto s : {InformedSetting::kNone, InformedSetting::kToldOthersPlayEquilibrium,
                 InformedSetting::kToldOthersSmart, InformedSetting::kToldOthersRandom}) {
    if (InformedName(s) == name) return s;
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown informed setting '" + std::string(name) + "'");
}

}  // namespace

json ParamsToJson(const GameParams& params) {
  return std::visit(
      Overloaded{
          [](const GuessParams& p) {
            return json{{"min", p.min}, {"max", p.max}, {"ratio", RationalToJson(p.ratio)}};
          },
          [](const BarParams& p) {
            return json{{"capacity_ratio", RationalToJson(p.capacity_ratio)},
                        {"u_go_uncrowded", RationalToJson(p.u_go_uncrowded)},
                        {"u_go_crowded", RationalToJson(p.u_go_crowded)},
                        {"u_home", RationalToJson(p.u_home)},
                        {"info_mode", p.info_mode == InfoMode::kExplicit ? "explicit" : "implicit"},
                        {"allow_nonstandard_utilities", p.allow_nonstandard_utilities}};
          },
          [](const DollarParams& p) { return json{{"gold", p.gold}}; },
          [](const PublicGoodsParams& p) {
            return json{{"multiplier", RationalToJson(p.multiplier)},
                        {"endowment", p.endowment},
                        {"fresh_endowment", p.fresh_endowment}};
          },
          [](const DinerParams& p) {
            return json{{"price_costly", RationalToJson(p.price_costly)},
                        {"price_cheap", RationalToJson(p.price_cheap)},
                        {"utility_costly", RationalToJson(p.utility_costly)},
                        {"utility_cheap", RationalToJson(p.utility_cheap)}};
          },
          [](const AuctionParams& p) {
            return json{{"pricing", p.pricing == Pricing::kFirstPrice ? "first_price" : "second_price"},
                        {"valuation_max", p.valuation_max}};
          },
          [](const RoyaleParams& p) {
            json rates = json::array();
            for (const auto& r : p.hit_rates) rates.push_back(RationalToJson(r));
            return json{{"hit_rates", rates},
                        {"max_turns", p.max_turns},
                        {"allow_self_target", p.allow_self_target}};
          },
          [](const PirateParams& p) { return json{{"gold", p.gold}}; },
      },
      params);
}

GameParams ParamsFromJson(GameKind kind, const json& j, int n_players) {
  if (!j.is_object()) throw Error(ErrorCode::kConfigInvalid, "params must be an object");
  switch (kind) {
    case GameKind::kGuessAverage: {
      RejectUnknownKeys(j, {"min", "max", "ratio"}, "params");
      GuessParams p;
      p.min = Field<std::int64_t>(j, "min", p.min);
      p.max = Field<std::int64_t>(j, "max", p.max);
      p.ratio = RationalField(j, "ratio", p.ratio);
      return p;
    }
    case GameKind::kElFarolBar: {
      RejectUnknownKeys(j,
                        {"capacity_ratio", "u_go_uncrowded", "u_go_crowded", "u_home", "info_mode",
                         "allow_nonstandard_utilities"},
                        "params");
      BarParams p;
      p.capacity_ratio = RationalField(j, "capacity_ratio", p.capacity_ratio);
      p.u_go_uncrowded = RationalField(j, "u_go_uncrowded", p.u_go_uncrowded);
      p.u_go_crowded = RationalField(j, "u_go_crowded", p.u_go_crowded);
      p.u_home = RationalField(j, "u_home", p.u_home);
      const std::string mode = Field<std::string>(j, "info_mode", "implicit");
      if (mode != "implicit" && mode != "explicit") {
        throw Error(ErrorCode::kConfigInvalid, "info_mode must be implicit|explicit");
      }
      p.info_mode = mode == "explicit" ? InfoMode::kExplicit : InfoMode::kImplicit;
      p.allow_nonstandard_utilities = Field<bool>(j, "allow_nonstandard_utilities", false);
      return p;
    }
    case GameKind::kDivideDollar: {
      RejectUnknownKeys(j, {"gold"}, "params");
      DollarParams p;
      p.gold = Field<std::int64_t>(j, "gold", p.gold);
      return p;
    }
    case GameKind::kPublicGoods: {
      RejectUnknownKeys(j, {"multiplier", "endowment", "fresh_endowment"}, "params");
      PublicGoodsParams p;
      p.multiplier = RationalField(j, "multiplier", p.multiplier);
      p.endowment = Field<std::int64_t>(j, "endowment", p.endowment);
      p.fresh_endowment = Field<bool>(j, "fresh_endowment", p.fresh_endowment);
      return p;
    }
    case GameKind::kDinersDilemma: {
      RejectUnknownKeys(j, {"price_costly", "price_cheap", "utility_costly", "utility_cheap"}, "params");
      DinerParams p;
      p.price_costly = RationalField(j, "price_costly", p.price_costly);
      p.price_cheap = RationalField(j, "price_cheap", p.price_cheap);
      p.utility_costly = RationalField(j, "utility_costly", p.utility_costly);
      p.utility_cheap = RationalField(j, "utility_cheap", p.utility_cheap);
      return p;
    }
    case GameKind::kSealedBidAuction: {
      RejectUnknownKeys(j, {"pricing", "valuation_max"}, "params");
      AuctionParams p;
      const std::string pricing = Field<std::string>(j, "pricing", "first_price");
      if (pricing != "first_price" && pricing != "second_price") {
        throw Error(ErrorCode::kConfigInvalid, "pricing must be first_price|second_price");
      }
      p.pricing = pricing == "first_price" ? Pricing::kFirstPrice : Pricing::kSecondPrice;
      p.valuation_max = Field<std::int64_t>(j, "valuation_max", p.valuation_max);
      return p;
    }
    case GameKind::kBattleRoyale: {
      RejectUnknownKeys(j, {"hit_rates", "max_turns", "allow_self_target"}, "params");
      RoyaleParams p;
      if (j.contains("hit_rates")) {
        if (!j.at("hit_rates").is_array()) throw Error(ErrorCode::kConfigInvalid, "hit_rates must be an array");
        for (const auto& r : j.at("hit_rates")) p.hit_rates.push_back(RationalFromJson(r));
      } else {
        p.hit_rates = DefaultHitRates(n_players);
      }
      p.max_turns = Field<int>(j, "max_turns", p.max_turns);
      p.allow_self_target = Field<bool>(j, "allow_self_target", false);
      return p;
    }
    case GameKind::kPirateGame: {
      RejectUnknownKeys(j, {"gold"}, "params");
      PirateParams p;
      p.gold = Field<std::int64_t>(j, "gold", p.gold);
      return p;
    }
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown game kind");
}

json AgentSpecToJson(const AgentSpec& spec) {
  json j{{"kind", std::string(AgentKindName(spec.kind))}};
  if (!spec.strategy.empty()) j["strategy"] = spec.strategy;
  if (spec.value) j["value"] = *spec.value;
  if (spec.bid_fraction != 0) j["bid_fraction"] = RationalToJson(spec.bid_fraction);
  if (spec.endpoint) {
    const auto& e = *spec.endpoint;
    json ej{{"base_url", e.base_url},
            {"model", e.model},
            {"credential_env", e.credential_env},
            {"timeout_ms", e.timeout_ms},
            {"max_retries", e.max_retries}};
    if (e.temperature) ej["temperature"] = RationalToJson(*e.temperature);
    j["endpoint"] = ej;
  }
  if (!spec.persona.empty()) j["persona"] = spec.persona;
  if (spec.chain_of_thought) j["chain_of_thought"] = true;
  if (spec.informed != InformedSetting::kNone) j["informed"] = std::string(InformedName(spec.informed));
  if (!spec.script.empty()) {
    json actions = json::array();
    for (const auto& a : spec.script) actions.push_back(ActionToJson(a));
    j["actions"] = actions;
  }
  if (spec.move_timeout_ms) j["move_timeout_ms"] = *spec.move_timeout_ms;
  if (!spec.label.empty()) j["label"] = spec.label;
  return j;
}

AgentSpec AgentSpecFromJson(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kConfigInvalid, "agent entry must be an object");
  RejectUnknownKeys(j,
                    {"kind", "strategy", "value", "bid_fraction", "endpoint", "persona", "chain_of_thought",
                     "informed", "actions", "move_timeout_ms", "label", "count"},
                    "agent entry");
  AgentSpec spec;
  spec.kind = ParseAgentKind(Field<std::string>(j, "kind", "oracle"));
  spec.strategy = Field<std::string>(j, "strategy", "");
  if (j.contains("value")) spec.value = Field<std::int64_t>(j, "value", 0);
  spec.bid_fraction = RationalField(j, "bid_fraction", 0);
  if (j.contains("endpoint")) {
    const json& ej = j.at("endpoint");
    if (!ej.is_object()) throw Error(ErrorCode::kConfigInvalid, "endpoint must be an object");
    RejectUnknownKeys(ej, {"base_url", "model", "credential_env", "temperature", "timeout_ms", "max_retries"},
                      "endpoint");
    EndpointDescriptor e;
    e.base_url = Field<std::string>(ej, "base_url", "");
    e.model = Field<std::string>(ej, "model", "");
    e.credential_env = Field<std::string>(ej, "credential_env", "");
    if (ej.contains("temperature")) e.temperature = RationalFromJson(ej.at("temperature"));
    e.timeout_ms = Field<int>(ej, "timeout_ms", e.timeout_ms);
    e.max_retries = Field<int>(ej, "max_retries", e.max_retries);
    spec.endpoint = e;
  }
  spec.persona = Field<std::string>(j, "persona", "");
  spec.chain_of_thought = Field<bool>(j, "chain_of_thought", false);
  spec.informed = ParseInformed(Field<std::string>(j, "informed", "none"));
  if (j.contains("actions")) {
    if (!j.at("actions").is_array()) throw Error(ErrorCode::kConfigInvalid, "actions must be an array");
    for (const auto& a : j.at("actions")) {
      try {
        spec.script.push_back(ActionFromJson(a));
      } catch (const gamebench::Error& e) {
        throw gamebench::Error(ErrorCode::kConfigInvalid, e.what());
      }
    }
  }
  if (j.contains("move_timeout_ms")) spec.move_timeout_ms = Field<int>(j, "move_timeout_ms", 0);
  spec.label = Field<std::string>(j, "label", "");
  return spec;
}

json ConfigToJson(const MatchConfig& config) {
  json agents = json::array();
  for (const auto& spec : config.roster) agents.push_back(AgentSpecToJson(spec));
  return json{{"game", std::string(GameKindName(config.kind()))},
              {"params", ParamsToJson(config.params)},
              {"n_players", config.n_players},
              {"n_rounds", config.n_rounds},
              {"seed", config.seed},
              {"prompt_version", PromptVersionName(config.prompt_version)},
              {"temperature", RationalToJson(config.temperature)},
              {"agents", agents}};
}

MatchConfig ConfigFromJson(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kConfigInvalid, "config must be a JSON object");
  RejectUnknownKeys(j, {"game", "params", "n_players", "n_rounds", "seed", "prompt_version", "temperature", "agents"},
                    "config");
  if (!j.contains("game")) throw Error(ErrorCode::kConfigInvalid, "config needs a 'game' field");
  MatchConfig config;
  const GameKind kind = ParseGameKind(Field<std::string>(j, "game", ""));
  config.n_players = Field<int>(j, "n_players", config.n_players);
  config.n_rounds = Field<int>(j, "n_rounds", config.n_rounds);
  config.params = ParamsFromJson(kind, j.value("params", json::object()), config.n_players);
  config.seed = Field<std::uint64_t>(j, "seed", 0);
  config.prompt_version = ParsePromptVersion(Field<std::string>(j, "prompt_version", "V1"));
  config.temperature = RationalField(j, "temperature", 1);
  if (j.contains("agents")) {
    if (!j.at("agents").is_array()) throw Error(ErrorCode::kConfigInvalid, "agents must be an array");
    for (const auto& entry : j.at("agents")) {
      AgentSpec spec = AgentSpecFromJson(entry);
      const int count = Field<int>(entry, "count", 1);
      if (count < 0) throw Error(ErrorCode::kConfigInvalid, "count must be >= 0");
      for (int i = 0; i < count; ++i) config.roster.push_back(spec);
    }
  } else {
    config.roster.assign(static_cast<std::size_t>(std::max(config.n_players, 0)), AgentSpec{});
  }
  return config;
}

MatchConfig LoadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfigInvalid, path.string() + ": " + e.what());
  }
  return ConfigFromJson(j);
}

}  // namespace gamebench
