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

#ifndef GAMEBENCH_TYPES_HPP_
#define GAMEBENCH_TYPES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gamebench/action.hpp"
#include "gamebench/rational.hpp"

namespace gamebench {

enum class GameKind {
  kGuessAverage,
  kElFarolBar,
  kDivideDollar,
  kPublicGoods,
  kDinersDilemma,
  kSealedBidAuction,
  kBattleRoyale,
  kPirateGame,
};

inline constexpr std::array<GameKind, 8> kAllGames = {
    GameKind::kGuessAverage,  GameKind::kElFarolBar,       GameKind::kDivideDollar,
    GameKind::kPublicGoods,   GameKind::kDinersDilemma,    GameKind::kSealedBidAuction,
    GameKind::kBattleRoyale,  GameKind::kPirateGame,
};

// Stable identifiers: guess_average, el_farol_bar, divide_dollar, public_goods,
// diners_dilemma, sealed_bid_auction, battle_royale, pirate_game.
std::string_view GameKindName(GameKind kind);
// Also accepts short aliases (guess, bar, dollar, pgg, diner, auction, royale, pirate).
GameKind ParseGameKind(std::string_view name);

// Sequential games terminate by rule; simultaneous games run n_rounds.
bool IsSimultaneous(GameKind kind);

enum class PromptVersion { kV1 = 1, kV2, kV3, kV4, kV5 };
std::string PromptVersionName(PromptVersion version);
PromptVersion ParsePromptVersion(std::string_view name);

struct GuessParams {
  std::int64_t min = 0;
  std::int64_t max = 100;
  Rational ratio = Rational(2, 3);
};

enum class InfoMode { kExplicit, kImplicit };

struct BarParams {
  Rational capacity_ratio = Rational(3, 5);
  Rational u_go_uncrowded = 10;
  Rational u_go_crowded = 0;
  Rational u_home = 5;
  InfoMode info_mode = InfoMode::kImplicit;
  // Permits utilities that break crowded < home < uncrowded.
  bool allow_nonstandard_utilities = false;
};

struct DollarParams {
  std::int64_t gold = 100;
};

struct PublicGoodsParams {
  Rational multiplier = 2;
  std::int64_t endowment = 20;
  // When set, every player receives `endowment` fresh tokens after each round.
  bool fresh_endowment = false;
};

struct DinerParams {
  Rational price_costly = 20;
  Rational price_cheap = 10;
  Rational utility_costly = 20;
  Rational utility_cheap = 15;
};

enum class Pricing { kFirstPrice, kSecondPrice };

struct AuctionParams {
  Pricing pricing = Pricing::kFirstPrice;
  std::int64_t valuation_max = 200;  // valuations drawn from [1, valuation_max]
};

struct RoyaleParams {
  std::vector<Rational> hit_rates;  // one per player, strictly inside (0,1)
  int max_turns = 100;
  bool allow_self_target = false;
};

// 35%, 40%, ... in 5% steps; 80% at the tenth player.
std::vector<Rational> DefaultHitRates(int n_players);

struct PirateParams {
  std::int64_t gold = 100;
};

// Variant order matches GameKind.
using GameParams = std::variant<GuessParams, BarParams, DollarParams, PublicGoodsParams,
                                DinerParams, AuctionParams, RoyaleParams, PirateParams>;

GameKind KindOf(const GameParams& params);
GameParams DefaultParams(GameKind kind, int n_players = 10);

enum class AgentKind { kOracle, kRandom, kFixed, kLlm, kHuman, kScripted };
std::string_view AgentKindName(AgentKind kind);
AgentKind ParseAgentKind(std::string_view name);

// Informed-opponent preambles for LLM seats.
enum class InformedSetting { kNone, kToldOthersPlayEquilibrium, kToldOthersSmart, kToldOthersRandom };

struct EndpointDescriptor {
  std::string base_url;        // e.g. http://127.0.0.1:8000/v1
  std::string model;
  std::string credential_env;  // name of the env var holding the bearer token; may be empty
  std::optional<Rational> temperature;  // overrides MatchConfig.temperature
  int timeout_ms = 60000;
  int max_retries = 3;
};

struct AgentSpec {
  AgentKind kind = AgentKind::kOracle;
  std::string strategy;  // kFixed catalog name
  std::optional<std::int64_t> value;  // constant_bid amount
  // First-price oracle bids floor(bid_fraction * valuation); 0 maximizes S6.
  Rational bid_fraction = 0;
  std::optional<EndpointDescriptor> endpoint;
  std::string persona;  // "You are <persona>." system prefix
  bool chain_of_thought = false;
  InformedSetting informed = InformedSetting::kNone;
  std::vector<Action> script;  // kScripted, consumed in order of this seat's turns
  std::optional<int> move_timeout_ms;  // kHuman, service sessions only
  std::string label;
};

// Catalog of scripted strategies accepted as AgentSpec::strategy for kFixed.
inline constexpr std::array<std::string_view, 9> kStrategyCatalog = {
    "oracle", "random", "constant_bid", "free_rider", "always_go",
    "always_stay", "truthful_bidder", "zero_bidder", "rotation_bar",
};

struct MatchConfig {
  GameParams params = GuessParams{};
  int n_players = 10;
  int n_rounds = 20;
  std::vector<AgentSpec> roster;
  std::uint64_t seed = 0;
  PromptVersion prompt_version = PromptVersion::kV1;
  Rational temperature = 1;

  GameKind kind() const { return KindOf(params); }
  template <typename P>
  const P& Get() const {
    return std::get<P>(params);
  }
};

// Vanilla configuration: ten players, twenty rounds, default parameters and
// an all-oracle roster.
MatchConfig VanillaConfig(GameKind kind);

}  // namespace gamebench

#endif  // GAMEBENCH_TYPES_HPP_
