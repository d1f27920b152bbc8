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

#include "gamebench/types.hpp"

#include <map>

#include "gamebench/error.hpp"

namespace gamebench {

std::string_view GameKindName(GameKind kind) {
  switch (kind) {
    case GameKind::kGuessAverage: return "guess_average";
    case GameKind::kElFarolBar: return "el_farol_bar";
    case GameKind::kDivideDollar: return "divide_dollar";
    case GameKind::kPublicGoods: return "public_goods";
    case GameKind::kDinersDilemma: return "diners_dilemma";
    case GameKind::kSealedBidAuction: return "sealed_bid_auction";
    case GameKind::kBattleRoyale: return "battle_royale";
    case GameKind::kPirateGame: return "pirate_game";
  }
  return "unknown";
}

GameKind ParseGameKind(std::string_view name) {
  static const std::map<std::string, GameKind, std::less<>> kNames = {
      {"guess_average", GameKind::kGuessAverage},   {"guess", GameKind::kGuessAverage},
      {"el_farol_bar", GameKind::kElFarolBar},      {"bar", GameKind::kElFarolBar},
      {"divide_dollar", GameKind::kDivideDollar},   {"dollar", GameKind::kDivideDollar},
      {"public_goods", GameKind::kPublicGoods},     {"pgg", GameKind::kPublicGoods},
      {"diners_dilemma", GameKind::kDinersDilemma}, {"diner", GameKind::kDinersDilemma},
      {"sealed_bid_auction", GameKind::kSealedBidAuction},
      {"auction", GameKind::kSealedBidAuction},
      {"battle_royale", GameKind::kBattleRoyale},   {"royale", GameKind::kBattleRoyale},
      {"pirate_game", GameKind::kPirateGame},       {"pirate", GameKind::kPirateGame},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) {
    throw Error(ErrorCode::kConfigInvalid, "unknown game '" + std::string(name) + "'");
  }
  return it->second;
}

bool IsSimultaneous(GameKind kind) {
  return kind != GameKind::kBattleRoyale && kind != GameKind::kPirateGame;
}

std::string PromptVersionName(PromptVersion version) {
  return "V" + std::to_string(static_cast<int>(version));
}

PromptVersion ParsePromptVersion(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'V' || name[0] == 'v') && name[1] >= '1' && name[1] <= '5') {
    return static_cast<PromptVersion>(name[1] - '0');
  }
  throw Error(ErrorCode::kUnknownPromptVersion, "unknown prompt version '" + std::string(name) + "'");
}

std::vector<Rational> DefaultHitRates(int n_players) {
  std::vector<Rational> rates;
  rates.reserve(static_cast<std::size_t>(n_players));
  for (int i = 0; i < n_players; ++i) rates.emplace_back(Rational(35 + 5 * i, 100));
  return rates;
}

GameKind KindOf(const GameParams& params) { return static_cast<GameKind>(params.index()); }

GameParams DefaultParams(GameKind kind, int n_players) {
  switch (kind) {
    case GameKind::kGuessAverage: return GuessParams{};
    case GameKind::kElFarolBar: return BarParams{};
    case GameKind::kDivideDollar: return DollarParams{};
    case GameKind::kPublicGoods: return PublicGoodsParams{};
    case GameKind::kDinersDilemma: return DinerParams{};
    case GameKind::kSealedBidAuction: return AuctionParams{};
    case GameKind::kBattleRoyale: {
      RoyaleParams params;
      params.hit_rates = DefaultHitRates(n_players);
      return params;
    }
    case GameKind::kPirateGame: return PirateParams{};
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown game kind");
}

std::string_view AgentKindName(AgentKind kind) {
  switch (kind) {
    case AgentKind::kOracle: return "oracle";
    case AgentKind::kRandom: return "random";
    case AgentKind::kFixed: return "fixed";
    case AgentKind::kLlm: return "llm";
    case AgentKind::kHuman: return "human";
    case AgentKind::kScripted: return "scripted";
  }
  return "unknown";
}

AgentKind ParseAgentKind(std::string_view name) {
  for (AgentKind kind : {AgentKind::kOracle, AgentKind::kRandom, AgentKind::kFixed, AgentKind::kLlm,
                         AgentKind::kHuman, AgentKind::kScripted}) {
    if (AgentKindName(kind) == name) return kind;
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown agent kind '" + std::string(name) + "'");
}

MatchConfig VanillaConfig(GameKind kind) {
  MatchConfig config;
  config.params = DefaultParams(kind, config.n_players);
  config.roster.assign(static_cast<std::size_t>(config.n_players), AgentSpec{});
  return config;
}

}  // namespace gamebench
