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


#include "gamebench/outcome.hpp"

#include "gamebench/detail/overloaded.hpp"
#include "gamebench/error.hpp"

namespace gamebench {

using nlohmann::json;

namespace {

json Rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(RationalToString(v));
  return out;
}

const json& Field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::kMalformedLog, std::string("outcome is missing '") + key + "'");
  return j.at(key);
}

Rational RationalField(const json& j, const char* key) {
  const json& v = Field(j, key);
  try {
    if (v.is_string()) return ParseRational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  } catch (const std::invalid_argument&) {
  }
  throw Error(ErrorCode::kMalformedLog, std::string("outcome field '") + key + "' is not a rational");
}

std::vector<Rational> RationalsField(const json& j, const char* key) {
  std::vector<Rational> out;
  for (const auto& v : Field(j, key)) {
    json wrapper{{"v", v}};
    out.push_back(RationalField(wrapper, "v"));
  }
  return out;
}

template <typename T>
T Get(const json& j, const char* key) {
  try {
    return Field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedLog, std::string("outcome field '") + key + "': " + e.what());
  }
}

std::optional<PlayerId> OptionalPlayer(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return Get<PlayerId>(j, key);
}

}  // namespace

json OutcomeToJson(const RoundOutcome& outcome) {
  using detail::Overloaded;
  return std::visit(
      Overloaded{
          [](const GuessOutcome& o) {
            return json{{"type", "guess"},
                        {"average", RationalToString(o.average)},
                        {"target", RationalToString(o.target)},
                        {"winners", o.winners},
                        {"winning_numbers", o.winning_numbers}};
          },
          [](const BarOutcome& o) {
            return json{{"type", "bar"},
                        {"goers", o.goers},
                        {"stayers", o.stayers},
                        {"crowded", o.crowded},
                        {"utilities", Rationals(o.utilities)}};
          },
          [](const DollarOutcome& o) {
            return json{{"type", "dollar"}, {"total", o.total}, {"exceeded", o.exceeded}, {"payouts", o.payouts}};
          },
          [](const PublicGoodsOutcome& o) {
            return json{{"type", "public_goods"},
                        {"contributions", o.contributions},
                        {"pot", o.pot},
                        {"gain", RationalToString(o.gain)},
                        {"balances_after", Rationals(o.balances_after)}};
          },
          [](const DinerOutcome& o) {
            return json{{"type", "diner"},
                        {"costly", o.costly},
                        {"cheap", o.cheap},
                        {"total_cost", RationalToString(o.total_cost)},
                        {"share", RationalToString(o.share)},
                        {"utilities", Rationals(o.utilities)}};
          },
          [](const AuctionOutcome& o) {
            return json{{"type", "auction"},       {"valuations", o.valuations}, {"winner", o.winner},
                        {"winning_bid", o.winning_bid}, {"price", o.price},           {"utilities", o.utilities}};
          },
          [](const RoyaleOutcome& o) {
            json j{{"type", "royale"},
                   {"actor", o.actor},
                   {"hit", o.hit},
                   {"alive_before", o.alive_before},
                   {"alive_after", o.alive_after}};
            j["target"] = o.target ? json(*o.target) : json(nullptr);
            return j;
          },
          [](const PirateProposalOutcome& o) {
            return json{{"type", "pirate_proposal"}, {"proposer", o.proposer}, {"allocation", o.allocation}};
          },
          [](const PirateVoteOutcome& o) {
            json j{{"type", "pirate_vote"}, {"proposer", o.proposer}, {"allocation", o.allocation},
                   {"accepts", o.accepts},   {"alive", o.alive},       {"accepted", o.accepted},
                   {"payouts", o.payouts}};
            j["eliminated"] = o.eliminated ? json(*o.eliminated) : json(nullptr);
            return j;
          },
      },
      outcome);
}

RoundOutcome OutcomeFromJson(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kMalformedLog, "outcome must be an object");
  const auto type = Get<std::string>(j, "type");
  if (type == "guess") {
    return GuessOutcome{RationalField(j, "average"), RationalField(j, "target"),
                        Get<std::vector<PlayerId>>(j, "winners"),
                        Get<std::vector<std::int64_t>>(j, "winning_numbers")};
  }
  if (type == "bar") {
    return BarOutcome{Get<int>(j, "goers"), Get<int>(j, "stayers"), Get<bool>(j, "crowded"),
                      RationalsField(j, "utilities")};
  }
  if (type == "dollar") {
    return DollarOutcome{Get<std::int64_t>(j, "total"), Get<bool>(j, "exceeded"),
                         Get<std::vector<std::int64_t>>(j, "payouts")};
  }
  if (type == "public_goods") {
    return PublicGoodsOutcome{Get<std::vector<std::int64_t>>(j, "contributions"), Get<std::int64_t>(j, "pot"),
                              RationalField(j, "gain"), RationalsField(j, "balances_after")};
  }
  if (type == "diner") {
    return DinerOutcome{Get<int>(j, "costly"), Get<int>(j, "cheap"), RationalField(j, "total_cost"),
                        RationalField(j, "share"), RationalsField(j, "utilities")};
  }
  if (type == "auction") {
    return AuctionOutcome{Get<std::vector<std::int64_t>>(j, "valuations"), Get<PlayerId>(j, "winner"),
                          Get<std::int64_t>(j, "winning_bid"), Get<std::int64_t>(j, "price"),
                          Get<std::vector<std::int64_t>>(j, "utilities")};
  }
  if (type == "royale") {
    return RoyaleOutcome{Get<PlayerId>(j, "actor"), OptionalPlayer(j, "target"), Get<bool>(j, "hit"),
                         Get<std::vector<PlayerId>>(j, "alive_before"), Get<std::vector<PlayerId>>(j, "alive_after")};
  }
  if (type == "pirate_proposal") {
    return PirateProposalOutcome{Get<PlayerId>(j, "proposer"), Get<std::vector<std::int64_t>>(j, "allocation")};
  }
  if (type == "pirate_vote") {
    PirateVoteOutcome o;
    o.proposer = Get<PlayerId>(j, "proposer");
    o.allocation = Get<std::vector<std::int64_t>>(j, "allocation");
    o.accepts = Get<int>(j, "accepts");
    o.alive = Get<int>(j, "alive");
    o.accepted = Get<bool>(j, "accepted");
    o.eliminated = OptionalPlayer(j, "eliminated");
    o.payouts = Get<std::vector<std::int64_t>>(j, "payouts");
    return o;
  }
  throw Error(ErrorCode::kMalformedLog, "unknown outcome type '" + type + "'");
}

}  // namespace gamebench
