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

#include "gamebench/action.hpp"

#include <sstream>

#include "gamebench/detail/overloaded.hpp"
#include "gamebench/error.hpp"

namespace gamebench {

using nlohmann::json;

namespace {

using detail::Overloaded;

std::int64_t IntField(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorCode::kMalformedLog, std::string("action field '") + key + "' must be an integer");
  }
  return j.at(key).get<std::int64_t>();
}

std::string StringField(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw Error(ErrorCode::kMalformedLog, std::string("action field '") + key + "' must be a string");
  }
  return j.at(key).get<std::string>();
}

}  // namespace

json ActionToJson(const Action& action) {
  return std::visit(
      Overloaded{
          [](const ChosenNumber& a) { return json{{"type", "number"}, {"value", a.value}}; },
          [](const BarDecision& a) {
            return json{{"type", "bar"}, {"decision", a.choice == BarChoice::kGo ? "go" : "stay"}};
          },
          [](const Bid& a) { return json{{"type", "bid"}, {"amount", a.amount}}; },
          [](const Contribution& a) { return json{{"type", "contribution"}, {"tokens", a.tokens}}; },
          [](const Dish& a) {
            return json{{"type", "dish"}, {"dish", a.choice == DishChoice::kCostly ? "costly" : "cheap"}};
          },
          [](const AuctionBid& a) { return json{{"type", "auction_bid"}, {"amount", a.amount}}; },
          [](const Shot& a) {
            json j{{"type", "shot"}};
            j["target"] = a.target ? json(*a.target) : json(nullptr);
            return j;
          },
          [](const PirateProposal& a) { return json{{"type", "proposal"}, {"allocation", a.allocation}}; },
          [](const PirateVote& a) {
            return json{{"type", "vote"}, {"decision", a.accept ? "accept" : "reject"}};
          },
      },
      action);
}

Action ActionFromJson(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kMalformedLog, "action must be an object");
  const std::string type = StringField(j, "type");
  if (type == "number") return ChosenNumber{IntField(j, "value")};
  if (type == "bar") {
    const std::string d = StringField(j, "decision");
    if (d != "go" && d != "stay") throw Error(ErrorCode::kMalformedLog, "bar decision must be go|stay");
    return BarDecision{d == "go" ? BarChoice::kGo : BarChoice::kStay};
  }
  if (type == "bid") return Bid{IntField(j, "amount")};
  if (type == "contribution") return Contribution{IntField(j, "tokens")};
  if (type == "dish") {
    const std::string d = StringField(j, "dish");
    if (d != "costly" && d != "cheap") throw Error(ErrorCode::kMalformedLog, "dish must be costly|cheap");
    return Dish{d == "costly" ? DishChoice::kCostly : DishChoice::kCheap};
  }
  if (type == "auction_bid") return AuctionBid{IntField(j, "amount")};
  if (type == "shot") {
    if (!j.contains("target") || j.at("target").is_null()) return Shot{std::nullopt};
    return Shot{static_cast<PlayerId>(IntField(j, "target"))};
  }
  if (type == "proposal") {
    if (!j.contains("allocation") || !j.at("allocation").is_array()) {
      throw Error(ErrorCode::kMalformedLog, "proposal needs an allocation array");
    }
    PirateProposal p;
    for (const auto& v : j.at("allocation")) {
      if (!v.is_number_integer()) throw Error(ErrorCode::kMalformedLog, "allocation entries must be integers");
      p.allocation.push_back(v.get<std::int64_t>());
    }
    return p;
  }
  if (type == "vote") {
    const std::string d = StringField(j, "decision");
    if (d != "accept" && d != "reject") throw Error(ErrorCode::kMalformedLog, "vote must be accept|reject");
    return PirateVote{d == "accept"};
  }
  throw Error(ErrorCode::kMalformedLog, "unknown action type '" + type + "'");
}

std::string DescribeAction(const Action& action) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const ChosenNumber& a) { out << "chose " << a.value; },
                 [&](const BarDecision& a) { out << (a.choice == BarChoice::kGo ? "go" : "stay"); },
                 [&](const Bid& a) { out << "bid " << a.amount; },
                 [&](const Contribution& a) { out << "contribute " << a.tokens; },
                 [&](const Dish& a) { out << (a.choice == DishChoice::kCostly ? "costly" : "cheap"); },
                 [&](const AuctionBid& a) { out << "bid " << a.amount; },
                 [&](const Shot& a) {
                   if (a.target) {
                     out << "shoot player " << (*a.target + 1);
                   } else {
                     out << "intentional miss";
                   }
                 },
                 [&](const PirateProposal& a) {
                   out << "propose (";
                   for (std::size_t i = 0; i < a.allocation.size(); ++i) {
                     out << (i ? "," : "") << a.allocation[i];
                   }
                   out << ")";
                 },
                 [&](const PirateVote& a) { out << (a.accept ? "accept" : "reject"); },
             },
             action);
  return out.str();
}

}  // namespace gamebench
