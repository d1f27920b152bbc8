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


#include "gamebench/prompts.hpp"

#include <algorithm>
#include <tuple>

#include "gamebench/detail/overloaded.hpp"
#include "gamebench/detail/prompt_table.hpp"
#include "gamebench/error.hpp"

namespace gamebench {

namespace {

using Values = std::map<std::string, std::string>;

std::string Num(const Rational& value) { return FormatDecimal(value, 2); }

std::string Quote(std::string_view s) { return "\"" + std::string(s) + "\""; }

template <typename T, typename F>
std::string JoinList(const std::vector<T>& items, F format) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += format(items[i]);
  }
  return out;
}

class Renderer {
 public:
  Renderer(const GameEngine& engine, PlayerId player, PromptVersion version)
      : engine_(engine), me_(player), version_(version) {
    obs_.game = engine.kind();
    obs_.player = player;
    obs_.version = version;
    const MatchConfig& c = engine.config();
    base_["N"] = std::to_string(c.n_players);
    base_["K"] = std::to_string(c.n_rounds);
    AddGameValues();
  }

  Observation Render() {
    obs_.system = T("system");
    for (const auto& record : engine_.history()) RenderRecord(record);
    const auto pending = engine_.pending_players();
    if (std::find(pending.begin(), pending.end(), me_) != pending.end()) obs_.request = Request();
    return std::move(obs_);
  }

 private:
  std::string T(std::string_view key, const Values& extra = {}) const {
    Values values = base_;
    for (const auto& [k, v] : extra) values[k] = v;
    return Substitute(TemplateText(engine_.kind(), version_, key), values);
  }

  // Adds one user block built from non-empty lines.
  void User(std::initializer_list<std::string> lines) {
    std::string text;
    for (const auto& line : lines) {
      if (line.empty()) continue;
      if (!text.empty()) text += "\n";
      text += line;
    }
    if (!text.empty()) obs_.history.push_back({Segment::Role::kUser, std::move(text)});
  }
  void Assistant(std::string text) { obs_.history.push_back({Segment::Role::kAssistant, std::move(text)}); }

  std::string Round(int round) const { return std::to_string(round + 1); }

  void AddGameValues() {
    const MatchConfig& c = engine_.config();
    std::visit(detail::Overloaded{
                   [&](const GuessParams& p) {
                     base_["MIN"] = std::to_string(p.min);
                     base_["MAX"] = std::to_string(p.max);
                     base_["R"] = RationalToString(p.ratio);
                   },
                   [&](const BarParams& p) {
                     base_["R"] = FormatPercent(p.capacity_ratio);
                     base_["MAX"] = Num(p.u_go_uncrowded);
                     base_["MIN"] = Num(p.u_go_crowded);
                     base_["HOME"] = Num(p.u_home);
                   },
                   [&](const DollarParams& p) { base_["G"] = std::to_string(p.gold); },
                   [&](const PublicGoodsParams& p) { base_["R"] = Num(p.multiplier); },
                   [&](const DinerParams& p) {
                     base_["Ph"] = Num(p.price_costly);
                     base_["Pl"] = Num(p.price_cheap);
                     base_["Uh"] = Num(p.utility_costly);
                     base_["Ul"] = Num(p.utility_cheap);
                   },
                   [&](const AuctionParams& p) {
                     base_["price_rule"] =
                         std::string(TemplateText(c.kind(), version_,
                                                  p.pricing == Pricing::kFirstPrice ? "price_first" : "price_second"));
                   },
                   [&](const RoyaleParams&) {
                     const auto& order = engine_.RoyaleOrder();
                     base_["hit_rates"] = HitRates(order);
                     base_["name"] = PlayerName(me_);
                     base_["hit"] = FormatPercent(engine_.HitRate(me_));
                     const auto pos = std::find(order.begin(), order.end(), me_) - order.begin();
                     base_["rank"] = Ordinal(pos + 1);
                   },
                   [&](const PirateParams& p) {
                     base_["G"] = std::to_string(p.gold);
                     base_["rank"] = Ordinal(me_ + 1);
                   },
               },
               c.params);
  }

  std::string HitRates(const std::vector<PlayerId>& order) const {
    std::string out = "{";
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) out += ", ";
      out += Quote(PlayerName(order[i])) + ": " + Quote(FormatPercent(engine_.HitRate(order[i])));
    }
    return out + "}";
  }

  const Action& MyAction(const RoundRecord& record) const { return record.actions.at(me_); }
  std::string MyReply(const RoundRecord& record, PlayerId proposer = 0) const {
    return ReplyText(MyAction(record), proposer);
  }

  void RenderRecord(const RoundRecord& record) {
    const auto me = static_cast<std::size_t>(me_);
    const Values round{{"I", Round(record.round)}};
    const std::string header = T("header", round);
    std::visit(
        detail::Overloaded{
            [&](const GuessOutcome& o) {
              Values v{{"M", Num(o.average)},
                       {"T", Num(o.target)},
                       {"W", JoinList(o.winning_numbers, [](std::int64_t x) { return std::to_string(x); })}};
              User({header, T("average", v), T("target", v), T("winning", v), T("echo")});
              Assistant(MyReply(record));
              const bool won = std::find(o.winners.begin(), o.winners.end(), me_) != o.winners.end();
              User({T(won ? "won" : "lost")});
            },
            [&](const BarOutcome& o) {
              const bool explicit_mode = engine_.config().Get<BarParams>().info_mode == InfoMode::kExplicit;
              const bool went = std::get<BarDecision>(MyAction(record)).choice == BarChoice::kGo;
              std::string attendance;
              if (explicit_mode) {
                attendance = T("attendance", {{"go", std::to_string(o.goers)},
                                              {"stay", std::to_string(o.stayers)},
                                              {"compare", T(o.crowded ? "compare_more" : "compare_le")}});
              }
              // Implicit mode: stayers learn nothing about the bar.
              const std::string fun = explicit_mode || went ? T(o.crowded ? "fun_less" : "fun_more") : "";
              User({header, attendance, fun, T("echo")});
              Assistant(MyReply(record));
              User({T("gained", {{"gain", Num(o.utilities.at(me))}})});
            },
            [&](const DollarOutcome& o) {
              User({header, T("echo")});
              Assistant(MyReply(record));
              User({T("sum", {{"S", std::to_string(o.total)}}), T(o.exceeded ? "exceeds" : "within"),
                    T("received", {{"gain", std::to_string(o.payouts.at(me))}})});
            },
            [&](const PublicGoodsOutcome& o) {
              const auto as_int = [](std::int64_t x) { return std::to_string(x); };
              User({header, T("contributions", {{"contributions", JoinList(o.contributions, as_int)}}), T("echo")});
              Assistant(MyReply(record));
              User({T("pot", {{"S", std::to_string(o.pot)}}), T("gain", {{"gain", Num(o.gain)}}),
                    T("tokens_after", {{"I", Round(record.round)}, {"balance", Num(o.balances_after.at(me))}}),
                    T("all_tokens", {{"I", Round(record.round)},
                                     {"balances", JoinList(o.balances_after, [](const Rational& x) { return Num(x); })}})});
            },
            [&](const DinerOutcome& o) {
              User({header,
                    T("counts", {{"costly", std::to_string(o.costly)}, {"cheap", std::to_string(o.cheap)}}),
                    T("cost", {{"S", Num(o.total_cost)}, {"share", Num(o.share)}}), T("echo")});
              Assistant(MyReply(record));
              User({T("utility", {{"utility", Num(o.utilities.at(me))}})});
            },
            [&](const AuctionOutcome& o) {
              User({header, T("valuation", {{"v", std::to_string(o.valuations.at(me))}}), T("echo")});
              Assistant(MyReply(record));
              const std::string result = o.winner == me_
                                             ? T("won", {{"utility", std::to_string(o.utilities.at(me))}})
                                             : T("lost");
              User({T("winning_bid", {{"W", std::to_string(o.winning_bid)}}),
                    T("price", {{"P", std::to_string(o.price)}}), result});
            },
            [&](const RoyaleOutcome& o) {
              Values v{{"actor", o.actor == me_ ? "You" : PlayerName(o.actor)}};
              if (o.target) v["target"] = *o.target == me_ ? "you" : PlayerName(*o.target);
              const std::string line = !o.target ? T("intentional", v) : T(o.hit ? "hit" : "missed", v);
              const std::string left = T("left", {{"left", std::to_string(o.alive_after.size())}});
              if (o.actor == me_) {
                User({header, T("echo")});
                Assistant(MyReply(record));
                User({line, left});
              } else {
                User({header, line, left});
              }
            },
            [&](const PirateProposalOutcome& o) {
              if (o.proposer != me_) return;
              User({T("propose_call", {{"proposer", Ordinal(o.proposer + 1)}}), T("proposer_echo")});
              Assistant(MyReply(record, o.proposer));
            },
            [&](const PirateVoteOutcome& o) {
              Values v{{"proposer", Ordinal(o.proposer + 1)},
                       {"plan", PlanText(o.allocation, o.proposer)},
                       {"accepts", std::to_string(o.accepts)},
                       {"alive", std::to_string(o.alive)}};
              const std::string verdict = T(o.accepted ? "accepted" : "rejected", v);
              if (record.actions.count(me_)) {
                User({T("proposed", v), T("accepts", v), T("echo")});
                Assistant(MyReply(record));
                User({verdict});
              } else {
                User({T("proposed", v), T("accepts", v), verdict});
              }
            },
        },
        record.outcome);
  }

  std::string Request() const {
    const std::string start = T("start", {{"I", Round(engine_.round())}});
    switch (engine_.kind()) {
      case GameKind::kPublicGoods: {
        Values v{{"balance", Num(engine_.balances().at(static_cast<std::size_t>(me_)))},
                 {"cap", std::to_string(engine_.ContributionCap(me_))}};
        return start + "\n" + T("goal", v) + "\n" + T("format", v);
      }
      case GameKind::kSealedBidAuction: {
        Values v{{"v", std::to_string(engine_.Valuation(me_))}};
        return start + "\n" + T("goal", v) + "\n" + T("format", v);
      }
      case GameKind::kBattleRoyale: {
        std::vector<PlayerId> alive_order;
        for (PlayerId p : engine_.RoyaleOrder()) {
          if (engine_.IsAlive(p)) alive_order.push_back(p);
        }
        const auto pos = std::find(alive_order.begin(), alive_order.end(), me_) - alive_order.begin();
        Values v{{"hit_rates", HitRates(alive_order)}, {"rank", Ordinal(pos + 1)}};
        return start + "\n" + T("goal", v) + "\n" + T("format", v);
      }
      case GameKind::kPirateGame: {
        const PlayerId proposer = engine_.proposer();
        Values v{{"proposer", Ordinal(proposer + 1)}};
        if (engine_.step_kind() == StepKind::kPropose) {
          std::string schema = "{";
          for (PlayerId p = proposer; p < engine_.n_players(); ++p) {
            if (p != proposer) schema += ", ";
            schema += Quote(std::to_string(p + 1)) + ": " + Quote("non_negative_integer");
          }
          schema += "}";
          v["plan_schema"] = schema;
          v["last"] = Ordinal(engine_.n_players());
          return T("propose_call", v) + "\n" + T("goal") + "\n" + T("proposer_request", v) + "\n" +
                 T("proposer_format", v);
        }
        const auto& allocation = engine_.pending_proposal()->allocation;
        v["plan"] = PlanText(allocation, proposer);
        v["offered"] = std::to_string(allocation.at(static_cast<std::size_t>(me_ - proposer)));
        return T("goal") + "\n" + T("voter_request", v) + "\n" + T("voter_format", v);
      }
      default: return start + "\n" + T("goal") + "\n" + T("format");
    }
  }

  const GameEngine& engine_;
  PlayerId me_;
  PromptVersion version_;
  Values base_;
  Observation obs_;
};

using TemplateKey = std::tuple<int, int, std::string_view>;  // game (-1 = any), version, key

const std::map<TemplateKey, std::string_view>& TemplateIndex() {
  static const auto* index = [] {
    auto* out = new std::map<TemplateKey, std::string_view>();
    for (const auto& entry : detail::TemplateTable()) {
      const int game = entry.game ? static_cast<int>(*entry.game) : -1;
      out->emplace(TemplateKey{game, entry.version, entry.key}, entry.text);
    }
    return out;
  }();
  return *index;
}

}  // namespace

std::string Observation::Text() const {
  std::string out = system;
  for (const auto& segment : history) {
    out += "\n\n";
    out += segment.role == Segment::Role::kAssistant ? "> " + segment.text : segment.text;
  }
  if (!request.empty()) out += "\n\n" + request;
  return out;
}

Observation RenderObservation(const GameEngine& engine, PlayerId player, PromptVersion version) {
  if (player < 0 || player >= engine.n_players()) throw Error(ErrorCode::kNotYourTurn, "unknown player");
  return Renderer(engine, player, version).Render();
}

std::string_view TemplateText(GameKind game, PromptVersion version, std::string_view key) {
  const auto& index = TemplateIndex();
  const int g = static_cast<int>(game);
  const int v = static_cast<int>(version);
  for (const TemplateKey& probe : {TemplateKey{g, v, key}, TemplateKey{-1, v, key}, TemplateKey{g, 1, key},
                                   TemplateKey{-1, 1, key}}) {
    if (const auto it = index.find(probe); it != index.end()) return it->second;
  }
  throw Error(ErrorCode::kUnknownPromptVersion, "no template '" + std::string(key) + "' for " +
                                                    std::string(GameKindName(game)) + " " +
                                                    PromptVersionName(version));
}

std::string Substitute(std::string_view text, const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '{') {
      const std::size_t close = text.find('}', i + 1);
      if (close != std::string_view::npos) {
        const std::string name(text.substr(i + 1, close - i - 1));
        if (const auto it = values.find(name); it != values.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out += text[i++];
  }
  return out;
}

std::string PlayerName(PlayerId player) { return "player_" + std::to_string(player + 1); }

std::string Ordinal(std::int64_t n) {
  const std::int64_t mod100 = n % 100;
  const char* suffix = "th";
  if (mod100 < 11 || mod100 > 13) {
    switch (n % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
      default: break;
    }
  }
  return std::to_string(n) + suffix;
}

std::string PlanText(const std::vector<std::int64_t>& allocation, PlayerId proposer) {
  std::string out = "{";
  for (std::size_t i = 0; i < allocation.size(); ++i) {
    if (i) out += ", ";
    out += Quote(std::to_string(proposer + 1 + static_cast<PlayerId>(i))) + ": " +
           Quote(std::to_string(allocation[i]));
  }
  return out + "}";
}

std::string ReplyText(const Action& action, PlayerId pirate_proposer) {
  const auto field = [](std::string_view key, const std::string& value) {
    return "{" + Quote(key) + ": " + Quote(value) + "}";
  };
  return std::visit(
      detail::Overloaded{
          [&](const ChosenNumber& a) { return field("chosen_number", std::to_string(a.value)); },
          [&](const BarDecision& a) { return field("decision", a.choice == BarChoice::kGo ? "go" : "stay"); },
          [&](const Bid& a) { return field("bid_amount", std::to_string(a.amount)); },
          [&](const Contribution& a) { return field("tokens_contributed", std::to_string(a.tokens)); },
          [&](const Dish& a) { return field("chosen_dish", a.choice == DishChoice::kCostly ? "costly" : "cheap"); },
          [&](const AuctionBid& a) { return field("bid", std::to_string(a.amount)); },
          [&](const Shot& a) {
            return a.target ? field("target", PlayerName(*a.target)) : std::string(R"({"target": null})");
          },
          [&](const PirateProposal& a) {
            return "{" + Quote("proposal") + ": " + PlanText(a.allocation, pirate_proposer) + "}";
          },
          [&](const PirateVote& a) { return field("decision", a.accept ? "accept" : "reject"); },
      },
      action);
}

std::string SystemPrefix(const AgentSpec& spec) {
  const GameKind any = GameKind::kGuessAverage;  // prefixes are shared by every game
  std::vector<std::string> lines;
  if (!spec.persona.empty()) {
    lines.push_back(Substitute(TemplateText(any, PromptVersion::kV1, "persona"), {{"persona", spec.persona}}));
  }
  switch (spec.informed) {
    case InformedSetting::kNone: break;
    case InformedSetting::kToldOthersPlayEquilibrium:
      lines.emplace_back(TemplateText(any, PromptVersion::kV1, "informed_equilibrium"));
      break;
    case InformedSetting::kToldOthersSmart:
      lines.emplace_back(TemplateText(any, PromptVersion::kV1, "informed_smart"));
      break;
    case InformedSetting::kToldOthersRandom:
      lines.emplace_back(TemplateText(any, PromptVersion::kV1, "informed_random"));
      break;
  }
  if (spec.chain_of_thought) lines.emplace_back(TemplateText(any, PromptVersion::kV1, "cot"));
  std::string out;
  for (const auto& line : lines) out += (out.empty() ? "" : "\n") + line;
  return out;
}

}  // namespace gamebench
