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


#ifndef GAMEBENCH_PROMPTS_HPP_
#define GAMEBENCH_PROMPTS_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gamebench/games.hpp"
#include "gamebench/types.hpp"

namespace gamebench {

// One piece of the rendered history. Assistant segments are the player's own
// past replies; consecutive user segments are merged when building a chat.
struct Segment {
  enum class Role { kUser, kAssistant };
  Role role = Role::kUser;
  std::string text;
  bool operator==(const Segment&) const = default;
};

// What one player sees: the rules, every finished step they may know about,
// and the request for the current step (empty if they are not to move).
struct Observation {
  GameKind game = GameKind::kGuessAverage;
  PlayerId player = 0;
  PromptVersion version = PromptVersion::kV1;
  std::string system;
  std::vector<Segment> history;
  std::string request;
  // Plain-text rendering for humans.
  std::string Text() const;
};

// Renders from the engine's history and current state. Only completed steps
// are shown, so no other player's pending action can leak into a request.
Observation RenderObservation(const GameEngine& engine, PlayerId player, PromptVersion version);

// The JSON reply a player would give for `action`, in the format the prompt
// asks for, e.g. {"bid_amount": "10"}. Pirate proposals are keyed by 1-based
// rank starting at the proposer, in seniority order.
std::string ReplyText(const Action& action, PlayerId pirate_proposer = 0);

// {"3": "50", "4": "1", ...} for an allocation proposed by `proposer`.
std::string PlanText(const std::vector<std::int64_t>& allocation, PlayerId proposer);

std::string Ordinal(std::int64_t n);

// Optional system prefixes: persona, informed-opponent setting and the
// step-by-step instruction.
std::string SystemPrefix(const AgentSpec& spec);

// Display name used in prompts for player id p: "player_<p+1>".
std::string PlayerName(PlayerId player);

// Template text for one (game, version, key), falling back to V1 for keys a
// version does not override. Throws Error(kUnknownPromptVersion) if neither
// exists.
std::string_view TemplateText(GameKind game, PromptVersion version, std::string_view key);

// Replaces every {name} with values.at(name). Unknown names are left as is.
std::string Substitute(std::string_view text, const std::map<std::string, std::string>& values);

}  // namespace gamebench

#endif  // GAMEBENCH_PROMPTS_HPP_
