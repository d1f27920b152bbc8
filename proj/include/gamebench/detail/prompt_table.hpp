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


#ifndef GAMEBENCH_DETAIL_PROMPT_TABLE_HPP_
#define GAMEBENCH_DETAIL_PROMPT_TABLE_HPP_

#include <optional>
#include <span>
#include <string_view>

#include "gamebench/types.hpp"

namespace gamebench::detail {

// An empty `game` applies to every game of that version.
struct TemplateEntry {
  std::optional<GameKind> game;
  int version;
  std::string_view key;
  std::string_view text;
};

std::span<const TemplateEntry> TemplateTable();

}  // namespace gamebench::detail

#endif  // GAMEBENCH_DETAIL_PROMPT_TABLE_HPP_
