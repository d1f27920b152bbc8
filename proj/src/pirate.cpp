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


#include "gamebench/pirate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gamebench {

std::int64_t PirateBribeCount(int n_alive) { return n_alive >= 1 ? (n_alive - 1) / 2 : 0; }

std::vector<std::int64_t> ClosedFormPirateProposal(int n_alive, std::int64_t gold) {
  if (n_alive < 1) throw std::invalid_argument("at least one pirate must be alive");
  if (gold < PirateBribeCount(n_alive)) throw std::invalid_argument("not enough gold for the parity proposal");
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_alive), 0);
  for (int i = 2; i < n_alive; i += 2) out[static_cast<std::size_t>(i)] = 1;
  out[0] = gold - PirateBribeCount(n_alive);
  return out;
}

bool OptimalPirateVote(int offset, std::int64_t offered) {
  if (offered >= 2) return true;
  if (offered <= 0) return false;
  return offset % 2 == 0;
}

std::vector<PirateSubgame> SolvePirateGame(int n, std::int64_t gold) {
  if (n < 1) throw std::invalid_argument("at least one pirate is required");
  std::vector<PirateSubgame> table;
  table.reserve(static_cast<std::size_t>(n));
  table.push_back({1, gold, {gold}, false, {true}, {gold}});
  for (int k = 2; k <= n; ++k) {
    const PirateSubgame& next = table.back();
    const auto size = static_cast<std::size_t>(k);
    // Price of each voter's support: anything if rejection kills them,
    // otherwise one more than they get after the proposer is thrown over.
    std::vector<std::int64_t> price(size, 0);
    for (std::size_t i = 1; i < size; ++i) {
      price[i] = next.survives[i - 1] ? next.payoff[i - 1] + 1 : 0;
    }
    std::vector<std::size_t> voters(size - 1);
    std::iota(voters.begin(), voters.end(), std::size_t{1});
    std::stable_sort(voters.begin(), voters.end(), [&](std::size_t a, std::size_t b) {
      return price[a] != price[b] ? price[a] < price[b] : a > b;
    });
    const std::size_t needed = (size + 1) / 2 - 1;
    std::int64_t cost = 0;
    for (std::size_t j = 0; j < needed; ++j) cost += price[voters[j]];

    PirateSubgame game{k, gold, std::vector<std::int64_t>(size, 0), false, {}, {}};
    if (cost <= gold) {
      for (std::size_t j = 0; j < needed; ++j) game.proposal[voters[j]] = price[voters[j]];
      game.proposal[0] = gold - cost;
      game.survives.assign(size, true);
      game.payoff = game.proposal;
    } else {
      game.doomed = true;
      game.proposal[0] = gold;
      game.survives.push_back(false);
      game.payoff.push_back(0);
      game.survives.insert(game.survives.end(), next.survives.begin(), next.survives.end());
      game.payoff.insert(game.payoff.end(), next.payoff.begin(), next.payoff.end());
    }
    table.push_back(std::move(game));
  }
  return table;
}

bool BackwardInductionVote(const std::vector<PirateSubgame>& solution, int n_alive, int offset,
                           std::int64_t offered) {
  if (n_alive < 2 || offset < 1 || offset >= n_alive) throw std::invalid_argument("voter offset out of range");
  const PirateSubgame& next = solution.at(static_cast<std::size_t>(n_alive - 2));
  const auto i = static_cast<std::size_t>(offset - 1);
  if (!next.survives[i]) return true;
  return offered > next.payoff[i];
}

std::vector<std::int64_t> OptimalPirateProposal(int n_alive, std::int64_t gold) {
  if (gold >= PirateBribeCount(n_alive)) return ClosedFormPirateProposal(n_alive, gold);
  return SolvePirateGame(n_alive, gold).back().proposal;
}

std::int64_t L1Distance(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("L1 distance needs equal lengths");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return total;
}

}  // namespace gamebench
