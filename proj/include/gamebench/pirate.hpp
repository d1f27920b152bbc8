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


#ifndef GAMEBENCH_PIRATE_HPP_
#define GAMEBENCH_PIRATE_HPP_

#include <cstdint>
#include <vector>

namespace gamebench {

// Allocations are indexed by offset from the proposer: entry 0 is the
// proposer, entry i the i-th pirate junior to them among the alive ones.
// The absolute rank of entry i is proposer_rank + i, so parity checks only
// need the offset.

// Number of juniors the closed-form proposer bribes: floor((n_alive - 1) / 2).
std::int64_t PirateBribeCount(int n_alive);

// One gold to every alive junior at an even offset, remainder to the proposer.
// Requires gold >= PirateBribeCount(n_alive).
std::vector<std::int64_t> ClosedFormPirateProposal(int n_alive, std::int64_t gold);

// Two or more golds: accept. None: reject. Exactly one: accept iff the voter
// shares the proposer's rank parity, i.e. the offset is even.
bool OptimalPirateVote(int offset, std::int64_t offered);

struct PirateSubgame {
  int n_alive = 0;
  std::int64_t gold = 0;
  // Proposal the proposer makes in this subgame. A doomed proposer (who
  // cannot buy enough votes) offers everything to themselves.
  std::vector<std::int64_t> proposal;
  bool doomed = false;
  // Equilibrium result of this subgame, per offset.
  std::vector<bool> survives;
  std::vector<std::int64_t> payoff;
};

// Subgame-perfect play for every suffix of the seniority order. Entry k-1
// describes the subgame with k alive pirates. Preferences are lexicographic:
// survival, then gold, then seeing others thrown overboard (so an offer equal
// to the continuation value is rejected). Among equally cheap supporters the
// proposer buys the most junior ones.
std::vector<PirateSubgame> SolvePirateGame(int n, std::int64_t gold);

// Vote of the pirate at `offset` under the backward-induction solution.
bool BackwardInductionVote(const std::vector<PirateSubgame>& solution, int n_alive, int offset,
                           std::int64_t offered);

// Closed form when affordable, backward induction otherwise.
std::vector<std::int64_t> OptimalPirateProposal(int n_alive, std::int64_t gold);

std::int64_t L1Distance(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

}  // namespace gamebench

#endif  // GAMEBENCH_PIRATE_HPP_
