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


#ifndef GAMEBENCH_SCORING_HPP_
#define GAMEBENCH_SCORING_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamebench/match_log.hpp"
#include "gamebench/types.hpp"
#include "json.hpp"

namespace gamebench {

struct ScoreReport {
  GameKind game = GameKind::kGuessAverage;
  Rational raw;       // S1..S7; S8P for the pirate game
  Rational rescaled;  // in [0, 100]
  std::vector<Rational> per_round;
  // Pirate game only: correct-vote fraction per proposal round, plus the
  // S8P / S8V components.
  std::vector<Rational> per_round_votes;
  std::map<std::string, Rational> components;
  std::string run_id;
  bool operator==(const ScoreReport&) const = default;
};

nlohmann::json ScoreReportToJson(const ScoreReport& report);
ScoreReport ScoreReportFromJson(const nlohmann::json& json);

// Rescaling to [0, 100]. Every result is clamped.
Rational ClampScore(const Rational& value);
Rational RescaleGuess(const Rational& s1, const GuessParams& params);
Rational RescaleBar(const Rational& s2, const BarParams& params);
Rational RescaleDollar(const Rational& s3, const DollarParams& params);
Rational RescalePublicGoods(const Rational& s4, const PublicGoodsParams& params, int n_players);
Rational RescaleDiner(const Rational& s5);
Rational RescaleAuction(const Rational& s6);
Rational RescaleRoyale(const Rational& s7);
Rational RescalePirate(const Rational& s8p, const Rational& s8v, std::int64_t gold);

// Raw + rescaled scores from a log. Simultaneous games need all n_rounds
// records and sequential games a terminal marker, else Error(kIncompleteLog).
// Explicit-mode bar logs and second-price auction logs are not scored
// (Error(kNotScored)).
ScoreReport ScoreGuess(const MatchLog& log);
ScoreReport ScoreBar(const MatchLog& log);
ScoreReport ScoreDollar(const MatchLog& log);
ScoreReport ScorePublicGoods(const MatchLog& log);
ScoreReport ScoreDiner(const MatchLog& log);
ScoreReport ScoreAuction(const MatchLog& log);
ScoreReport ScoreRoyale(const MatchLog& log);
ScoreReport ScorePirate(const MatchLog& log);
ScoreReport ScoreMatch(const MatchLog& log);

bool IsScored(const MatchConfig& config);

struct Aggregate {
  double mean = 0;
  double std = 0;  // sample (n - 1) standard deviation; 0 when n == 1
  int runs = 0;
  bool degenerate = false;  // fewer than two runs
};

Aggregate AggregateScores(std::span<const double> scores);

struct LeaderboardRow {
  std::string model;
  std::string game;  // GameKindName or "overall"
  Aggregate stats;
};

// Rows per (model, game) in first-seen model order and GameKind order. A model
// that has all eight games also gets an "overall" row: the mean of its eight
// game means, with the std of those means.
std::vector<LeaderboardRow> BuildLeaderboard(
    const std::vector<std::pair<std::string, ScoreReport>>& scored_runs);
std::string LeaderboardCsv(const std::vector<LeaderboardRow>& rows);

}  // namespace gamebench

#endif  // GAMEBENCH_SCORING_HPP_
