// Copyright 2026 The polregret Authors
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

// JSON documents for games, response tables and candidate sets, plus CSV
// exporters for run logs.
//
// Game document:
//   {"S":2, "A":2, "B":2, "H":2, "s1":0,
//    "transitions": [H][S][A][B][S], "rewards": [H][S][A][B]}
// Adversary document:
//   {"m":1, "rows": [H][S][A^m][B], "candidates": [[...], ...]}

#ifndef POLREGRET_IO_H_
#define POLREGRET_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "polregret/adversary.h"
#include "polregret/game.h"
#include "polregret/learner_log.h"
#include "polregret/regret.h"
#include "polregret/version_space.h"

namespace polregret {

using Json = nlohmann::json;

Json GameToJson(const MarkovGame& game);
// Shape errors throw ConfigError. With `validate`, ValidateGame runs too.
MarkovGame GameFromJson(const Json& doc, bool validate = true);

Json ResponseTableToJson(const ResponseTable& table);
// `dims` supplies H, S, A, B; shape errors throw ConfigError.
ResponseTable ResponseTableFromJson(const Json& doc, const GameDims& dims,
                                    bool validate = true);

Json CandidatesToJson(const CandidateSet& candidates);
CandidateSet CandidatesFromJson(const Json& rows);

std::string ReadFile(const std::filesystem::path& path);
Json ReadJsonFile(const std::filesystem::path& path);
// Writes to a sibling temp file and renames it over `path`.
void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& contents);

// Shortest decimal that round-trips.
std::string FormatDouble(double x);

// episode, policy_index, realized_return, optimistic_value,
// exact_value_vs_response, instantaneous_policy_regret
std::string LearnerLogCsv(const LearnerLog& log, const RegretReport& report);

// epoch, T_k, policy_space_size, infrequent_size, max_optimistic_value,
// threshold, episodes_consumed
std::string EpochSummaryCsv(const LearnerLog& log);

struct ResultRow {
  std::string algorithm;
  std::int64_t num_episodes = 0;
  std::uint64_t seed = 0;
  double policy_regret = 0.0;
  double external_regret = 0.0;
  double best_fixed_value = 0.0;
  double learner_value_sum = 0.0;
  double wall_ms = 0.0;
};

// algorithm, T, seed, PR_T, external_R_T, best_fixed_value,
// learner_value_sum, wall_ms
std::string ResultsCsv(const std::vector<ResultRow>& rows);

}  // namespace polregret

#endif  // POLREGRET_IO_H_
