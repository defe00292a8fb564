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

#ifndef POLREGRET_LEARNER_LOG_H_
#define POLREGRET_LEARNER_LOG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "polregret/game.h"

namespace polregret {

struct EpisodeRecord {
  std::int64_t episode = 0;  // 1-based
  std::int64_t policy_index = 0;
  double realized_return = 0.0;
  // The learner's own optimistic estimate for the policy it played.
  double optimistic_value = 0.0;
  Trajectory trajectory;

  // Layerwise-exploration bookkeeping; unused by single-phase learners.
  int epoch = 0;
  int layer = -1;
  bool burn_in = false;
  bool incomplete_layer = false;
};

struct EpochSummary {
  int epoch = 0;
  std::int64_t exploration_length = 0;  // T_k
  std::int64_t policy_space_size = 0;   // |Π^k|
  std::int64_t infrequent_size = 0;     // |U^k|
  double max_optimistic_value = 0.0;
  double threshold = 0.0;
  std::int64_t episodes_consumed = 0;
  bool complete = true;
  // Policy indices of Π^k at the start of the epoch.
  std::vector<std::int64_t> policy_space;
};

struct LearnerLog {
  std::string algorithm;
  std::vector<EpisodeRecord> episodes;
  std::vector<EpochSummary> epochs;
  double d_star = 0.0;
  double wall_ms = 0.0;

  std::vector<std::int64_t> PlayedIndices() const;
  std::int64_t Switches() const;
};

}  // namespace polregret

#endif  // POLREGRET_LEARNER_LOG_H_
