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

#include "polregret/learner_log.h"

namespace polregret {

std::vector<std::int64_t> LearnerLog::PlayedIndices() const {
  std::vector<std::int64_t> out;
  out.reserve(episodes.size());
  for (const auto& e : episodes) out.push_back(e.policy_index);
  return out;
}

std::int64_t LearnerLog::Switches() const {
  std::int64_t switches = 0;
  for (std::size_t t = 1; t < episodes.size(); ++t) {
    if (episodes[t].policy_index != episodes[t - 1].policy_index) ++switches;
  }
  return switches;
}

}  // namespace polregret
