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

#ifndef POLREGRET_ADVERSARY_CHECKS_H_
#define POLREGRET_ADVERSARY_CHECKS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polregret/adversary.h"

namespace polregret {

struct ConsistencyCounterexample {
  std::vector<DeterministicPolicy> first;
  std::vector<DeterministicPolicy> second;
  int h = 0;
  int s = 0;
};

struct ConsistencyReport {
  bool consistent = true;
  bool exhaustive = false;
  std::int64_t probes = 0;
  std::optional<ConsistencyCounterexample> counterexample;
};

// Probes pairs of m-windows of deterministic policies that agree at some
// (h, s) and checks that the responses agree there. Exhaustive over all
// A^(H*S*m) windows when that count is at most `probe_budget`; otherwise
// draws `probe_budget` random windows, each paired with a partner that
// agrees at one random (h, s) and is random elsewhere.
ConsistencyReport CheckConsistency(const Adversary& adversary, int num_states,
                                   int num_learner_actions, int horizon, int m,
                                   std::int64_t probe_budget,
                                   std::uint64_t seed = 0);

struct MemoryBoundReport {
  bool bounded = true;
  bool exhaustive = false;
  std::int64_t probes = 0;
  std::optional<std::pair<std::vector<DeterministicPolicy>,
                          std::vector<DeterministicPolicy>>>
      counterexample;
};

// For t in [1, max_t], compares Respond on pairs of length-t histories drawn
// from `pool` that share their last min(t, m) entries. Exhaustive over
// pool^t when that fits in `probe_budget`, randomized otherwise.
MemoryBoundReport CheckMemoryBound(const Adversary& adversary,
                                   std::span<const DeterministicPolicy> pool,
                                   int m, int max_t, std::int64_t probe_budget,
                                   std::uint64_t seed = 0);

// The response row at (h, s) for equal windows must not depend on t.
bool CheckStationary(const Adversary& adversary,
                     std::span<const DeterministicPolicy> window,
                     std::span<const std::int64_t> episode_indices);

}  // namespace polregret

#endif  // POLREGRET_ADVERSARY_CHECKS_H_
