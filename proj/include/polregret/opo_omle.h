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

// Optimistic policy optimization with optimistic MLE, for 1-memory-bounded
// stationary consistent adversaries.
//
// Each episode the learner plays the policy maximizing a doubly optimistic
// value: a count-based bonus on the empirical transition model, and a max
// over the log-likelihood version space of the adversary's action
// distribution at every (h, s, π_h(s)).

#ifndef POLREGRET_OPO_OMLE_H_
#define POLREGRET_OPO_OMLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "polregret/counters.h"
#include "polregret/dynamic_programming.h"
#include "polregret/environment.h"
#include "polregret/learner_log.h"
#include "polregret/policy_scan.h"
#include "polregret/version_space.h"

namespace polregret {

// c * H * sqrt((iota + log_pi_card) / max(t, 1)).
double Bonus(std::int64_t t, int horizon, double iota, double log_pi_card,
             double c = 1.0);

struct BonusSchedule {
  int horizon = 1;
  double iota = 0.0;
  double log_pi_card = 0.0;
  double c = 1.0;

  double operator()(std::int64_t t) const {
    return Bonus(t, horizon, iota, log_pi_card, c);
  }
};

// Full table of V̄_h(s), h in [0, H]; V̄_h is clipped at H - h.
// `rewards` uses the MarkovGame::CellIndex layout.
ValueTable DoublyOptimisticValues(const Counters& counters,
                                  const VersionSpace& theta,
                                  const DeterministicPolicy& pi,
                                  std::span<const double> rewards,
                                  const BonusSchedule& beta);

// V̄_1(s1).
double DoublyOptimisticValue(const Counters& counters,
                             const VersionSpace& theta,
                             const DeterministicPolicy& pi,
                             std::span<const double> rewards,
                             const BonusSchedule& beta, int initial_state);

struct OpoOmleConfig {
  std::int64_t num_episodes = 0;
  double delta = 0.05;
  double c_bonus = 1.0;
  double c_alpha = 1.0;
  Execution execution = Execution::kAuto;
};

// Runs T episodes; ties in the optimistic argmax go to the lowest policy
// index. Propagates RealizabilityError.
LearnerLog RunOpoOmle(Environment& env,
                      std::span<const DeterministicPolicy> policy_set,
                      const CandidateSet& candidates,
                      const OpoOmleConfig& config);

}  // namespace polregret

#endif  // POLREGRET_OPO_OMLE_H_
