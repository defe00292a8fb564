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

// Adaptive policy elimination by optimistic value estimation, for
// m-memory-bounded stationary consistent adversaries.
//
// The run is split into epochs. Epoch k explores every (h, s, a, b) cell
// layer by layer with a sampling policy replayed for m - 1 burn-in episodes
// and T_k collection episodes, then drops every policy whose optimistic value
// under the truncated reward is too far below the best.

#ifndef POLREGRET_APE_OVE_H_
#define POLREGRET_APE_OVE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "polregret/counters.h"
#include "polregret/dynamic_programming.h"
#include "polregret/environment.h"
#include "polregret/game.h"
#include "polregret/learner_log.h"
#include "polregret/policy_scan.h"
#include "polregret/version_space.h"

namespace polregret {

struct EpochSchedule {
  std::int64_t t_bar = 0;
  int num_epochs = 0;  // K
  std::vector<std::int64_t> exploration_lengths;  // T_k
  // HSAB(m - 1 + T_k), except the last entry which is cut to land on T.
  std::vector<std::int64_t> episode_budgets;
  std::int64_t total_episodes = 0;
};

// max(0, log log t); 0 for t < 2.
double LogLogClamped(std::int64_t t);

// T̄ = min{t : (m - 1) log log t + t >= T / HSAB}.
std::int64_t EpochTBar(std::int64_t num_episodes, const GameDims& dims,
                       int memory);

// ceil(t_bar^(1 - 2^-k)), k >= 1.
std::int64_t ExplorationLength(std::int64_t t_bar, int k);

// K is the smallest epoch count whose full budgets HSAB(m - 1 + T_k) cover T;
// for m = 1 this is also the first K with Σ T_k >= T̄. The last budget is cut
// so the total is exactly T. Throws ConfigError if T < HSAB * m.
EpochSchedule MakeEpochSchedule(std::int64_t num_episodes,
                                const GameDims& dims, int memory);

// Set of (h, s, a, b, s') with s' a real state.
class InfrequentSet {
 public:
  explicit InfrequentSet(GameDims dims);

  bool Contains(int h, int s, int a, int b, int next) const {
    return flags_[Index(h, s, a, b, next)] != 0;
  }
  void Insert(int h, int s, int a, int b, int next);
  std::int64_t size() const { return size_; }
  const GameDims& dims() const { return dims_; }

 private:
  std::size_t Index(int h, int s, int a, int b, int next) const {
    return (((static_cast<std::size_t>(h) * dims_.num_states + s) *
                 dims_.num_learner_actions + a) *
                dims_.num_adversary_actions + b) *
               dims_.num_states + next;
  }

  GameDims dims_;
  std::vector<char> flags_;
  std::int64_t size_ = 0;
};

// Transition kernel over S ∪ {s†}, s† = num_states. The s† row is the point
// mass on s†.
class AbsorbingEstimate {
 public:
  // Every real row uniform over the S real states.
  explicit AbsorbingEstimate(GameDims dims);
  // The game's own kernel; s† is unreachable.
  static AbsorbingEstimate FromGame(const MarkovGame& game);

  const GameDims& dims() const { return dims_; }
  int dagger() const { return dims_.num_states; }
  int num_extended_states() const { return dims_.num_states + 1; }

  std::span<const double> row(int h, int s, int a, int b) const {
    return {rows_.data() + Row(h, s, a, b),
            static_cast<std::size_t>(num_extended_states())};
  }
  std::span<double> mutable_row(int h, int s, int a, int b) {
    return {rows_.data() + Row(h, s, a, b),
            static_cast<std::size_t>(num_extended_states())};
  }

  // Stochastic rows and an absorbing s†. Throws InvalidGameError.
  void Validate() const;

 private:
  std::size_t Row(int h, int s, int a, int b) const {
    return (((static_cast<std::size_t>(h) * num_extended_states() + s) *
                 dims_.num_learner_actions + a) *
                dims_.num_adversary_actions + b) *
           num_extended_states();
  }

  GameDims dims_;
  std::vector<double> rows_;
};

// Rebuilds layer h of `estimate` from the counts: empirical ratios on non-U
// successors, zero on U, remainder to s†. N_h(s, a, b) = 0 gives the point
// mass on s†.
void TransitionEstimate(int h, const Counters& counts,
                        const InfrequentSet& infrequent,
                        AbsorbingEstimate& estimate);

// Reward on a transition (h, s, a, b) -> next, next in [0, S].
class TransitionReward {
 public:
  // r_h(s, a, b) whatever the successor. `rewards` is CellIndex-laid-out and
  // must outlive this object.
  static TransitionReward Plain(const GameDims& dims,
                                std::span<const double> rewards);
  // r_h(s, a, b) * 1{next is a real state and (h, s, a, b, next) ∉ U}.
  static TransitionReward Truncated(const GameDims& dims,
                                    std::span<const double> rewards,
                                    const InfrequentSet& infrequent);
  // 1{(h, s, a, b) = target}.
  static TransitionReward OneHot(const GameDims& dims, int h, int s, int a,
                                 int b);

  double at(int h, int s, int a, int b, int next) const;

 private:
  enum class Kind { kPlain, kTruncated, kOneHot };
  TransitionReward() = default;

  Kind kind_ = Kind::kPlain;
  GameDims dims_;
  std::span<const double> rewards_;
  const InfrequentSet* infrequent_ = nullptr;
  int target_[4] = {0, 0, 0, 0};
};

// V̄_h(s) for the real states, no clipping. s† carries zero value.
ValueTable OptimisticValueEstimates(const DeterministicPolicy& pi,
                                    const TransitionReward& reward,
                                    const AbsorbingEstimate& transitions,
                                    const VersionSpace& theta);

// V̄_1(s1).
double OptimisticValueEstimate(const DeterministicPolicy& pi,
                               const TransitionReward& reward,
                               const AbsorbingEstimate& transitions,
                               const VersionSpace& theta, int initial_state);

// Indices i with values[i] >= max(values) - threshold, ascending.
std::vector<std::int64_t> RefinePolicySpace(std::span<const double> values,
                                            double threshold);

struct ExplorationResult {
  AbsorbingEstimate transitions;
  VersionSpace theta;
  InfrequentSet infrequent;
  Counters counts;
  std::int64_t episodes_played = 0;
  bool complete = true;
};

struct ExplorationParams {
  std::int64_t exploration_length = 1;  // T_k
  int memory = 1;
  double alpha = 1.0;
  // Counts at or below this go to U.
  double infrequent_threshold = 0.0;
  int epoch = 1;
  // Stop once this many episodes have been played in this call.
  std::int64_t max_episodes = -1;
  Execution execution = Execution::kAuto;
};

// One epoch of layerwise exploration over the policies policy_set[i] for i in
// `policy_space`. Layers >= h of `previous` seed the estimate until layer h is
// rebuilt. Every episode is appended to `log`.
ExplorationResult LayerwiseExploration(
    std::span<const std::int64_t> policy_space,
    std::span<const DeterministicPolicy> policy_set, Environment& env,
    const CandidateSet& candidates, const AbsorbingEstimate& previous,
    const ExplorationParams& params, LearnerLog& log);

struct ApeOveConfig {
  std::int64_t num_episodes = 0;
  int memory = 1;
  double delta = 0.05;
  double d_star = 1.0;
  double c_alpha = 1.0;
  double c_freq = 1.0;
  double c_refine = 1.0;
  Execution execution = Execution::kAuto;
};

// c_freq * H^2 * log(SABHK / delta).
double InfrequentThreshold(const GameDims& dims, int num_epochs, double delta,
                           double c_freq);

// c_refine * H^2 * SAB * sqrt(alpha / (d_star * T_k)).
double RefinementThreshold(const GameDims& dims, double alpha, double d_star,
                           std::int64_t exploration_length, double c_refine);

// Plays exactly config.num_episodes episodes.
LearnerLog RunApeOve(Environment& env,
                     std::span<const DeterministicPolicy> policy_set,
                     const CandidateSet& candidates,
                     const ApeOveConfig& config);

}  // namespace polregret

#endif  // POLREGRET_APE_OVE_H_
