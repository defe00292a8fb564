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

// Exact policy regret and external regret of a played sequence.
//
//   PR(T) = max_π Σ_t V^{π, f_t([π]^t)} - V^{π^t, f_t(π^1..π^t)}
//   R(T)  = max_π Σ_t V^{π, f_t(π^1..π^t)} - V^{π^t, f_t(π^1..π^t)}
//
// Every value is an exact DP value. Counterfactual histories are replayed
// through a fresh AdversaryProcess per comparator policy.

#ifndef POLREGRET_REGRET_H_
#define POLREGRET_REGRET_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "polregret/adversary.h"
#include "polregret/game.h"
#include "polregret/policy_scan.h"

namespace polregret {

struct RegretReport {
  double policy_regret = 0.0;    // PR(T)
  double external_regret = 0.0;  // R(T)
  std::int64_t best_fixed_policy_index = -1;
  // Σ_t V^{π*, f_t([π*]^t)} for the best fixed π*.
  double best_fixed_value = 0.0;
  std::int64_t best_external_policy_index = -1;
  // Σ_t V^{π^t, f_t(π^1..π^t)}.
  double learner_value_sum = 0.0;

  // Per episode, 0-based by t - 1.
  std::vector<double> learner_values;
  std::vector<double> instantaneous_policy_regret;
  std::vector<double> instantaneous_external_regret;
  std::vector<double> cumulative_policy_regret;
  std::vector<double> cumulative_external_regret;
};

enum class Benchmark {
  kAuto,       // closed form when the adversary allows it
  kClosedForm, // requires memory-bounded and stationary
  kNaive,      // T-fold counterfactual replay
};

// True when f_t([π]^t) is constant for t > max(m, 1).
bool HasClosedFormBenchmark(const Adversary& adversary);

// V^{π, f_t([π]^t)} for t = 1..T.
std::vector<double> FixedPolicyValueSequence(
    const MarkovGame& game, std::shared_ptr<const Adversary> adversary,
    const DeterministicPolicy& pi, std::int64_t num_episodes);

// Σ_{t<=T} V^{π, f_t([π]^t)}.
double FixedPolicyBenchmark(const MarkovGame& game,
                            std::shared_ptr<const Adversary> adversary,
                            const DeterministicPolicy& pi,
                            std::int64_t num_episodes,
                            Benchmark mode = Benchmark::kAuto);

// FixedPolicyBenchmark for every policy in the set.
std::vector<double> FixedPolicyBenchmarks(
    const MarkovGame& game, std::shared_ptr<const Adversary> adversary,
    std::span<const DeterministicPolicy> policy_set, std::int64_t num_episodes,
    Benchmark mode = Benchmark::kAuto, Execution exec = Execution::kAuto);

// f_t(π^1..π^t) for the played sequence.
std::vector<StochasticPolicy> RealizedResponses(
    std::shared_ptr<const Adversary> adversary,
    std::span<const DeterministicPolicy> policy_set,
    std::span<const std::int64_t> played);

RegretReport PolicyRegret(const MarkovGame& game,
                          std::shared_ptr<const Adversary> adversary,
                          std::span<const DeterministicPolicy> policy_set,
                          std::span<const std::int64_t> played,
                          Benchmark mode = Benchmark::kAuto,
                          Execution exec = Execution::kAuto);

double ExternalRegret(const MarkovGame& game,
                      std::shared_ptr<const Adversary> adversary,
                      std::span<const DeterministicPolicy> policy_set,
                      std::span<const std::int64_t> played,
                      Execution exec = Execution::kAuto);

}  // namespace polregret

#endif  // POLREGRET_REGRET_H_
