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

#include "polregret/regret.h"

#include <algorithm>

#include "polregret/dynamic_programming.h"
#include "polregret/errors.h"

namespace polregret {

namespace {

// Distinct responses and, per episode, which one was played.
struct ResponseGroups {
  std::vector<StochasticPolicy> unique;
  std::vector<std::int64_t> counts;
  std::vector<int> of_episode;
};

ResponseGroups GroupResponses(const std::vector<StochasticPolicy>& responses) {
  ResponseGroups out;
  out.of_episode.reserve(responses.size());
  int last = -1;
  for (const StochasticPolicy& mu : responses) {
    int id = -1;
    if (last >= 0 && out.unique[last] == mu) {
      id = last;
    } else {
      for (std::size_t u = 0; u < out.unique.size(); ++u) {
        if (out.unique[u] == mu) {
          id = static_cast<int>(u);
          break;
        }
      }
    }
    if (id < 0) {
      id = static_cast<int>(out.unique.size());
      out.unique.push_back(mu);
      out.counts.push_back(0);
    }
    ++out.counts[id];
    out.of_episode.push_back(id);
    last = id;
  }
  return out;
}

// Σ_t V^{π, μ_t} for every π, plus the per-episode values of the maximizer.
struct ExternalScan {
  std::int64_t best = -1;
  double best_sum = 0.0;
  std::vector<double> best_values;
};

ExternalScan ScanExternal(const MarkovGame& game,
                          std::span<const DeterministicPolicy> policy_set,
                          const ResponseGroups& groups, Execution exec) {
  const std::vector<double> sums = ScanPolicies(
      static_cast<std::int64_t>(policy_set.size()),
      [&](std::int64_t i) {
        double total = 0.0;
        for (std::size_t u = 0; u < groups.unique.size(); ++u) {
          total += static_cast<double>(groups.counts[u]) *
                   ExactValue(game, policy_set[i], groups.unique[u]);
        }
        return total;
      },
      exec);
  ExternalScan out;
  out.best = ArgmaxLowestIndex(sums);
  out.best_sum = sums[out.best];
  std::vector<double> per_group(groups.unique.size());
  for (std::size_t u = 0; u < groups.unique.size(); ++u) {
    per_group[u] = ExactValue(game, policy_set[out.best], groups.unique[u]);
  }
  out.best_values.reserve(groups.of_episode.size());
  for (int id : groups.of_episode) out.best_values.push_back(per_group[id]);
  return out;
}

void CheckPlayed(std::span<const DeterministicPolicy> policy_set,
                 std::span<const std::int64_t> played) {
  if (policy_set.empty()) throw InvalidPolicyError("empty policy set");
  for (std::int64_t idx : played) {
    if (idx < 0 || idx >= static_cast<std::int64_t>(policy_set.size())) {
      throw InvalidPolicyError("played index " + std::to_string(idx) +
                               " outside the policy set");
    }
  }
}

}  // namespace

bool HasClosedFormBenchmark(const Adversary& adversary) {
  return adversary.memory().has_value() && adversary.stationary();
}

std::vector<double> FixedPolicyValueSequence(
    const MarkovGame& game, std::shared_ptr<const Adversary> adversary,
    const DeterministicPolicy& pi, std::int64_t num_episodes) {
  AdversaryProcess process(std::move(adversary));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(num_episodes, 0)));
  for (std::int64_t t = 1; t <= num_episodes; ++t) {
    out.push_back(ExactValue(game, pi, process.Play(pi)));
  }
  return out;
}

double FixedPolicyBenchmark(const MarkovGame& game,
                            std::shared_ptr<const Adversary> adversary,
                            const DeterministicPolicy& pi,
                            std::int64_t num_episodes, Benchmark mode) {
  const bool closed = HasClosedFormBenchmark(*adversary);
  if (mode == Benchmark::kClosedForm && !closed) {
    throw ConfigError(
        "closed-form benchmark needs a memory-bounded stationary adversary");
  }
  if (mode == Benchmark::kNaive || !closed) {
    double total = 0.0;
    for (double v : FixedPolicyValueSequence(game, adversary, pi, num_episodes)) {
      total += v;
    }
    return total;
  }
  // f_t([π]^t) is fixed once the window is full.
  const std::int64_t warm = std::min<std::int64_t>(
      num_episodes, std::max(*adversary->memory(), 1));
  AdversaryProcess process(std::move(adversary));
  double total = 0.0;
  double last = 0.0;
  for (std::int64_t t = 1; t <= warm; ++t) {
    last = ExactValue(game, pi, process.Play(pi));
    total += last;
  }
  return total + static_cast<double>(num_episodes - warm) * last;
}

std::vector<double> FixedPolicyBenchmarks(
    const MarkovGame& game, std::shared_ptr<const Adversary> adversary,
    std::span<const DeterministicPolicy> policy_set, std::int64_t num_episodes,
    Benchmark mode, Execution exec) {
  return ScanPolicies(
      static_cast<std::int64_t>(policy_set.size()),
      [&](std::int64_t i) {
        return FixedPolicyBenchmark(game, adversary, policy_set[i],
                                    num_episodes, mode);
      },
      exec);
}

std::vector<StochasticPolicy> RealizedResponses(
    std::shared_ptr<const Adversary> adversary,
    std::span<const DeterministicPolicy> policy_set,
    std::span<const std::int64_t> played) {
  CheckPlayed(policy_set, played);
  AdversaryProcess process(std::move(adversary));
  std::vector<StochasticPolicy> out;
  out.reserve(played.size());
  for (std::int64_t idx : played) out.push_back(process.Play(policy_set[idx]));
  return out;
}

RegretReport PolicyRegret(const MarkovGame& game,
                          std::shared_ptr<const Adversary> adversary,
                          std::span<const DeterministicPolicy> policy_set,
                          std::span<const std::int64_t> played,
                          Benchmark mode, Execution exec) {
  CheckPlayed(policy_set, played);
  const std::int64_t T = static_cast<std::int64_t>(played.size());
  RegretReport report;

  const std::vector<StochasticPolicy> responses =
      RealizedResponses(adversary, policy_set, played);
  report.learner_values.reserve(played.size());
  for (std::int64_t t = 0; t < T; ++t) {
    report.learner_values.push_back(
        ExactValue(game, policy_set[played[t]], responses[t]));
    report.learner_value_sum += report.learner_values.back();
  }

  const std::vector<double> benchmarks =
      FixedPolicyBenchmarks(game, adversary, policy_set, T, mode, exec);
  report.best_fixed_policy_index = ArgmaxLowestIndex(benchmarks);
  report.best_fixed_value = benchmarks[report.best_fixed_policy_index];
  report.policy_regret = report.best_fixed_value - report.learner_value_sum;

  const ResponseGroups groups = GroupResponses(responses);
  const ExternalScan external = ScanExternal(game, policy_set, groups, exec);
  report.best_external_policy_index = external.best;
  report.external_regret = external.best_sum - report.learner_value_sum;

  const std::vector<double> best_sequence = FixedPolicyValueSequence(
      game, adversary, policy_set[report.best_fixed_policy_index], T);
  report.instantaneous_policy_regret.reserve(played.size());
  report.instantaneous_external_regret.reserve(played.size());
  double pr = 0.0, er = 0.0;
  for (std::int64_t t = 0; t < T; ++t) {
    const double ip = best_sequence[t] - report.learner_values[t];
    const double ie = external.best_values[t] - report.learner_values[t];
    report.instantaneous_policy_regret.push_back(ip);
    report.instantaneous_external_regret.push_back(ie);
    pr += ip;
    er += ie;
    report.cumulative_policy_regret.push_back(pr);
    report.cumulative_external_regret.push_back(er);
  }
  return report;
}

double ExternalRegret(const MarkovGame& game,
                      std::shared_ptr<const Adversary> adversary,
                      std::span<const DeterministicPolicy> policy_set,
                      std::span<const std::int64_t> played, Execution exec) {
  const std::vector<StochasticPolicy> responses =
      RealizedResponses(std::move(adversary), policy_set, played);
  double learner = 0.0;
  for (std::size_t t = 0; t < played.size(); ++t) {
    learner += ExactValue(game, policy_set[played[t]], responses[t]);
  }
  const ExternalScan external =
      ScanExternal(game, policy_set, GroupResponses(responses), exec);
  return external.best_sum - learner;
}

}  // namespace polregret
