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

#include "polregret/opo_omle.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "polregret/errors.h"

namespace polregret {

double Bonus(std::int64_t t, int horizon, double iota, double log_pi_card,
             double c) {
  const double n = static_cast<double>(std::max<std::int64_t>(t, 1));
  return c * horizon * std::sqrt((iota + log_pi_card) / n);
}

ValueTable DoublyOptimisticValues(const Counters& counters,
                                  const VersionSpace& theta,
                                  const DeterministicPolicy& pi,
                                  std::span<const double> rewards,
                                  const BonusSchedule& beta) {
  const GameDims& d = counters.dims();
  const int S = d.num_states, A = d.num_learner_actions,
            B = d.num_adversary_actions, H = d.horizon;
  if (pi.horizon() != H || pi.num_states() != S ||
      pi.num_actions() != A) {
    throw DimensionError("policy does not match counter dimensions");
  }
  if (theta.candidates().num_actions() != B) {
    throw DimensionError("candidate rows do not have B entries");
  }
  ValueTable v;
  v.horizon = H;
  v.num_states = S;
  v.values.assign(static_cast<std::size_t>(H + 1) * S, 0.0);
  std::vector<double> q(B);
  for (int h = H - 1; h >= 0; --h) {
    const double cap = H - h;
    const double* next = v.values.data() + (h + 1) * S;
    for (int s = 0; s < S; ++s) {
      const int a = pi.action(h, s);
      for (int b = 0; b < B; ++b) {
        const std::int64_t n = counters.visits(h, s, a, b);
        double expected = 0.0;
        if (n == 0) {
          for (int x = 0; x < S; ++x) expected += next[x];
          expected /= S;
        } else {
          for (int x = 0; x < S; ++x) {
            const std::int64_t c = counters.transitions(h, s, a, b, x);
            if (c > 0) expected += static_cast<double>(c) / n * next[x];
          }
        }
        const std::size_t cell =
            ((static_cast<std::size_t>(h) * S + s) * A + a) * B + b;
        q[b] = std::min(rewards[cell] + beta(n) + expected, cap);
      }
      double best = kNegInf;
      for (int idx : theta.surviving(h, s, a)) {
        const auto row = theta.candidates()[idx];
        double value = 0.0;
        for (int b = 0; b < B; ++b) value += row[b] * q[b];
        best = std::max(best, value);
      }
      if (best == kNegInf) {
        throw RealizabilityError("empty version space at h=" +
                                 std::to_string(h) + ", s=" +
                                 std::to_string(s));
      }
      // Rows summing to 1 + eps could push past the clip.
      v.values[h * S + s] = std::min(best, cap);
    }
  }
  return v;
}

double DoublyOptimisticValue(const Counters& counters,
                             const VersionSpace& theta,
                             const DeterministicPolicy& pi,
                             std::span<const double> rewards,
                             const BonusSchedule& beta, int initial_state) {
  return DoublyOptimisticValues(counters, theta, pi, rewards, beta)
      .at(0, initial_state);
}

LearnerLog RunOpoOmle(Environment& env,
                      std::span<const DeterministicPolicy> policy_set,
                      const CandidateSet& candidates,
                      const OpoOmleConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const GameDims& d = env.dims();
  if (policy_set.empty()) throw InvalidPolicyError("empty policy set");
  if (config.num_episodes < 0) throw ConfigError("negative episode count");
  if (config.delta <= 0.0 || config.delta >= 1.0) {
    throw ConfigError("delta must lie in (0, 1)");
  }
  if (candidates.num_actions() != d.num_adversary_actions) {
    throw DimensionError("candidate rows do not have B entries");
  }

  LearnerLog log;
  log.algorithm = "opo-omle";
  const std::int64_t T = config.num_episodes;
  const double T_eff = static_cast<double>(std::max<std::int64_t>(T, 1));
  BonusSchedule beta;
  beta.horizon = d.horizon;
  beta.iota = std::log(static_cast<double>(d.num_states) *
                       d.num_learner_actions * d.num_adversary_actions *
                       d.horizon * T_eff / config.delta);
  beta.log_pi_card = std::log(static_cast<double>(policy_set.size()));
  beta.c = config.c_bonus;

  Counters counters(d);
  VersionSpace theta(candidates, d.horizon, d.num_states,
                     d.num_learner_actions,
                     DefaultAlpha(candidates.size(), d.horizon, d.num_states,
                                  d.num_learner_actions,
                                  static_cast<std::int64_t>(T_eff),
                                  config.delta, config.c_alpha));
  const auto rewards = env.rewards();
  const int s1 = env.initial_state();
  log.episodes.reserve(static_cast<std::size_t>(T));

  for (std::int64_t t = 1; t <= T; ++t) {
    const std::vector<double> values = ScanPolicies(
        static_cast<std::int64_t>(policy_set.size()),
        [&](std::int64_t i) {
          return DoublyOptimisticValue(counters, theta, policy_set[i],
                                       rewards, beta, s1);
        },
        config.execution);
    const std::int64_t chosen = ArgmaxLowestIndex(values);
    EpisodeRecord record;
    record.episode = t;
    record.policy_index = chosen;
    record.optimistic_value = values[chosen];
    record.trajectory = env.Play(policy_set[chosen]);
    record.realized_return = record.trajectory.Return();
    for (int h = 0; h < d.horizon; ++h) {
      const TrajectoryStep& step = record.trajectory.steps[h];
      counters.Record(h, step);
      theta.Update(h, step.state, step.learner_action, step.adversary_action);
    }
    log.episodes.push_back(std::move(record));
  }
  log.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return log;
}

}  // namespace polregret
