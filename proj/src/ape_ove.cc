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

#include "polregret/ape_ove.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "polregret/errors.h"

namespace polregret {

namespace {

std::int64_t CellsPerLayer(const GameDims& d) {
  return static_cast<std::int64_t>(d.num_states) * d.num_learner_actions *
         d.num_adversary_actions;
}

}  // namespace

double LogLogClamped(std::int64_t t) {
  if (t < 2) return 0.0;
  return std::max(0.0, std::log(std::log(static_cast<double>(t))));
}

std::int64_t EpochTBar(std::int64_t num_episodes, const GameDims& dims,
                       int memory) {
  const double target = static_cast<double>(num_episodes) /
                        static_cast<double>(CellsPerLayer(dims) * dims.horizon);
  std::int64_t t = 1;
  while ((memory - 1) * LogLogClamped(t) + static_cast<double>(t) < target) {
    ++t;
  }
  return t;
}

std::int64_t ExplorationLength(std::int64_t t_bar, int k) {
  const double x = std::pow(static_cast<double>(t_bar),
                            1.0 - std::ldexp(1.0, -k));
  const double r = std::round(x);
  if (std::fabs(x - r) < 1e-9) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

EpochSchedule MakeEpochSchedule(std::int64_t num_episodes,
                                const GameDims& dims, int memory) {
  if (memory < 1) throw ConfigError("memory must be at least 1");
  const std::int64_t hsab = CellsPerLayer(dims) * dims.horizon;
  if (num_episodes < hsab * memory) {
    throw ConfigError("T=" + std::to_string(num_episodes) +
                      " is below one epoch (HSAB*m=" +
                      std::to_string(hsab * memory) + ")");
  }
  EpochSchedule out;
  out.t_bar = EpochTBar(num_episodes, dims, memory);
  std::int64_t budget = 0;
  // With m > 1 the burn-ins can use up T before Σ T_k reaches T̄; epochs past
  // that point would get no episodes and are dropped.
  for (int k = 1; budget < num_episodes; ++k) {
    const std::int64_t t_k = ExplorationLength(out.t_bar, k);
    out.exploration_lengths.push_back(t_k);
    out.episode_budgets.push_back(hsab * (memory - 1 + t_k));
    budget += out.episode_budgets.back();
  }
  out.num_epochs = static_cast<int>(out.exploration_lengths.size());
  out.episode_budgets.back() -= budget - num_episodes;
  out.total_episodes = num_episodes;
  return out;
}

InfrequentSet::InfrequentSet(GameDims dims) : dims_(dims) {
  flags_.assign(static_cast<std::size_t>(dims.horizon) * CellsPerLayer(dims) *
                    dims.num_states,
                0);
}

void InfrequentSet::Insert(int h, int s, int a, int b, int next) {
  char& flag = flags_[Index(h, s, a, b, next)];
  if (flag == 0) {
    flag = 1;
    ++size_;
  }
}

AbsorbingEstimate::AbsorbingEstimate(GameDims dims) : dims_(dims) {
  const int n = num_extended_states();
  rows_.assign(static_cast<std::size_t>(dims.horizon) * n *
                   dims.num_learner_actions * dims.num_adversary_actions * n,
               0.0);
  for (int h = 0; h < dims.horizon; ++h) {
    for (int s = 0; s < n; ++s) {
      for (int a = 0; a < dims.num_learner_actions; ++a) {
        for (int b = 0; b < dims.num_adversary_actions; ++b) {
          auto row = mutable_row(h, s, a, b);
          if (s == dagger()) {
            row[dagger()] = 1.0;
          } else {
            for (int x = 0; x < dims.num_states; ++x) {
              row[x] = 1.0 / dims.num_states;
            }
          }
        }
      }
    }
  }
}

AbsorbingEstimate AbsorbingEstimate::FromGame(const MarkovGame& game) {
  const GameDims& d = game.dims();
  AbsorbingEstimate out(d);
  for (int h = 0; h < d.horizon; ++h) {
    for (int s = 0; s < d.num_states; ++s) {
      for (int a = 0; a < d.num_learner_actions; ++a) {
        for (int b = 0; b < d.num_adversary_actions; ++b) {
          auto row = out.mutable_row(h, s, a, b);
          const auto truth = game.transition_row(h, s, a, b);
          std::copy(truth.begin(), truth.end(), row.begin());
          row[out.dagger()] = 0.0;
        }
      }
    }
  }
  return out;
}

void AbsorbingEstimate::Validate() const {
  for (int h = 0; h < dims_.horizon; ++h) {
    for (int s = 0; s < num_extended_states(); ++s) {
      for (int a = 0; a < dims_.num_learner_actions; ++a) {
        for (int b = 0; b < dims_.num_adversary_actions; ++b) {
          const auto r = row(h, s, a, b);
          const std::string where = "(h=" + std::to_string(h) +
                                    ", s=" + std::to_string(s) +
                                    ", a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b) + ")";
          if (!IsProbabilityVector(r, kStochasticTolerance)) {
            throw InvalidGameError("estimate row " + where +
                                   " is not a distribution");
          }
          if (s == dagger() && r[dagger()] != 1.0) {
            throw InvalidGameError("dagger row " + where + " not absorbing");
          }
        }
      }
    }
  }
}

void TransitionEstimate(int h, const Counters& counts,
                        const InfrequentSet& infrequent,
                        AbsorbingEstimate& estimate) {
  const GameDims& d = estimate.dims();
  const int dagger = estimate.dagger();
  for (int s = 0; s < d.num_states; ++s) {
    for (int a = 0; a < d.num_learner_actions; ++a) {
      for (int b = 0; b < d.num_adversary_actions; ++b) {
        auto row = estimate.mutable_row(h, s, a, b);
        std::fill(row.begin(), row.end(), 0.0);
        const std::int64_t n = counts.visits(h, s, a, b);
        if (n == 0) {
          row[dagger] = 1.0;
          continue;
        }
        std::int64_t truncated = 0;
        for (int x = 0; x < d.num_states; ++x) {
          const std::int64_t c = counts.transitions(h, s, a, b, x);
          if (infrequent.Contains(h, s, a, b, x)) {
            truncated += c;
          } else {
            row[x] = static_cast<double>(c) / static_cast<double>(n);
          }
        }
        row[dagger] = static_cast<double>(truncated) / static_cast<double>(n);
      }
    }
    for (int a = 0; a < d.num_learner_actions; ++a) {
      for (int b = 0; b < d.num_adversary_actions; ++b) {
        auto row = estimate.mutable_row(h, dagger, a, b);
        std::fill(row.begin(), row.end(), 0.0);
        row[dagger] = 1.0;
      }
    }
  }
}

TransitionReward TransitionReward::Plain(const GameDims& dims,
                                         std::span<const double> rewards) {
  TransitionReward out;
  out.kind_ = Kind::kPlain;
  out.dims_ = dims;
  out.rewards_ = rewards;
  return out;
}

TransitionReward TransitionReward::Truncated(const GameDims& dims,
                                             std::span<const double> rewards,
                                             const InfrequentSet& infrequent) {
  TransitionReward out = Plain(dims, rewards);
  out.kind_ = Kind::kTruncated;
  out.infrequent_ = &infrequent;
  return out;
}

TransitionReward TransitionReward::OneHot(const GameDims& dims, int h, int s,
                                          int a, int b) {
  TransitionReward out;
  out.kind_ = Kind::kOneHot;
  out.dims_ = dims;
  out.target_[0] = h;
  out.target_[1] = s;
  out.target_[2] = a;
  out.target_[3] = b;
  return out;
}

double TransitionReward::at(int h, int s, int a, int b, int next) const {
  if (s >= dims_.num_states) return 0.0;  // s† pays nothing
  switch (kind_) {
    case Kind::kOneHot:
      return (h == target_[0] && s == target_[1] && a == target_[2] &&
              b == target_[3])
                 ? 1.0
                 : 0.0;
    case Kind::kTruncated:
      if (next >= dims_.num_states || infrequent_->Contains(h, s, a, b, next)) {
        return 0.0;
      }
      [[fallthrough]];
    case Kind::kPlain:
      return rewards_[((static_cast<std::size_t>(h) * dims_.num_states + s) *
                           dims_.num_learner_actions + a) *
                          dims_.num_adversary_actions + b];
  }
  return 0.0;
}

ValueTable OptimisticValueEstimates(const DeterministicPolicy& pi,
                                    const TransitionReward& reward,
                                    const AbsorbingEstimate& transitions,
                                    const VersionSpace& theta) {
  const GameDims& d = transitions.dims();
  const int S = d.num_states, B = d.num_adversary_actions, H = d.horizon;
  if (pi.horizon() != H || pi.num_states() != S ||
      pi.num_actions() != d.num_learner_actions) {
    throw DimensionError("policy does not match estimate dimensions");
  }
  const int n = transitions.num_extended_states();
  ValueTable v;
  v.horizon = H;
  v.num_states = S;
  v.values.assign(static_cast<std::size_t>(H + 1) * S, 0.0);
  std::vector<double> next(n, 0.0);  // next[S] is s†, always zero
  std::vector<double> q(B);
  for (int h = H - 1; h >= 0; --h) {
    std::copy_n(v.values.begin() + (h + 1) * S, S, next.begin());
    for (int s = 0; s < S; ++s) {
      const int a = pi.action(h, s);
      for (int b = 0; b < B; ++b) {
        const auto row = transitions.row(h, s, a, b);
        double total = 0.0;
        for (int x = 0; x < n; ++x) {
          if (row[x] == 0.0) continue;
          total += row[x] * (reward.at(h, s, a, b, x) + next[x]);
        }
        q[b] = total;
      }
      double best = kNegInf;
      for (int idx : theta.surviving(h, s, a)) {
        const auto p = theta.candidates()[idx];
        double value = 0.0;
        for (int b = 0; b < B; ++b) value += p[b] * q[b];
        best = std::max(best, value);
      }
      if (best == kNegInf) {
        throw RealizabilityError("empty version space at h=" +
                                 std::to_string(h) + ", s=" +
                                 std::to_string(s));
      }
      v.values[h * S + s] = best;
    }
  }
  return v;
}

double OptimisticValueEstimate(const DeterministicPolicy& pi,
                               const TransitionReward& reward,
                               const AbsorbingEstimate& transitions,
                               const VersionSpace& theta, int initial_state) {
  return OptimisticValueEstimates(pi, reward, transitions, theta)
      .at(0, initial_state);
}

std::vector<std::int64_t> RefinePolicySpace(std::span<const double> values,
                                            double threshold) {
  std::vector<std::int64_t> out;
  if (values.empty()) return out;
  const double best = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= best - threshold) out.push_back(static_cast<std::int64_t>(i));
  }
  return out;
}

ExplorationResult LayerwiseExploration(
    std::span<const std::int64_t> policy_space,
    std::span<const DeterministicPolicy> policy_set, Environment& env,
    const CandidateSet& candidates, const AbsorbingEstimate& previous,
    const ExplorationParams& params, LearnerLog& log) {
  if (policy_space.empty()) throw InvalidPolicyError("empty policy space");
  if (params.exploration_length < 1) {
    throw ConfigError("exploration length must be positive");
  }
  const GameDims& d = env.dims();
  ExplorationResult out{
      previous,
      VersionSpace(candidates, d.horizon, d.num_states, d.num_learner_actions,
                   params.alpha),
      InfrequentSet(d), Counters(d)};
  const int s1 = env.initial_state();

  for (int h = 0; h < d.horizon; ++h) {
    const std::size_t layer_start = log.episodes.size();
    std::vector<TrajectoryStep> layer_data;
    layer_data.reserve(static_cast<std::size_t>(CellsPerLayer(d) *
                                                params.exploration_length));
    for (int s = 0; s < d.num_states; ++s) {
      for (int a = 0; a < d.num_learner_actions; ++a) {
        for (int b = 0; b < d.num_adversary_actions; ++b) {
          const TransitionReward target = TransitionReward::OneHot(d, h, s, a, b);
          const std::vector<double> values = ScanPolicies(
              static_cast<std::int64_t>(policy_space.size()),
              [&](std::int64_t i) {
                return OptimisticValueEstimate(policy_set[policy_space[i]],
                                               target, out.transitions,
                                               out.theta, s1);
              },
              params.execution);
          const std::int64_t pick = ArgmaxLowestIndex(values);
          const std::int64_t policy_index = policy_space[pick];
          const std::int64_t plays =
              params.memory - 1 + params.exploration_length;
          for (std::int64_t e = 0; e < plays; ++e) {
            if (params.max_episodes >= 0 &&
                out.episodes_played >= params.max_episodes) {
              out.complete = false;
              for (std::size_t i = layer_start; i < log.episodes.size(); ++i) {
                log.episodes[i].incomplete_layer = true;
              }
              return out;
            }
            EpisodeRecord record;
            record.episode = env.episodes_played() + 1;
            record.policy_index = policy_index;
            record.optimistic_value = values[pick];
            record.epoch = params.epoch;
            record.layer = h;
            record.burn_in = e < params.memory - 1;
            record.trajectory = env.Play(policy_set[policy_index]);
            record.realized_return = record.trajectory.Return();
            if (!record.burn_in) layer_data.push_back(record.trajectory.steps[h]);
            log.episodes.push_back(std::move(record));
            ++out.episodes_played;
          }
        }
      }
    }
    for (const TrajectoryStep& step : layer_data) {
      out.counts.Record(h, step);
      out.theta.Observe(h, step.state, step.learner_action,
                        step.adversary_action);
    }
    for (int s = 0; s < d.num_states; ++s) {
      for (int a = 0; a < d.num_learner_actions; ++a) out.theta.Refine(h, s, a);
    }
    for (int s = 0; s < d.num_states; ++s) {
      for (int a = 0; a < d.num_learner_actions; ++a) {
        for (int b = 0; b < d.num_adversary_actions; ++b) {
          for (int x = 0; x < d.num_states; ++x) {
            if (static_cast<double>(out.counts.transitions(h, s, a, b, x)) <=
                params.infrequent_threshold) {
              out.infrequent.Insert(h, s, a, b, x);
            }
          }
        }
      }
    }
    TransitionEstimate(h, out.counts, out.infrequent, out.transitions);
  }
  return out;
}

double InfrequentThreshold(const GameDims& dims, int num_epochs, double delta,
                           double c_freq) {
  const double H = dims.horizon;
  return c_freq * H * H *
         std::log(static_cast<double>(CellsPerLayer(dims)) * dims.horizon *
                  num_epochs / delta);
}

double RefinementThreshold(const GameDims& dims, double alpha, double d_star,
                           std::int64_t exploration_length, double c_refine) {
  const double H = dims.horizon;
  return c_refine * H * H * static_cast<double>(CellsPerLayer(dims)) *
         std::sqrt(alpha / (d_star * static_cast<double>(exploration_length)));
}

LearnerLog RunApeOve(Environment& env,
                     std::span<const DeterministicPolicy> policy_set,
                     const CandidateSet& candidates,
                     const ApeOveConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const GameDims& d = env.dims();
  if (policy_set.empty()) throw InvalidPolicyError("empty policy set");
  if (config.delta <= 0.0 || config.delta >= 1.0) {
    throw ConfigError("delta must lie in (0, 1)");
  }
  if (!(config.d_star > 0.0 && config.d_star <= 1.0)) {
    throw ConfigError("d_star must lie in (0, 1]");
  }
  if (candidates.num_actions() != d.num_adversary_actions) {
    throw DimensionError("candidate rows do not have B entries");
  }
  const EpochSchedule schedule =
      MakeEpochSchedule(config.num_episodes, d, config.memory);
  const double alpha =
      DefaultAlpha(candidates.size(), d.horizon, d.num_states,
                   d.num_learner_actions, config.num_episodes, config.delta,
                   config.c_alpha);

  LearnerLog log;
  log.algorithm = "ape-ove";
  log.d_star = config.d_star;
  log.episodes.reserve(static_cast<std::size_t>(config.num_episodes));

  std::vector<std::int64_t> policy_space(policy_set.size());
  std::iota(policy_space.begin(), policy_space.end(), std::int64_t{0});
  AbsorbingEstimate estimate(d);
  const auto rewards = env.rewards();

  for (int k = 1; k <= schedule.num_epochs; ++k) {
    ExplorationParams params;
    params.exploration_length = schedule.exploration_lengths[k - 1];
    params.memory = config.memory;
    params.alpha = alpha;
    params.infrequent_threshold =
        InfrequentThreshold(d, schedule.num_epochs, config.delta,
                            config.c_freq);
    params.epoch = k;
    params.max_episodes = schedule.episode_budgets[k - 1];
    params.execution = config.execution;

    EpochSummary summary;
    summary.epoch = k;
    summary.exploration_length = params.exploration_length;
    summary.policy_space_size = static_cast<std::int64_t>(policy_space.size());
    summary.policy_space = policy_space;

    ExplorationResult result = LayerwiseExploration(
        policy_space, policy_set, env, candidates, estimate, params, log);
    summary.episodes_consumed = result.episodes_played;
    summary.infrequent_size = result.infrequent.size();
    summary.complete = result.complete;
    if (!result.complete) {
      log.epochs.push_back(std::move(summary));
      break;
    }

    const TransitionReward truncated =
        TransitionReward::Truncated(d, rewards, result.infrequent);
    const std::vector<double> values = ScanPolicies(
        static_cast<std::int64_t>(policy_set.size()),
        [&](std::int64_t i) {
          return OptimisticValueEstimate(policy_set[i], truncated,
                                         result.transitions, result.theta,
                                         env.initial_state());
        },
        config.execution);
    summary.threshold = RefinementThreshold(
        d, alpha, config.d_star, params.exploration_length, config.c_refine);
    summary.max_optimistic_value =
        *std::max_element(values.begin(), values.end());
    policy_space = RefinePolicySpace(values, summary.threshold);
    estimate = std::move(result.transitions);
    log.epochs.push_back(std::move(summary));
  }
  log.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return log;
}

}  // namespace polregret
