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

#include "polregret/version_space.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "polregret/game.h"

namespace polregret {

CandidateSet::CandidateSet(std::vector<std::vector<double>> candidates)
    : candidates_(std::move(candidates)) {
  if (candidates_.empty()) {
    throw InvalidPolicyError("candidate set must be non-empty");
  }
  num_actions_ = static_cast<int>(candidates_.front().size());
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (candidates_[i].size() != static_cast<std::size_t>(num_actions_)) {
      throw InvalidPolicyError("candidate rows must share one length");
    }
    if (!IsProbabilityVector(candidates_[i])) {
      throw InvalidPolicyError("candidate " + std::to_string(i) +
                               " is not a probability vector");
    }
  }
}

int CandidateSet::Find(std::span<const double> row) const {
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (std::equal(row.begin(), row.end(), candidates_[i].begin(),
                   candidates_[i].end())) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

double LogLikelihood(std::span<const double> candidate,
                     std::span<const std::int64_t> counts) {
  double total = 0.0;
  for (std::size_t b = 0; b < counts.size(); ++b) {
    if (counts[b] == 0) continue;
    if (candidate[b] <= 0.0) return kNegInf;
    total += static_cast<double>(counts[b]) * std::log(candidate[b]);
  }
  return total;
}

double TotalVariation(std::span<const double> p, std::span<const double> q) {
  double l1 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) l1 += std::abs(p[i] - q[i]);
  return 0.5 * l1;
}

double DefaultAlpha(int candidate_count, int horizon, int num_states,
                    int num_learner_actions, std::int64_t num_episodes,
                    double delta, double c) {
  return c * std::log(static_cast<double>(candidate_count) * horizon *
                      num_states * num_learner_actions *
                      static_cast<double>(num_episodes) / delta);
}

VersionSpace::VersionSpace(CandidateSet candidates, int horizon, int num_states,
                           int num_learner_actions, double alpha)
    : candidates_(std::move(candidates)),
      horizon_(horizon),
      num_states_(num_states),
      num_learner_actions_(num_learner_actions),
      alpha_(alpha) {
  const std::size_t keys =
      static_cast<std::size_t>(horizon) * num_states * num_learner_actions;
  std::vector<int> all(candidates_.size());
  std::iota(all.begin(), all.end(), 0);
  surviving_.assign(keys, all);
  counts_.assign(keys * candidates_.num_actions(), 0);
}

void VersionSpace::Observe(int h, int s, int a, int b) {
  if (b < 0 || b >= candidates_.num_actions()) {
    throw DimensionError("adversary action out of range");
  }
  ++counts_[Key(h, s, a) * candidates_.num_actions() + b];
}

void VersionSpace::Update(int h, int s, int a, int b) {
  Observe(h, s, a, b);
  Refine(h, s, a);
}

void VersionSpace::Refine(int h, int s, int a) {
  auto& alive = surviving_[Key(h, s, a)];
  const auto data = counts(h, s, a);
  std::vector<double> ll(alive.size());
  double best = kNegInf;
  for (std::size_t i = 0; i < alive.size(); ++i) {
    ll[i] = LogLikelihood(candidates_[alive[i]], data);
    best = std::max(best, ll[i]);
  }
  if (best == kNegInf) {
    throw RealizabilityError(
        "no surviving candidate explains the data at (h=" + std::to_string(h) +
        ", s=" + std::to_string(s) + ", a=" + std::to_string(a) + ")");
  }
  const double threshold = best - alpha_;
  std::vector<int> kept;
  kept.reserve(alive.size());
  for (std::size_t i = 0; i < alive.size(); ++i) {
    if (ll[i] >= threshold) kept.push_back(alive[i]);
  }
  alive = std::move(kept);
}

std::int64_t VersionSpace::num_observations(int h, int s, int a) const {
  const auto c = counts(h, s, a);
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

double VersionSpace::MaxTvTo(int h, int s, int a,
                             std::span<const double> reference) const {
  const auto alive = surviving(h, s, a);
  if (alive.empty()) throw RealizabilityError("empty surviving set");
  double worst = 0.0;
  for (int i : alive) {
    worst = std::max(worst, TotalVariation(candidates_[i], reference));
  }
  return worst;
}

std::vector<int> BatchVersionSpace(const CandidateSet& candidates,
                                   std::span<const std::int64_t> counts,
                                   double alpha) {
  std::vector<double> ll(candidates.size());
  double best = kNegInf;
  for (int i = 0; i < candidates.size(); ++i) {
    ll[i] = LogLikelihood(candidates[i], counts);
    best = std::max(best, ll[i]);
  }
  std::vector<int> kept;
  if (best == kNegInf) return kept;
  for (int i = 0; i < candidates.size(); ++i) {
    if (ll[i] >= best - alpha) kept.push_back(i);
  }
  return kept;
}

}  // namespace polregret
