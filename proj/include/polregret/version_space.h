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

#ifndef POLREGRET_VERSION_SPACE_H_
#define POLREGRET_VERSION_SPACE_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "polregret/errors.h"

namespace polregret {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Finite list of candidate adversary action distributions over B. Its size
// plays the role of the bracketing number.
class CandidateSet {
 public:
  CandidateSet() = default;
  // Throws InvalidPolicyError on an empty list, ragged rows, or a row that is
  // not a probability vector.
  explicit CandidateSet(std::vector<std::vector<double>> candidates);

  int size() const { return static_cast<int>(candidates_.size()); }
  int num_actions() const { return num_actions_; }
  std::span<const double> operator[](int i) const { return candidates_[i]; }
  const std::vector<std::vector<double>>& rows() const { return candidates_; }

  // Index of an exactly equal candidate, or -1.
  int Find(std::span<const double> row) const;

 private:
  std::vector<std::vector<double>> candidates_;
  int num_actions_ = 0;
};

// Σ_b count(b) log p(b); kNegInf if an observed action has zero probability.
double LogLikelihood(std::span<const double> candidate,
                     std::span<const std::int64_t> counts);

double TotalVariation(std::span<const double> p, std::span<const double> q);

// c * log(candidate_count * H * S * A * T / delta).
double DefaultAlpha(int candidate_count, int horizon, int num_states,
                    int num_learner_actions, std::int64_t num_episodes,
                    double delta, double c = 1.0);

// Per-(h, s, a) log-likelihood version spaces over one CandidateSet.
class VersionSpace {
 public:
  VersionSpace(CandidateSet candidates, int horizon, int num_states,
               int num_learner_actions, double alpha);

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  int num_learner_actions() const { return num_learner_actions_; }
  double alpha() const { return alpha_; }
  const CandidateSet& candidates() const { return candidates_; }

  // Appends `b` to D_{hsa} and refines the surviving set.
  void Update(int h, int s, int a, int b);
  // Appends `b` to D_{hsa} without refining.
  void Observe(int h, int s, int a, int b);
  // surviving <- {θ ∈ surviving : L(θ) >= max_{θ' ∈ surviving} L(θ') - α}.
  // Throws RealizabilityError if every surviving candidate has zero
  // likelihood.
  void Refine(int h, int s, int a);

  std::span<const int> surviving(int h, int s, int a) const {
    return surviving_[Key(h, s, a)];
  }
  std::span<const std::int64_t> counts(int h, int s, int a) const {
    return {counts_.data() + Key(h, s, a) * candidates_.num_actions(),
            static_cast<std::size_t>(candidates_.num_actions())};
  }
  std::int64_t num_observations(int h, int s, int a) const;

  // Max over surviving candidates of TotalVariation(candidate, reference).
  // Throws RealizabilityError on an empty surviving set.
  double MaxTvTo(int h, int s, int a, std::span<const double> reference) const;

 private:
  std::size_t Key(int h, int s, int a) const {
    return (static_cast<std::size_t>(h) * num_states_ + s) *
               num_learner_actions_ + a;
  }

  CandidateSet candidates_;
  int horizon_;
  int num_states_;
  int num_learner_actions_;
  double alpha_;
  std::vector<std::vector<int>> surviving_;
  std::vector<std::int64_t> counts_;
};

// From-scratch version space {θ ∈ Θ : L(θ) >= max_Θ L - α} for one data
// multiset. The incremental set is not contained in it in general: an
// early elimination is never undone.
std::vector<int> BatchVersionSpace(const CandidateSet& candidates,
                                   std::span<const std::int64_t> counts,
                                   double alpha);

}  // namespace polregret

#endif  // POLREGRET_VERSION_SPACE_H_
