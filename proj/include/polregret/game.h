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

#ifndef POLREGRET_GAME_H_
#define POLREGRET_GAME_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polregret/errors.h"

namespace polregret {

inline constexpr double kStochasticTolerance = 1e-9;

// Sizes of a tabular finite-horizon two-player Markov game. Steps are
// zero-based in code: h ranges over [0, H).
struct GameDims {
  int num_states = 0;
  int num_learner_actions = 0;
  int num_adversary_actions = 0;
  int horizon = 0;

  bool operator==(const GameDims&) const = default;
};

// Dense tabular Markov game (S, A, B, H, P, r, s1).
//
// Transition rows are stored contiguously: the row for (h, s, a, b) starts at
// TransitionOffset(h, s, a, b) and holds S probabilities.
class MarkovGame {
 public:
  MarkovGame() = default;
  // Creates a game with all-zero rewards and all-zero transitions; callers
  // must fill rows before the game validates.
  MarkovGame(GameDims dims, int initial_state);

  const GameDims& dims() const { return dims_; }
  int num_states() const { return dims_.num_states; }
  int num_learner_actions() const { return dims_.num_learner_actions; }
  int num_adversary_actions() const { return dims_.num_adversary_actions; }
  int horizon() const { return dims_.horizon; }
  int initial_state() const { return initial_state_; }
  void set_initial_state(int s) { initial_state_ = s; }

  std::size_t CellIndex(int h, int s, int a, int b) const {
    return ((static_cast<std::size_t>(h) * dims_.num_states + s) *
                dims_.num_learner_actions + a) * dims_.num_adversary_actions + b;
  }

  double reward(int h, int s, int a, int b) const {
    return rewards_[CellIndex(h, s, a, b)];
  }
  void set_reward(int h, int s, int a, int b, double r) {
    rewards_[CellIndex(h, s, a, b)] = r;
  }

  std::span<const double> transition_row(int h, int s, int a, int b) const {
    return {transitions_.data() + CellIndex(h, s, a, b) * dims_.num_states,
            static_cast<std::size_t>(dims_.num_states)};
  }
  std::span<double> mutable_transition_row(int h, int s, int a, int b) {
    return {transitions_.data() + CellIndex(h, s, a, b) * dims_.num_states,
            static_cast<std::size_t>(dims_.num_states)};
  }
  double transition(int h, int s, int a, int b, int next) const {
    return transition_row(h, s, a, b)[next];
  }

  const std::vector<double>& rewards() const { return rewards_; }
  const std::vector<double>& transitions() const { return transitions_; }

 private:
  GameDims dims_;
  int initial_state_ = 0;
  std::vector<double> rewards_;
  std::vector<double> transitions_;
};

// Throws InvalidGameError naming the first violated invariant.
void ValidateGame(const MarkovGame& game);

// Markov deterministic policy: action_table[h * S + s] in [0, num_actions).
class DeterministicPolicy {
 public:
  DeterministicPolicy() = default;
  DeterministicPolicy(int horizon, int num_states, int num_actions);
  DeterministicPolicy(int horizon, int num_states, int num_actions,
                      std::vector<int> actions);

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }

  int action(int h, int s) const { return actions_[h * num_states_ + s]; }
  void set_action(int h, int s, int a) { actions_[h * num_states_ + s] = a; }
  const std::vector<int>& actions() const { return actions_; }

  bool operator==(const DeterministicPolicy& other) const {
    return actions_ == other.actions_;
  }

 private:
  int horizon_ = 0;
  int num_states_ = 0;
  int num_actions_ = 0;
  std::vector<int> actions_;
};

// Markov stochastic policy over `num_actions` actions per (h, s).
class StochasticPolicy {
 public:
  StochasticPolicy() = default;
  // Uniform over actions.
  StochasticPolicy(int horizon, int num_states, int num_actions);

  static StochasticPolicy FromDeterministic(const DeterministicPolicy& pi);

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }

  std::span<const double> row(int h, int s) const {
    return {probs_.data() + RowOffset(h, s),
            static_cast<std::size_t>(num_actions_)};
  }
  std::span<double> mutable_row(int h, int s) {
    return {probs_.data() + RowOffset(h, s),
            static_cast<std::size_t>(num_actions_)};
  }
  double prob(int h, int s, int a) const { return probs_[RowOffset(h, s) + a]; }
  void SetRow(int h, int s, std::span<const double> p);
  void SetPointMass(int h, int s, int a);

  const std::vector<double>& probs() const { return probs_; }

  // Throws InvalidPolicyError if any row is not a probability vector.
  void Validate() const;

  bool operator==(const StochasticPolicy& other) const {
    return horizon_ == other.horizon_ && num_states_ == other.num_states_ &&
           num_actions_ == other.num_actions_ && probs_ == other.probs_;
  }

 private:
  std::size_t RowOffset(int h, int s) const {
    return (static_cast<std::size_t>(h) * num_states_ + s) * num_actions_;
  }

  int horizon_ = 0;
  int num_states_ = 0;
  int num_actions_ = 0;
  std::vector<double> probs_;
};

struct TrajectoryStep {
  int state = 0;
  int learner_action = 0;
  int adversary_action = 0;
  double reward = 0.0;
  int next_state = 0;
};

// Exactly H steps; steps[h].next_state is s_{h+1} (the last one included).
struct Trajectory {
  std::vector<TrajectoryStep> steps;

  double Return() const;
};

// d_h(s, a): probability of visiting (s, a) at step h, marginal over the
// adversary's action.
class OccupancyMeasure {
 public:
  OccupancyMeasure(int horizon, int num_states, int num_actions)
      : horizon_(horizon),
        num_states_(num_states),
        num_actions_(num_actions),
        d_(static_cast<std::size_t>(horizon) * num_states * num_actions, 0.0) {}

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }

  double at(int h, int s, int a) const { return d_[Index(h, s, a)]; }
  double& at(int h, int s, int a) { return d_[Index(h, s, a)]; }
  double StepTotal(int h) const;

 private:
  std::size_t Index(int h, int s, int a) const {
    return (static_cast<std::size_t>(h) * num_states_ + s) * num_actions_ + a;
  }

  int horizon_;
  int num_states_;
  int num_actions_;
  std::vector<double> d_;
};

// Throws DimensionError unless the policies match the game.
void CheckDims(const MarkovGame& game, const DeterministicPolicy& pi);
void CheckDims(const MarkovGame& game, const StochasticPolicy& pi);
void CheckAdversaryDims(const MarkovGame& game, const StochasticPolicy& mu);

bool IsProbabilityVector(std::span<const double> p,
                         double tol = kStochasticTolerance);

}  // namespace polregret

#endif  // POLREGRET_GAME_H_
