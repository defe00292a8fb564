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

#include "polregret/game.h"

#include <cmath>
#include <numeric>
#include <sstream>

namespace polregret {
namespace {

std::string Cell(int h, int s, int a, int b) {
  std::ostringstream out;
  out << "(h=" << h << ", s=" << s << ", a=" << a << ", b=" << b << ")";
  return out.str();
}

}  // namespace

MarkovGame::MarkovGame(GameDims dims, int initial_state)
    : dims_(dims), initial_state_(initial_state) {
  if (dims.num_states <= 0 || dims.num_learner_actions <= 0 ||
      dims.num_adversary_actions <= 0 || dims.horizon <= 0) {
    throw InvalidGameError("game dimensions must be positive");
  }
  const std::size_t cells = static_cast<std::size_t>(dims.horizon) *
                            dims.num_states * dims.num_learner_actions *
                            dims.num_adversary_actions;
  rewards_.assign(cells, 0.0);
  transitions_.assign(cells * dims.num_states, 0.0);
}

bool IsProbabilityVector(std::span<const double> p, double tol) {
  if (p.empty()) return false;
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) return false;
    total += x;
  }
  return std::abs(total - 1.0) <= tol;
}

void ValidateGame(const MarkovGame& game) {
  const GameDims& d = game.dims();
  if (d.num_states <= 0 || d.num_learner_actions <= 0 ||
      d.num_adversary_actions <= 0 || d.horizon <= 0) {
    throw InvalidGameError("game dimensions must be positive");
  }
  if (game.initial_state() < 0 || game.initial_state() >= d.num_states) {
    throw InvalidGameError("initial state " +
                           std::to_string(game.initial_state()) +
                           " out of range");
  }
  for (int h = 0; h < d.horizon; ++h) {
    for (int s = 0; s < d.num_states; ++s) {
      for (int a = 0; a < d.num_learner_actions; ++a) {
        for (int b = 0; b < d.num_adversary_actions; ++b) {
          const double r = game.reward(h, s, a, b);
          if (!(r >= 0.0 && r <= 1.0)) {
            std::ostringstream out;
            out << "reward " << r << " outside [0,1] at " << Cell(h, s, a, b);
            throw InvalidGameError(out.str());
          }
          auto row = game.transition_row(h, s, a, b);
          double total = 0.0;
          for (int n = 0; n < d.num_states; ++n) {
            if (!(row[n] >= 0.0) || !std::isfinite(row[n])) {
              std::ostringstream out;
              out << "negative or non-finite transition probability to s'="
                  << n << " at " << Cell(h, s, a, b);
              throw InvalidGameError(out.str());
            }
            total += row[n];
          }
          if (std::abs(total - 1.0) > kStochasticTolerance) {
            std::ostringstream out;
            out << "transition row sums to " << total << " at "
                << Cell(h, s, a, b);
            throw InvalidGameError(out.str());
          }
        }
      }
    }
  }
}

DeterministicPolicy::DeterministicPolicy(int horizon, int num_states,
                                         int num_actions)
    : horizon_(horizon),
      num_states_(num_states),
      num_actions_(num_actions),
      actions_(static_cast<std::size_t>(horizon) * num_states, 0) {}

DeterministicPolicy::DeterministicPolicy(int horizon, int num_states,
                                         int num_actions,
                                         std::vector<int> actions)
    : horizon_(horizon),
      num_states_(num_states),
      num_actions_(num_actions),
      actions_(std::move(actions)) {
  if (actions_.size() != static_cast<std::size_t>(horizon) * num_states) {
    throw InvalidPolicyError("action table must have H*S entries");
  }
  for (int a : actions_) {
    if (a < 0 || a >= num_actions) {
      throw InvalidPolicyError("action index out of range");
    }
  }
}

StochasticPolicy::StochasticPolicy(int horizon, int num_states,
                                   int num_actions)
    : horizon_(horizon),
      num_states_(num_states),
      num_actions_(num_actions),
      probs_(static_cast<std::size_t>(horizon) * num_states * num_actions,
             1.0 / num_actions) {}

StochasticPolicy StochasticPolicy::FromDeterministic(
    const DeterministicPolicy& pi) {
  StochasticPolicy out(pi.horizon(), pi.num_states(), pi.num_actions());
  for (int h = 0; h < pi.horizon(); ++h) {
    for (int s = 0; s < pi.num_states(); ++s) out.SetPointMass(h, s, pi.action(h, s));
  }
  return out;
}

void StochasticPolicy::SetRow(int h, int s, std::span<const double> p) {
  if (p.size() != static_cast<std::size_t>(num_actions_)) {
    throw DimensionError("policy row has wrong length");
  }
  std::copy(p.begin(), p.end(), probs_.begin() + RowOffset(h, s));
}

void StochasticPolicy::SetPointMass(int h, int s, int a) {
  auto r = mutable_row(h, s);
  std::fill(r.begin(), r.end(), 0.0);
  r[a] = 1.0;
}

void StochasticPolicy::Validate() const {
  for (int h = 0; h < horizon_; ++h) {
    for (int s = 0; s < num_states_; ++s) {
      if (!IsProbabilityVector(row(h, s))) {
        throw InvalidPolicyError("policy row (h=" + std::to_string(h) +
                                 ", s=" + std::to_string(s) +
                                 ") is not a probability vector");
      }
    }
  }
}

double Trajectory::Return() const {
  double total = 0.0;
  for (const auto& step : steps) total += step.reward;
  return total;
}

double OccupancyMeasure::StepTotal(int h) const {
  double total = 0.0;
  for (int s = 0; s < num_states_; ++s) {
    for (int a = 0; a < num_actions_; ++a) total += at(h, s, a);
  }
  return total;
}

void CheckDims(const MarkovGame& game, const DeterministicPolicy& pi) {
  if (pi.horizon() != game.horizon() || pi.num_states() != game.num_states() ||
      pi.num_actions() != game.num_learner_actions()) {
    throw DimensionError("learner policy dimensions do not match the game");
  }
}

void CheckDims(const MarkovGame& game, const StochasticPolicy& pi) {
  if (pi.horizon() != game.horizon() || pi.num_states() != game.num_states() ||
      pi.num_actions() != game.num_learner_actions()) {
    throw DimensionError("learner policy dimensions do not match the game");
  }
}

void CheckAdversaryDims(const MarkovGame& game, const StochasticPolicy& mu) {
  if (mu.horizon() != game.horizon() || mu.num_states() != game.num_states() ||
      mu.num_actions() != game.num_adversary_actions()) {
    throw DimensionError("adversary policy dimensions do not match the game");
  }
}

}  // namespace polregret
