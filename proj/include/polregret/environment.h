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

#ifndef POLREGRET_ENVIRONMENT_H_
#define POLREGRET_ENVIRONMENT_H_

#include <cstdint>
#include <memory>
#include <span>

#include "polregret/adversary.h"
#include "polregret/game.h"
#include "polregret/sampling.h"

namespace polregret {

// Sampling-only access to a game played against an adaptive adversary. A
// learner sees the dimensions, the initial state, the reward function, and
// sampled trajectories; transitions and the adversary's responses stay
// hidden.
class Environment {
 public:
  // `game` must outlive the environment.
  Environment(const MarkovGame& game, std::shared_ptr<const Adversary> adversary,
              SeedStream seeds);

  const GameDims& dims() const { return game_.dims(); }
  int initial_state() const { return game_.initial_state(); }
  double reward(int h, int s, int a, int b) const {
    return game_.reward(h, s, a, b);
  }
  // The learner knows r; P and the adversary stay hidden.
  std::span<const double> rewards() const { return game_.rewards(); }

  // Episode t = episodes_played() + 1: the adversary answers
  // f_t(π^1, ..., π^t) and the trajectory is drawn from seeds.At(t).
  Trajectory Play(const DeterministicPolicy& pi);

  std::int64_t episodes_played() const { return process_.episodes(); }

 private:
  const MarkovGame& game_;
  AdversaryProcess process_;
  SeedStream seeds_;
};

}  // namespace polregret

#endif  // POLREGRET_ENVIRONMENT_H_
