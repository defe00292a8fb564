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

#include "polregret/sampling.h"

#include <array>

namespace polregret {
namespace {

std::array<std::uint32_t, 6> Split(std::uint64_t a, std::uint64_t b,
                                   std::uint64_t c) {
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
          static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
}

}  // namespace

Rng SeedStream::At(std::uint64_t index) const {
  auto words = Split(seed_, stream_, index);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

SeedStream SeedStream::Substream(std::uint64_t stream) const {
  // Derive a new seed so nested substreams do not collide with siblings.
  Rng mix = At(~stream);
  return SeedStream(mix(), stream);
}

double UniformUnit(Rng& rng) {
  // 53 random mantissa bits; identical across standard library versions.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int SampleIndex(std::span<const double> probs, Rng& rng) {
  const double u = UniformUnit(rng);
  double acc = 0.0;
  int last_positive = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    acc += probs[i];
    last_positive = static_cast<int>(i);
    if (u < acc) return last_positive;
  }
  return last_positive;
}

Trajectory SampleEpisode(const MarkovGame& game, const StochasticPolicy& pi,
                         const StochasticPolicy& mu, Rng& rng) {
  CheckDims(game, pi);
  CheckAdversaryDims(game, mu);
  Trajectory traj;
  traj.steps.reserve(game.horizon());
  int s = game.initial_state();
  for (int h = 0; h < game.horizon(); ++h) {
    TrajectoryStep step;
    step.state = s;
    step.learner_action = SampleIndex(pi.row(h, s), rng);
    step.adversary_action = SampleIndex(mu.row(h, s), rng);
    step.reward =
        game.reward(h, s, step.learner_action, step.adversary_action);
    step.next_state = SampleIndex(
        game.transition_row(h, s, step.learner_action, step.adversary_action),
        rng);
    s = step.next_state;
    traj.steps.push_back(step);
  }
  return traj;
}

Trajectory SampleEpisode(const MarkovGame& game, const DeterministicPolicy& pi,
                         const StochasticPolicy& mu, Rng& rng) {
  CheckDims(game, pi);
  CheckAdversaryDims(game, mu);
  Trajectory traj;
  traj.steps.reserve(game.horizon());
  int s = game.initial_state();
  for (int h = 0; h < game.horizon(); ++h) {
    TrajectoryStep step;
    step.state = s;
    step.learner_action = pi.action(h, s);
    step.adversary_action = SampleIndex(mu.row(h, s), rng);
    step.reward =
        game.reward(h, s, step.learner_action, step.adversary_action);
    step.next_state = SampleIndex(
        game.transition_row(h, s, step.learner_action, step.adversary_action),
        rng);
    s = step.next_state;
    traj.steps.push_back(step);
  }
  return traj;
}

}  // namespace polregret
