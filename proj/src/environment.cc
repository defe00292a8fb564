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

#include "polregret/environment.h"

namespace polregret {

Environment::Environment(const MarkovGame& game,
                         std::shared_ptr<const Adversary> adversary,
                         SeedStream seeds)
    : game_(game), process_(std::move(adversary)), seeds_(seeds) {
  if (process_.adversary().horizon() != game.horizon() ||
      process_.adversary().num_states() != game.num_states() ||
      process_.adversary().num_adversary_actions() !=
          game.num_adversary_actions()) {
    throw DimensionError("adversary dimensions do not match the game");
  }
}

Trajectory Environment::Play(const DeterministicPolicy& pi) {
  CheckDims(game_, pi);
  const StochasticPolicy mu = process_.Play(pi);
  Rng rng = seeds_.At(static_cast<std::uint64_t>(process_.episodes()));
  return SampleEpisode(game_, pi, mu, rng);
}

}  // namespace polregret
