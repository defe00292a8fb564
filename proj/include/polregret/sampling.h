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

#ifndef POLREGRET_SAMPLING_H_
#define POLREGRET_SAMPLING_H_

#include <cstdint>
#include <random>
#include <span>

#include "polregret/game.h"

namespace polregret {

using Rng = std::mt19937_64;

// Reproducible substreams keyed by (seed, stream, index). Every episode of a
// run draws from its own generator, so results do not depend on how many
// numbers earlier episodes consumed or on which thread ran them.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  Rng At(std::uint64_t index) const;
  SeedStream Substream(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

double UniformUnit(Rng& rng);

// Inverse-CDF draw from a probability vector.
int SampleIndex(std::span<const double> probs, Rng& rng);

Trajectory SampleEpisode(const MarkovGame& game, const StochasticPolicy& pi,
                         const StochasticPolicy& mu, Rng& rng);
Trajectory SampleEpisode(const MarkovGame& game, const DeterministicPolicy& pi,
                         const StochasticPolicy& mu, Rng& rng);

}  // namespace polregret

#endif  // POLREGRET_SAMPLING_H_
