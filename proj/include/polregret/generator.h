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

// Seeded random instances: a game, a candidate set, and a response table
// whose rows are all drawn from the candidates.

#ifndef POLREGRET_GENERATOR_H_
#define POLREGRET_GENERATOR_H_

#include <cstdint>

#include "polregret/adversary.h"
#include "polregret/game.h"
#include "polregret/sampling.h"
#include "polregret/version_space.h"

namespace polregret {

// Dims accepted by the generator.
inline constexpr int kMaxGeneratedDim = 64;

// Rewards uniform on [0, 1], transition rows normalized uniform draws.
MarkovGame RandomGame(const GameDims& dims, Rng& rng);

// `count` distinct rows over `num_actions`, each entry at least `min_mass`.
CandidateSet RandomCandidates(int count, int num_actions, Rng& rng,
                              double min_mass = 0.05);

// Every (h, s, window) row is a uniformly chosen candidate.
ResponseTable RandomTable(const GameDims& dims, int memory,
                          const CandidateSet& candidates, Rng& rng);

struct GeneratedInstance {
  MarkovGame game;
  CandidateSet candidates;
  ResponseTable table;
};

// Throws ConfigError on bad dims, and CapExceededError when A^{HS} or the
// table size A^m goes past `cap`.
GeneratedInstance GenerateInstance(const GameDims& dims, int memory,
                                   std::uint64_t seed, int num_candidates = 4,
                                   std::int64_t cap = 1'000'000);

}  // namespace polregret

#endif  // POLREGRET_GENERATOR_H_
