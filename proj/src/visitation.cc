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

#include "polregret/visitation.h"

#include <algorithm>
#include <limits>

#include "polregret/dynamic_programming.h"

namespace polregret {

StochasticPolicy RepeatedResponse(const Adversary& adversary,
                                  const DeterministicPolicy& pi, int m) {
  std::vector<DeterministicPolicy> window(std::max(m, 1), pi);
  return Respond(adversary, window);
}

MinVisitation MinPositiveVisitation(
    const MarkovGame& game, std::span<const DeterministicPolicy> policy_set,
    const Adversary& adversary, int m, Execution exec) {
  const int S = game.num_states();
  const int A = game.num_learner_actions();
  const int H = game.horizon();
  const std::size_t cells = static_cast<std::size_t>(H) * S * A;
  const auto n = static_cast<std::int64_t>(policy_set.size());

  constexpr double kInf = std::numeric_limits<double>::infinity();
  MinVisitation result;
  result.per_cell.assign(cells, kInf);

  // Occupancies are computed a block at a time and folded serially, so the
  // result does not depend on thread scheduling.
  constexpr std::int64_t kBlock = 4096;
  std::vector<double> occupancies(cells * std::min(n, kBlock), 0.0);
  for (std::int64_t begin = 0; begin < n; begin += kBlock) {
    const std::int64_t count = std::min(kBlock, n - begin);
    ParallelFor(
        count,
        [&](std::int64_t j) {
          const auto& pi = policy_set[begin + j];
          const auto mu = RepeatedResponse(adversary, pi, m);
          const auto d = Occupancy(game, pi, mu);
          double* out = occupancies.data() + cells * j;
          for (int h = 0; h < H; ++h) {
            for (int s = 0; s < S; ++s) {
              for (int a = 0; a < A; ++a) {
                out[(h * S + s) * A + a] = d.at(h, s, a);
              }
            }
          }
        },
        exec);
    for (std::int64_t j = 0; j < count; ++j) {
      const double* d = occupancies.data() + cells * j;
      for (std::size_t c = 0; c < cells; ++c) {
        if (d[c] > 0.0) result.per_cell[c] = std::min(result.per_cell[c], d[c]);
      }
    }
  }
  result.d_star = 1.0;
  for (double& v : result.per_cell) {
    if (v == kInf) {
      v = 0.0;
    } else {
      result.d_star = std::min(result.d_star, v);
    }
  }
  return result;
}

}  // namespace polregret
