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

#ifndef POLREGRET_VISITATION_H_
#define POLREGRET_VISITATION_H_

#include <span>
#include <vector>

#include "polregret/adversary.h"
#include "polregret/game.h"
#include "polregret/policy_scan.h"

namespace polregret {

// f([π]^m): the stationary response to the learner repeating π for
// max(m, 1) episodes.
StochasticPolicy RepeatedResponse(const Adversary& adversary,
                                  const DeterministicPolicy& pi, int m);

struct MinVisitation {
  // d* = min over (h, s, a) with positive visitation of per_cell.
  double d_star = 1.0;
  // d*_h(s, a), or 0 where no policy visits (h, s, a). Indexed
  // (h * S + s) * A + a.
  std::vector<double> per_cell;
};

// Minimum positive visitation probability of `policy_set` against the
// stationary response f([π]^m).
MinVisitation MinPositiveVisitation(const MarkovGame& game,
                                    std::span<const DeterministicPolicy> policy_set,
                                    const Adversary& adversary, int m,
                                    Execution exec = Execution::kAuto);

}  // namespace polregret

#endif  // POLREGRET_VISITATION_H_
