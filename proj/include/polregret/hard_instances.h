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

// Lower-bound constructions as executable game + adversary pairs.

#ifndef POLREGRET_HARD_INSTANCES_H_
#define POLREGRET_HARD_INSTANCES_H_

#include <cstdint>
#include <memory>
#include <span>

#include "polregret/adversary.h"
#include "polregret/game.h"

namespace polregret {

// Unbounded-memory trap: the adversary answers every episode with `low` if
// the learner's first policy was `trapped_policy` and with `high` otherwise.
// S=2, A=2, B=2, H=1 with r(s, a, b0) = 1 and r(s, a, b1) = 1 - gap, so
// sup_π V^{π,high} - sup_π V^{π,low} = gap.
struct TrapInstance {
  MarkovGame game;
  std::shared_ptr<const Adversary> adversary;
  DeterministicPolicy trapped_policy;
  StochasticPolicy low_response;
  StochasticPolicy high_response;
};

TrapInstance MakeTrapInstance(double gap);

// Needle in a haystack: a 1-memory stationary adversary answering `high`
// (b1 at the last step) only for policy_set[needle_index] and `low` (b0
// everywhere) for every other policy. Transitions are deterministic and
// independent of actions (s_{h+1} = s_h + 1 mod S from s1 = 0); the only
// nonzero reward is r_H(s, a, b1) = 1.
struct NeedleInstance {
  MarkovGame game;
  std::shared_ptr<const Adversary> adversary;
  StochasticPolicy low_response;
  StochasticPolicy high_response;
};

NeedleInstance MakeNeedleInstance(
    std::span<const DeterministicPolicy> policy_set, std::int64_t needle_index,
    int num_adversary_actions = 2);

}  // namespace polregret

#endif  // POLREGRET_HARD_INSTANCES_H_
