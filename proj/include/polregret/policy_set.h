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

#ifndef POLREGRET_POLICY_SET_H_
#define POLREGRET_POLICY_SET_H_

#include <cstdint>
#include <vector>

#include "polregret/game.h"

namespace polregret {

// Shared by every operation that scans the full deterministic policy class.
inline constexpr std::int64_t kDefaultPolicyCap = 1'000'000;

// base^exponent, or -1 if the result exceeds `cap`.
std::int64_t CappedPower(std::int64_t base, std::int64_t exponent,
                         std::int64_t cap);

// A^(H*S); throws CapExceededError above `cap`.
std::int64_t CountDeterministicPolicies(int num_states, int num_actions,
                                        int horizon,
                                        std::int64_t cap = kDefaultPolicyCap);

// Lexicographic order over the action table read as a base-A numeral, with
// cell (h=0, s=0) the most significant digit. Index i of the result is
// PolicyFromIndex(i).
std::vector<DeterministicPolicy> EnumerateDeterministicPolicies(
    int num_states, int num_actions, int horizon,
    std::int64_t cap = kDefaultPolicyCap);

DeterministicPolicy PolicyFromIndex(std::int64_t index, int num_states,
                                    int num_actions, int horizon);
std::int64_t PolicyIndex(const DeterministicPolicy& pi);

}  // namespace polregret

#endif  // POLREGRET_POLICY_SET_H_
