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

#include "polregret/policy_set.h"

#include <string>

namespace polregret {

std::int64_t CappedPower(std::int64_t base, std::int64_t exponent,
                         std::int64_t cap) {
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) return -1;
    result *= base;
    if (result > cap) return -1;
  }
  return result;
}

std::int64_t CountDeterministicPolicies(int num_states, int num_actions,
                                        int horizon, std::int64_t cap) {
  if (num_states <= 0 || num_actions <= 0 || horizon <= 0) {
    throw DimensionError("policy class dimensions must be positive");
  }
  const std::int64_t n = CappedPower(
      num_actions, static_cast<std::int64_t>(horizon) * num_states, cap);
  if (n < 0) {
    throw CapExceededError(
        "A^(H*S) = " + std::to_string(num_actions) + "^" +
        std::to_string(horizon * num_states) + " exceeds the policy cap " +
        std::to_string(cap));
  }
  return n;
}

DeterministicPolicy PolicyFromIndex(std::int64_t index, int num_states,
                                    int num_actions, int horizon) {
  const int cells = num_states * horizon;
  std::vector<int> actions(cells, 0);
  for (int c = cells - 1; c >= 0; --c) {
    actions[c] = static_cast<int>(index % num_actions);
    index /= num_actions;
  }
  return DeterministicPolicy(horizon, num_states, num_actions,
                             std::move(actions));
}

std::int64_t PolicyIndex(const DeterministicPolicy& pi) {
  std::int64_t index = 0;
  for (int a : pi.actions()) index = index * pi.num_actions() + a;
  return index;
}

std::vector<DeterministicPolicy> EnumerateDeterministicPolicies(
    int num_states, int num_actions, int horizon, std::int64_t cap) {
  const std::int64_t n =
      CountDeterministicPolicies(num_states, num_actions, horizon, cap);
  std::vector<DeterministicPolicy> out;
  out.reserve(n);
  DeterministicPolicy pi(horizon, num_states, num_actions);
  const int cells = num_states * horizon;
  for (std::int64_t i = 0; i < n; ++i) {
    out.push_back(pi);
    // Increment the base-A counter; the last cell is least significant.
    for (int c = cells - 1; c >= 0; --c) {
      const int h = c / num_states;
      const int s = c % num_states;
      const int a = pi.action(h, s) + 1;
      if (a < num_actions) {
        pi.set_action(h, s, a);
        break;
      }
      pi.set_action(h, s, 0);
    }
  }
  return out;
}

}  // namespace polregret
