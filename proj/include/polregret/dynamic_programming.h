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

#ifndef POLREGRET_DYNAMIC_PROGRAMMING_H_
#define POLREGRET_DYNAMIC_PROGRAMMING_H_

#include <vector>

#include "polregret/game.h"

namespace polregret {

// V_h(s) for h in [0, H], stored as values[h * S + s]; row H is zero.
struct ValueTable {
  int horizon = 0;
  int num_states = 0;
  std::vector<double> values;

  double at(int h, int s) const { return values[h * num_states + s]; }
};

// Exact backward induction of V^{pi,mu}.
ValueTable EvaluatePolicies(const MarkovGame& game, const StochasticPolicy& pi,
                            const StochasticPolicy& mu);

// V_1^{pi,mu}(s1).
double ExactValue(const MarkovGame& game, const StochasticPolicy& pi,
                  const StochasticPolicy& mu);
double ExactValue(const MarkovGame& game, const DeterministicPolicy& pi,
                  const StochasticPolicy& mu);

// Forward recursion of Pr[s_h = s, a_h = a].
OccupancyMeasure Occupancy(const MarkovGame& game, const StochasticPolicy& pi,
                           const StochasticPolicy& mu);
OccupancyMeasure Occupancy(const MarkovGame& game,
                           const DeterministicPolicy& pi,
                           const StochasticPolicy& mu);

// Pr[s_h = s, a_h = a, b_h = b], flattened with MarkovGame::CellIndex.
std::vector<double> JointOccupancy(const MarkovGame& game,
                                   const DeterministicPolicy& pi,
                                   const StochasticPolicy& mu);

}  // namespace polregret

#endif  // POLREGRET_DYNAMIC_PROGRAMMING_H_
