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

#ifndef POLREGRET_COUNTERS_H_
#define POLREGRET_COUNTERS_H_

#include <cstdint>
#include <vector>

#include "polregret/game.h"

namespace polregret {

// Visit counts N_h(s, a, b) and N_h(s, a, b, s').
class Counters {
 public:
  explicit Counters(GameDims dims);

  const GameDims& dims() const { return dims_; }

  std::int64_t visits(int h, int s, int a, int b) const {
    return visits_[Cell(h, s, a, b)];
  }
  std::int64_t transitions(int h, int s, int a, int b, int next) const {
    return transitions_[Cell(h, s, a, b) * dims_.num_states + next];
  }

  void Record(int h, int s, int a, int b, int next);
  void Record(int h, const TrajectoryStep& step) {
    Record(h, step.state, step.learner_action, step.adversary_action,
           step.next_state);
  }

  // Σ_{s'} N_h(s, a, b, s') == N_h(s, a, b) everywhere.
  bool Consistent() const;

 private:
  std::size_t Cell(int h, int s, int a, int b) const {
    return ((static_cast<std::size_t>(h) * dims_.num_states + s) *
                dims_.num_learner_actions + a) * dims_.num_adversary_actions + b;
  }

  GameDims dims_;
  std::vector<std::int64_t> visits_;
  std::vector<std::int64_t> transitions_;
};

}  // namespace polregret

#endif  // POLREGRET_COUNTERS_H_
