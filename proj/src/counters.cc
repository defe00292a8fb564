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

#include "polregret/counters.h"

namespace polregret {

Counters::Counters(GameDims dims) : dims_(dims) {
  const std::size_t cells = static_cast<std::size_t>(dims.horizon) *
                            dims.num_states * dims.num_learner_actions *
                            dims.num_adversary_actions;
  visits_.assign(cells, 0);
  transitions_.assign(cells * dims.num_states, 0);
}

void Counters::Record(int h, int s, int a, int b, int next) {
  const std::size_t cell = Cell(h, s, a, b);
  ++visits_[cell];
  ++transitions_[cell * dims_.num_states + next];
}

bool Counters::Consistent() const {
  for (std::size_t cell = 0; cell < visits_.size(); ++cell) {
    std::int64_t total = 0;
    for (int n = 0; n < dims_.num_states; ++n) {
      total += transitions_[cell * dims_.num_states + n];
    }
    if (total != visits_[cell]) return false;
  }
  return true;
}

}  // namespace polregret
