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

#include "polregret/dynamic_programming.h"

namespace polregret {

ValueTable EvaluatePolicies(const MarkovGame& game, const StochasticPolicy& pi,
                            const StochasticPolicy& mu) {
  CheckDims(game, pi);
  CheckAdversaryDims(game, mu);
  const int S = game.num_states();
  const int A = game.num_learner_actions();
  const int B = game.num_adversary_actions();
  const int H = game.horizon();

  ValueTable table{H, S, std::vector<double>((H + 1) * S, 0.0)};
  for (int h = H - 1; h >= 0; --h) {
    const double* next = table.values.data() + (h + 1) * S;
    for (int s = 0; s < S; ++s) {
      double v = 0.0;
      for (int a = 0; a < A; ++a) {
        const double pa = pi.prob(h, s, a);
        if (pa == 0.0) continue;
        for (int b = 0; b < B; ++b) {
          const double pb = mu.prob(h, s, b);
          if (pb == 0.0) continue;
          double q = game.reward(h, s, a, b);
          auto row = game.transition_row(h, s, a, b);
          for (int n = 0; n < S; ++n) q += row[n] * next[n];
          v += pa * pb * q;
        }
      }
      table.values[h * S + s] = v;
    }
  }
  return table;
}

double ExactValue(const MarkovGame& game, const StochasticPolicy& pi,
                  const StochasticPolicy& mu) {
  return EvaluatePolicies(game, pi, mu).at(0, game.initial_state());
}

double ExactValue(const MarkovGame& game, const DeterministicPolicy& pi,
                  const StochasticPolicy& mu) {
  CheckDims(game, pi);
  CheckAdversaryDims(game, mu);
  const int S = game.num_states();
  const int B = game.num_adversary_actions();
  const int H = game.horizon();
  std::vector<double> next(S, 0.0), cur(S, 0.0);
  for (int h = H - 1; h >= 0; --h) {
    for (int s = 0; s < S; ++s) {
      const int a = pi.action(h, s);
      double v = 0.0;
      for (int b = 0; b < B; ++b) {
        const double pb = mu.prob(h, s, b);
        if (pb == 0.0) continue;
        double q = game.reward(h, s, a, b);
        auto row = game.transition_row(h, s, a, b);
        for (int n = 0; n < S; ++n) q += row[n] * next[n];
        v += pb * q;
      }
      cur[s] = v;
    }
    std::swap(cur, next);
  }
  return next[game.initial_state()];
}

OccupancyMeasure Occupancy(const MarkovGame& game, const StochasticPolicy& pi,
                           const StochasticPolicy& mu) {
  CheckDims(game, pi);
  CheckAdversaryDims(game, mu);
  const int S = game.num_states();
  const int A = game.num_learner_actions();
  const int B = game.num_adversary_actions();
  const int H = game.horizon();

  OccupancyMeasure d(H, S, A);
  std::vector<double> state_dist(S, 0.0), next_dist(S, 0.0);
  state_dist[game.initial_state()] = 1.0;
  for (int h = 0; h < H; ++h) {
    std::fill(next_dist.begin(), next_dist.end(), 0.0);
    for (int s = 0; s < S; ++s) {
      if (state_dist[s] == 0.0) continue;
      for (int a = 0; a < A; ++a) {
        const double psa = state_dist[s] * pi.prob(h, s, a);
        d.at(h, s, a) = psa;
        if (psa == 0.0) continue;
        for (int b = 0; b < B; ++b) {
          const double w = psa * mu.prob(h, s, b);
          if (w == 0.0) continue;
          auto row = game.transition_row(h, s, a, b);
          for (int n = 0; n < S; ++n) next_dist[n] += w * row[n];
        }
      }
    }
    std::swap(state_dist, next_dist);
  }
  return d;
}

OccupancyMeasure Occupancy(const MarkovGame& game,
                           const DeterministicPolicy& pi,
                           const StochasticPolicy& mu) {
  CheckDims(game, pi);
  return Occupancy(game, StochasticPolicy::FromDeterministic(pi), mu);
}

std::vector<double> JointOccupancy(const MarkovGame& game,
                                   const DeterministicPolicy& pi,
                                   const StochasticPolicy& mu) {
  CheckDims(game, pi);
  CheckAdversaryDims(game, mu);
  const int S = game.num_states();
  const int A = game.num_learner_actions();
  const int B = game.num_adversary_actions();
  const int H = game.horizon();

  std::vector<double> joint(static_cast<std::size_t>(H) * S * A * B, 0.0);
  std::vector<double> state_dist(S, 0.0), next_dist(S, 0.0);
  state_dist[game.initial_state()] = 1.0;
  for (int h = 0; h < H; ++h) {
    std::fill(next_dist.begin(), next_dist.end(), 0.0);
    for (int s = 0; s < S; ++s) {
      if (state_dist[s] == 0.0) continue;
      const int a = pi.action(h, s);
      for (int b = 0; b < B; ++b) {
        const double w = state_dist[s] * mu.prob(h, s, b);
        joint[game.CellIndex(h, s, a, b)] = w;
        if (w == 0.0) continue;
        auto row = game.transition_row(h, s, a, b);
        for (int n = 0; n < S; ++n) next_dist[n] += w * row[n];
      }
    }
    std::swap(state_dist, next_dist);
  }
  return joint;
}

}  // namespace polregret
