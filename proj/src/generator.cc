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

#include "polregret/generator.h"

#include <algorithm>
#include <string>
#include <vector>

#include "polregret/errors.h"
#include "polregret/policy_set.h"

namespace polregret {

namespace {

void FillSimplex(std::span<double> row, Rng& rng, double floor) {
  double total = 0.0;
  for (double& x : row) {
    x = UniformUnit(rng) + 1e-3;
    total += x;
  }
  const double scale = 1.0 - floor * static_cast<double>(row.size());
  for (double& x : row) x = floor + scale * x / total;
}

}  // namespace

MarkovGame RandomGame(const GameDims& dims, Rng& rng) {
  MarkovGame game(dims, 0);
  for (int h = 0; h < dims.horizon; ++h) {
    for (int s = 0; s < dims.num_states; ++s) {
      for (int a = 0; a < dims.num_learner_actions; ++a) {
        for (int b = 0; b < dims.num_adversary_actions; ++b) {
          FillSimplex(game.mutable_transition_row(h, s, a, b), rng, 0.0);
          game.set_reward(h, s, a, b, UniformUnit(rng));
        }
      }
    }
  }
  ValidateGame(game);
  return game;
}

CandidateSet RandomCandidates(int count, int num_actions, Rng& rng,
                              double min_mass) {
  if (count < 1 || num_actions < 1) {
    throw ConfigError("candidate count and width must be positive");
  }
  min_mass = std::min(min_mass, 0.5 / num_actions);
  std::vector<std::vector<double>> rows;
  // Keep rows apart so distinct candidates are statistically separable.
  const double separation = num_actions > 1 ? 0.05 : 0.0;
  int attempts = 0;
  while (static_cast<int>(rows.size()) < count) {
    std::vector<double> row(num_actions);
    FillSimplex(row, rng, min_mass);
    bool far = true;
    for (const auto& other : rows) {
      if (TotalVariation(row, other) <= separation) far = false;
    }
    if (far || ++attempts > 1000) {
      rows.push_back(std::move(row));
      attempts = 0;
    }
  }
  return CandidateSet(std::move(rows));
}

ResponseTable RandomTable(const GameDims& dims, int memory,
                          const CandidateSet& candidates, Rng& rng) {
  if (candidates.num_actions() != dims.num_adversary_actions) {
    throw DimensionError("candidate rows do not have B entries");
  }
  ResponseTable table(dims.horizon, dims.num_states, dims.num_learner_actions,
                      dims.num_adversary_actions, memory);
  std::uniform_int_distribution<int> pick(0, candidates.size() - 1);
  for (int h = 0; h < dims.horizon; ++h) {
    for (int s = 0; s < dims.num_states; ++s) {
      for (std::int64_t w = 0; w < table.num_windows(); ++w) {
        table.SetRow(h, s, w, candidates[pick(rng)]);
      }
    }
  }
  return table;
}

GeneratedInstance GenerateInstance(const GameDims& dims, int memory,
                                   std::uint64_t seed, int num_candidates,
                                   std::int64_t cap) {
  for (int x : {dims.num_states, dims.num_learner_actions,
                dims.num_adversary_actions, dims.horizon}) {
    if (x < 1 || x > kMaxGeneratedDim) {
      throw ConfigError("generated dims must lie in [1, " +
                        std::to_string(kMaxGeneratedDim) + "]");
    }
  }
  if (memory < 1) throw ConfigError("table memory must be at least 1");
  CountDeterministicPolicies(dims.num_states, dims.num_learner_actions,
                             dims.horizon, cap);
  if (CappedPower(dims.num_learner_actions, memory, cap) < 0) {
    throw CapExceededError("A^m exceeds the cap");
  }
  const SeedStream seeds(seed, 0x67656e);
  Rng game_rng = seeds.At(0);
  Rng candidate_rng = seeds.At(1);
  Rng table_rng = seeds.At(2);
  GeneratedInstance out{RandomGame(dims, game_rng),
                        RandomCandidates(num_candidates,
                                         dims.num_adversary_actions,
                                         candidate_rng),
                        ResponseTable()};
  out.table = RandomTable(dims, memory, out.candidates, table_rng);
  return out;
}

}  // namespace polregret
