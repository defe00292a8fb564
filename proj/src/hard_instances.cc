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

#include "polregret/hard_instances.h"

#include <string>

namespace polregret {
namespace {

class TrapAdversary : public Adversary {
 public:
  TrapAdversary(DeterministicPolicy trapped, StochasticPolicy low,
                StochasticPolicy high)
      : trapped_(std::move(trapped)),
        low_(std::move(low)),
        high_(std::move(high)) {}

  AdversaryKind kind() const override { return AdversaryKind::kTrap; }
  std::optional<int> memory() const override { return std::nullopt; }
  bool stationary() const override { return false; }
  int horizon() const override { return low_.horizon(); }
  int num_states() const override { return low_.num_states(); }
  int num_adversary_actions() const override { return low_.num_actions(); }
  StochasticPolicy ResponseFor(std::span<const DeterministicPolicy> history,
                               std::int64_t) const override {
    return history.front() == trapped_ ? low_ : high_;
  }

 private:
  DeterministicPolicy trapped_;
  StochasticPolicy low_;
  StochasticPolicy high_;
};

class NeedleAdversary : public Adversary {
 public:
  NeedleAdversary(DeterministicPolicy needle, StochasticPolicy low,
                  StochasticPolicy high)
      : needle_(std::move(needle)),
        low_(std::move(low)),
        high_(std::move(high)) {}

  AdversaryKind kind() const override {
    return AdversaryKind::kNeedle;
  }
  std::optional<int> memory() const override { return 1; }
  bool stationary() const override { return true; }
  int horizon() const override { return low_.horizon(); }
  int num_states() const override { return low_.num_states(); }
  int num_adversary_actions() const override { return low_.num_actions(); }
  StochasticPolicy ResponseFor(std::span<const DeterministicPolicy> window,
                               std::int64_t) const override {
    return window.back() == needle_ ? high_ : low_;
  }

 private:
  DeterministicPolicy needle_;
  StochasticPolicy low_;
  StochasticPolicy high_;
};

StochasticPolicy ConstantResponse(int H, int S, int B, int action) {
  StochasticPolicy mu(H, S, B);
  for (int h = 0; h < H; ++h) {
    for (int s = 0; s < S; ++s) mu.SetPointMass(h, s, action);
  }
  return mu;
}

}  // namespace

TrapInstance MakeTrapInstance(double gap) {
  if (!(gap > 0.0 && gap < 1.0)) {
    throw InvalidGameError("gap must lie in (0, 1)");
  }
  constexpr int S = 2, A = 2, B = 2, H = 1;
  MarkovGame game(GameDims{S, A, B, H}, 0);
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      game.set_reward(0, s, a, 0, 1.0);
      game.set_reward(0, s, a, 1, 1.0 - gap);
      for (int b = 0; b < B; ++b) {
        game.mutable_transition_row(0, s, a, b)[s] = 1.0;
      }
    }
  }
  ValidateGame(game);
  DeterministicPolicy trapped(H, S, A);
  StochasticPolicy low = ConstantResponse(H, S, B, 1);
  StochasticPolicy high = ConstantResponse(H, S, B, 0);
  auto adversary = std::make_shared<TrapAdversary>(trapped, low, high);
  return TrapInstance{std::move(game), std::move(adversary), trapped,
                      std::move(low), std::move(high)};
}

NeedleInstance MakeNeedleInstance(
    std::span<const DeterministicPolicy> policy_set, std::int64_t needle_index,
    int num_adversary_actions) {
  if (needle_index < 0 ||
      needle_index >= static_cast<std::int64_t>(policy_set.size())) {
    throw InvalidPolicyError("needle index " + std::to_string(needle_index) +
                             " out of range");
  }
  if (num_adversary_actions < 2) {
    throw DimensionError("the needle construction needs B >= 2");
  }
  const DeterministicPolicy& needle = policy_set[needle_index];
  const int S = needle.num_states();
  const int A = needle.num_actions();
  const int H = needle.horizon();
  const int B = num_adversary_actions;
  MarkovGame game(GameDims{S, A, B, H}, 0);
  for (int h = 0; h < H; ++h) {
    for (int s = 0; s < S; ++s) {
      for (int a = 0; a < A; ++a) {
        for (int b = 0; b < B; ++b) {
          game.mutable_transition_row(h, s, a, b)[(s + 1) % S] = 1.0;
          if (h == H - 1 && b == 1) game.set_reward(h, s, a, b, 1.0);
        }
      }
    }
  }
  ValidateGame(game);
  StochasticPolicy low = ConstantResponse(H, S, B, 0);
  StochasticPolicy high = low;
  for (int s = 0; s < S; ++s) high.SetPointMass(H - 1, s, 1);
  auto adversary = std::make_shared<NeedleAdversary>(needle, low, high);
  return NeedleInstance{std::move(game), std::move(adversary), std::move(low),
                        std::move(high)};
}

}  // namespace polregret
