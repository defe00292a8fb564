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


#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "polregret/adversary.h"
#include "polregret/counters.h"
#include "polregret/dynamic_programming.h"
#include "polregret/environment.h"
#include "polregret/errors.h"
#include "polregret/generator.h"
#include "polregret/opo_omle.h"
#include "polregret/policy_set.h"
#include "polregret/sampling.h"

namespace polregret {
namespace {

// Transition rows in quarters so integer counts reproduce them exactly.
MarkovGame QuarterGame(GameDims d, unsigned seed) {
  std::mt19937 rng(seed);
  MarkovGame game(d, 0);
  for (int h = 0; h < d.horizon; ++h)
    for (int s = 0; s < d.num_states; ++s)
      for (int a = 0; a < d.num_learner_actions; ++a)
        for (int b = 0; b < d.num_adversary_actions; ++b) {
          auto row = game.mutable_transition_row(h, s, a, b);
          for (int q = 0; q < 4; ++q) row[rng() % d.num_states] += 0.25;
          game.set_reward(h, s, a, b, (rng() % 101) / 100.0);
        }
  return game;
}

Counters ExactCounters(const MarkovGame& game, int scale) {
  const GameDims& d = game.dims();
  Counters n(d);
  for (int h = 0; h < d.horizon; ++h)
    for (int s = 0; s < d.num_states; ++s)
      for (int a = 0; a < d.num_learner_actions; ++a)
        for (int b = 0; b < d.num_adversary_actions; ++b)
          for (int x = 0; x < d.num_states; ++x) {
            const int k = static_cast<int>(std::lround(game.transition(h, s, a, b, x) * 4));
            for (int i = 0; i < k * scale; ++i) n.Record(h, s, a, b, x);
          }
  return n;
}

const std::vector<std::vector<double>> kRows = {{0.7, 0.3}, {0.2, 0.8}};

// Table whose row at (h, s, a) is kRows[(h + s + a) % 2].
ResponseTable AlternatingTable(GameDims d) {
  ResponseTable t(d.horizon, d.num_states, d.num_learner_actions, 2, 1);
  for (int h = 0; h < d.horizon; ++h)
    for (int s = 0; s < d.num_states; ++s)
      for (int a = 0; a < d.num_learner_actions; ++a) t.SetRow(h, s, a, kRows[(h + s + a) % 2]);
  return t;
}

// Version space whose survivors at every key are exactly the true row.
VersionSpace TruthOnly(GameDims d) {
  VersionSpace vs(CandidateSet(kRows), d.horizon, d.num_states, d.num_learner_actions, 0.0);
  for (int h = 0; h < d.horizon; ++h)
    for (int s = 0; s < d.num_states; ++s)
      for (int a = 0; a < d.num_learner_actions; ++a) {
        const auto& row = kRows[(h + s + a) % 2];
        for (int b = 0; b < 2; ++b)
          for (int i = 0; i < std::lround(row[b] * 10); ++i) vs.Observe(h, s, a, b);
        vs.Refine(h, s, a);
      }
  return vs;
}

TEST_CASE("bonus schedule") {
  CHECK(Bonus(0, 2, 5.0, 4.0) == Bonus(1, 2, 5.0, 4.0));
  CHECK(Bonus(4, 2, 9.0, 0.0) == doctest::Approx(3.0));
  CHECK(Bonus(4, 2, 4.0, 5.0, 2.0) == doctest::Approx(6.0));
  double prev = Bonus(0, 3, 2.0, 1.0);
  for (int t = 1; t < 1000; ++t) {
    const double b = Bonus(t, 3, 2.0, 1.0);
    CHECK(b <= prev);
    prev = b;
  }
  const BonusSchedule beta{2, 9.0, 0.0, 1.0};
  CHECK(beta(4) == doctest::Approx(3.0));
}

TEST_CASE("zero counts with a large bonus give the horizon") {
  const GameDims d{2, 2, 2, 3};
  const MarkovGame game = QuarterGame(d, 1);
  const std::vector<double> zero(game.rewards().size(), 0.0);
  const Counters n(d);
  const VersionSpace vs(CandidateSet(kRows), 3, 2, 2, 1.0);
  const BonusSchedule beta{3, 10.0, 0.0, 1.0};
  REQUIRE(beta(0) >= 3.0);
  for (const auto& pi : EnumerateDeterministicPolicies(2, 2, 3, 4096)) {
    CHECK(DoublyOptimisticValue(n, vs, pi, zero, beta, 0) == doctest::Approx(3.0));
  }
}

TEST_CASE("small bonus and zero counts use the uniform fallback") {
  const GameDims d{2, 1, 1, 2};
  MarkovGame game(d, 0);
  for (int h = 0; h < 2; ++h)
    for (int s = 0; s < 2; ++s) {
      game.mutable_transition_row(h, s, 0, 0)[0] = 1.0;
      game.set_reward(h, s, 0, 0, s == 1 ? 1.0 : 0.0);
    }
  const Counters n(d);
  const VersionSpace vs(CandidateSet(std::vector<std::vector<double>>{{1.0}}), 2, 2, 1, 1.0);
  const BonusSchedule beta{2, 0.0, 0.0, 0.0};
  const DeterministicPolicy pi(2, 2, 1);
  const ValueTable v = DoublyOptimisticValues(n, vs, pi, game.rewards(), beta);
  // P-hat is 1/2 per successor, so V_1(s0) = 0 + (0 + 1) / 2.
  CHECK(v.at(0, 0) == doctest::Approx(0.5));
  CHECK(v.at(0, 1) == doctest::Approx(1.5));
}

TEST_CASE("exact counts and true rows recover the exact value") {
  for (unsigned seed = 0; seed < 5; ++seed) {
    const GameDims d{2, 2, 2, 2};
    const MarkovGame game = QuarterGame(d, seed);
    const Counters n = ExactCounters(game, 3);
    REQUIRE(n.Consistent());
    const VersionSpace vs = TruthOnly(d);
    const auto adv = ConsistentFromTable(AlternatingTable(d), 1);
    const BonusSchedule beta{2, 1.0, 0.0, 0.0};
    for (const auto& pi : EnumerateDeterministicPolicies(2, 2, 2)) {
      const std::vector<DeterministicPolicy> w = {pi};
      const double v = DoublyOptimisticValue(n, vs, pi, game.rewards(), beta, 0);
      CHECK(v == doctest::Approx(testing::PathValue(game, pi, Respond(*adv, w))).epsilon(1e-6));
    }
  }
}

TEST_CASE("optimism with true rows inside the version space") {
  const GameDims d{2, 2, 2, 2};
  const MarkovGame game = QuarterGame(d, 9);
  const auto adv = ConsistentFromTable(AlternatingTable(d), 1);
  const VersionSpace full(CandidateSet(kRows), 2, 2, 2, std::numeric_limits<double>::infinity());
  const Counters exact = ExactCounters(game, 2);
  Counters random(d);
  Rng rng(3);
  for (int i = 0; i < 200; ++i)
    random.Record(static_cast<int>(rng() % 2), static_cast<int>(rng() % 2),
                  static_cast<int>(rng() % 2), static_cast<int>(rng() % 2),
                  static_cast<int>(rng() % 2));
  const BonusSchedule small{2, 0.3, 0.0, 0.1};
  const BonusSchedule large{2, 1.0, 0.0, 1e6};
  for (const auto& pi : EnumerateDeterministicPolicies(2, 2, 2)) {
    const std::vector<DeterministicPolicy> w = {pi};
    const double truth = testing::PathValue(game, pi, Respond(*adv, w));
    CHECK(DoublyOptimisticValue(exact, full, pi, game.rewards(), small, 0) >= truth - 1e-9);
    CHECK(DoublyOptimisticValue(random, full, pi, game.rewards(), large, 0) >= truth - 1e-9);
  }
}

TEST_CASE("a larger version space gives a larger value") {
  const GameDims d{2, 2, 2, 3};
  const MarkovGame game = QuarterGame(d, 4);
  const VersionSpace narrow = TruthOnly(d);
  const VersionSpace wide(CandidateSet(kRows), 3, 2, 2, std::numeric_limits<double>::infinity());
  Counters n(d);
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    const int h = static_cast<int>(rng() % 3), s = static_cast<int>(rng() % 2);
    const int a = static_cast<int>(rng() % 2), b = static_cast<int>(rng() % 2);
    n.Record(h, s, a, b, SampleIndex(game.transition_row(h, s, a, b), rng));
  }
  const BonusSchedule beta{3, 0.5, 0.0, 0.2};
  for (const auto& pi : EnumerateDeterministicPolicies(2, 2, 3, 4096)) {
    const ValueTable lo = DoublyOptimisticValues(n, narrow, pi, game.rewards(), beta);
    const ValueTable hi = DoublyOptimisticValues(n, wide, pi, game.rewards(), beta);
    for (int h = 0; h < 3; ++h)
      for (int s = 0; s < 2; ++s) {
        CHECK(hi.at(h, s) >= lo.at(h, s) - 1e-12);
        CHECK(lo.at(h, s) >= 0.0);
        CHECK(hi.at(h, s) <= 3 - h + 1e-12);
      }
  }
}

TEST_CASE("counters stay consistent") {
  Counters n({3, 2, 2, 2});
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    n.Record(static_cast<int>(rng() % 2), static_cast<int>(rng() % 3), static_cast<int>(rng() % 2),
             static_cast<int>(rng() % 2), static_cast<int>(rng() % 3));
    if (i % 97 == 0) CHECK(n.Consistent());
  }
  CHECK(n.Consistent());
  CHECK(Counters({3, 2, 2, 2}).visits(1, 2, 1, 1) == 0);
}

struct Reference {
  GeneratedInstance inst = GenerateInstance({2, 2, 2, 2}, 1, 7);
  std::shared_ptr<const Adversary> adv = ConsistentFromTable(inst.table, 1);
  std::vector<DeterministicPolicy> policies = EnumerateDeterministicPolicies(2, 2, 2);
};

LearnerLog Run(const Reference& ref, std::int64_t T, std::uint64_t seed,
               Execution exec = Execution::kAuto) {
  Environment env(ref.inst.game, ref.adv, SeedStream(seed));
  OpoOmleConfig config;
  config.num_episodes = T;
  config.execution = exec;
  return RunOpoOmle(env, ref.policies, ref.inst.candidates, config);
}

TEST_CASE("no episodes give an empty log") {
  const Reference ref;
  const LearnerLog log = Run(ref, 0, 1);
  CHECK(log.algorithm == "opo-omle");
  CHECK(log.episodes.empty());
}

TEST_CASE("run log is well formed and optimistic") {
  const Reference ref;
  const LearnerLog log = Run(ref, 200, 3);
  REQUIRE(log.episodes.size() == 200);
  int optimistic = 0;
  for (std::size_t t = 0; t < log.episodes.size(); ++t) {
    const EpisodeRecord& e = log.episodes[t];
    CHECK(e.episode == static_cast<std::int64_t>(t) + 1);
    CHECK(e.optimistic_value >= 0.0);
    CHECK(e.optimistic_value <= 2.0);
    CHECK(e.trajectory.steps.size() == 2);
    CHECK(e.realized_return == doctest::Approx(e.trajectory.Return()));
    const std::vector<DeterministicPolicy> w = {ref.policies[e.policy_index]};
    optimistic += e.optimistic_value >=
                  ExactValue(ref.inst.game, ref.policies[e.policy_index], Respond(*ref.adv, w)) - 1e-9;
  }
  CHECK(optimistic >= 190);
}

TEST_CASE("runs are deterministic and execution independent") {
  const Reference ref;
  const LearnerLog a = Run(ref, 150, 5, Execution::kSerial);
  const LearnerLog b = Run(ref, 150, 5, Execution::kParallel);
  const LearnerLog c = Run(ref, 150, 5, Execution::kSerial);
  REQUIRE(a.episodes.size() == b.episodes.size());
  for (std::size_t t = 0; t < a.episodes.size(); ++t) {
    CHECK(a.episodes[t].policy_index == b.episodes[t].policy_index);
    CHECK(a.episodes[t].optimistic_value == b.episodes[t].optimistic_value);
    CHECK(a.episodes[t].realized_return == c.episodes[t].realized_return);
  }
}

TEST_CASE("first episode picks the lowest index on ties") {
  const Reference ref;
  // Every policy starts at the clip value H.
  CHECK(Run(ref, 1, 0).episodes[0].policy_index == 0);
}

}  // namespace
}  // namespace polregret
