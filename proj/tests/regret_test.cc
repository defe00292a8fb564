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


#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "polregret/adversary.h"
#include "polregret/dynamic_programming.h"
#include "polregret/errors.h"
#include "polregret/generator.h"
#include "polregret/hard_instances.h"
#include "polregret/policy_set.h"
#include "polregret/regret.h"
#include "polregret/sampling.h"

namespace polregret {
namespace {

std::vector<std::int64_t> RandomPlay(std::int64_t T, std::int64_t n, Rng& rng) {
  std::vector<std::int64_t> played(T);
  for (auto& p : played) p = static_cast<std::int64_t>(rng() % n);
  return played;
}

std::vector<DeterministicPolicy> Gather(const std::vector<DeterministicPolicy>& policies,
                                        const std::vector<std::int64_t>& played) {
  std::vector<DeterministicPolicy> out;
  for (auto i : played) out.push_back(policies[i]);
  return out;
}

// Rows depend on (h, s) only.
std::shared_ptr<const Adversary> Oblivious(GameDims d, int m, unsigned seed) {
  const StochasticPolicy mu = testing::TinyResponse(d, seed);
  ResponseTable t(d.horizon, d.num_states, d.num_learner_actions, d.num_adversary_actions, m);
  for (int h = 0; h < d.horizon; ++h)
    for (int s = 0; s < d.num_states; ++s)
      for (std::int64_t w = 0; w < t.num_windows(); ++w) t.SetRow(h, s, w, mu.row(h, s));
  return ConsistentFromTable(t, m);
}

TEST_CASE("closed form benchmark matches naive replay") {
  const GameDims d{2, 2, 2, 2};
  const auto policies = EnumerateDeterministicPolicies(2, 2, 2);
  for (int m = 1; m <= 3; ++m)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const GeneratedInstance inst = GenerateInstance(d, m, seed + 10 * m);
      const auto adv = ConsistentFromTable(inst.table, m);
      REQUIRE(HasClosedFormBenchmark(*adv));
      Rng rng(seed);
      for (std::int64_t T : {1, 2, 3, 7, 50}) {
        for (std::size_t i = 0; i < policies.size(); i += 3) {
          const double a = FixedPolicyBenchmark(inst.game, adv, policies[i], T, Benchmark::kClosedForm);
          const double b = FixedPolicyBenchmark(inst.game, adv, policies[i], T, Benchmark::kNaive);
          CHECK(a == doctest::Approx(b).epsilon(1e-12));
          CHECK(a == doctest::Approx(testing::NaiveBenchmark(inst.game, *adv, policies[i], T))
                         .epsilon(1e-9));
        }
        const auto played = RandomPlay(T, 16, rng);
        const RegretReport x = PolicyRegret(inst.game, adv, policies, played, Benchmark::kClosedForm);
        const RegretReport y = PolicyRegret(inst.game, adv, policies, played, Benchmark::kNaive);
        CHECK(std::fabs(x.policy_regret - y.policy_regret) <= 1e-9);
        CHECK(x.best_fixed_policy_index == y.best_fixed_policy_index);
        CHECK(x.learner_value_sum ==
              doctest::Approx(testing::NaiveLearnerSum(inst.game, *adv, Gather(policies, played)))
                  .epsilon(1e-9));
      }
    }
}

TEST_CASE("closed form needs a bounded stationary adversary") {
  const TrapInstance trap = MakeTrapInstance(0.5);
  CHECK_FALSE(HasClosedFormBenchmark(*trap.adversary));
  CHECK_THROWS_AS(FixedPolicyBenchmark(trap.game, trap.adversary, trap.trapped_policy, 5,
                                       Benchmark::kClosedForm),
                  ConfigError);
  // kAuto falls back to replay.
  CHECK(FixedPolicyBenchmark(trap.game, trap.adversary, trap.trapped_policy, 5) ==
        doctest::Approx(2.5));
}

TEST_CASE("playing the best fixed policy has zero policy regret") {
  const GameDims d{2, 2, 2, 2};
  const auto policies = EnumerateDeterministicPolicies(2, 2, 2);
  for (int m = 1; m <= 2; ++m) {
    const GeneratedInstance inst = GenerateInstance(d, m, 5);
    const auto adv = ConsistentFromTable(inst.table, m);
    const std::int64_t T = 40;
    const auto bench = FixedPolicyBenchmarks(inst.game, adv, policies, T);
    const auto best = std::max_element(bench.begin(), bench.end()) - bench.begin();
    const std::vector<std::int64_t> played(T, best);
    const RegretReport r = PolicyRegret(inst.game, adv, policies, played);
    CHECK(std::fabs(r.policy_regret) <= 1e-9);
    CHECK(bench[r.best_fixed_policy_index] == bench[best]);
  }
}

TEST_CASE("oblivious adversary makes both regrets agree") {
  const GameDims d{2, 2, 3, 2};
  const auto policies = EnumerateDeterministicPolicies(2, 2, 2);
  for (int m = 1; m <= 2; ++m) {
    const auto adv = Oblivious(d, m, 3 + m);
    const MarkovGame game = testing::TinyGame(d, 9 + m);
    Rng rng(m);
    const auto played = RandomPlay(60, 16, rng);
    const RegretReport r = PolicyRegret(game, adv, policies, played);
    CHECK(std::fabs(r.policy_regret - r.external_regret) <= 1e-9);
    CHECK(r.policy_regret >= 0.0);
  }
}

TEST_CASE("external regret is bounded below by the first policy") {
  const GameDims d{2, 2, 2, 2};
  const auto policies = EnumerateDeterministicPolicies(2, 2, 2);
  const GeneratedInstance inst = GenerateInstance(d, 2, 8);
  const auto adv = ConsistentFromTable(inst.table, 2);
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto played = RandomPlay(30, 16, rng);
    const RegretReport r = PolicyRegret(inst.game, adv, policies, played);
    const auto responses = RealizedResponses(adv, policies, played);
    double lower = 0.0;
    for (std::size_t t = 0; t < played.size(); ++t) {
      lower += testing::PathValue(inst.game, policies[played[0]], responses[t]) -
               testing::PathValue(inst.game, policies[played[t]], responses[t]);
    }
    CHECK(r.external_regret >= lower - 1e-9);
    CHECK(r.external_regret == doctest::Approx(ExternalRegret(inst.game, adv, policies, played)));
  }
}

TEST_CASE("external regret is zero for the best response to realized play") {
  const GameDims d{2, 2, 2, 2};
  const auto policies = EnumerateDeterministicPolicies(2, 2, 2);
  const auto adv = Oblivious(d, 1, 2);
  const MarkovGame game = testing::TinyGame(d, 2);
  const std::vector<std::int64_t> probe(5, 0);
  const RegretReport first = PolicyRegret(game, adv, policies, probe);
  const std::vector<std::int64_t> played(25, first.best_external_policy_index);
  CHECK(ExternalRegret(game, adv, policies, played) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("curves are prefix sums") {
  const GameDims d{2, 2, 2, 2};
  const auto policies = EnumerateDeterministicPolicies(2, 2, 2);
  const GeneratedInstance inst = GenerateInstance(d, 1, 3);
  const auto adv = ConsistentFromTable(inst.table, 1);
  Rng rng(7);
  const auto played = RandomPlay(80, 16, rng);
  const RegretReport r = PolicyRegret(inst.game, adv, policies, played);
  REQUIRE(r.cumulative_policy_regret.size() == 80);
  double p = 0.0, e = 0.0, v = 0.0;
  for (std::size_t t = 0; t < 80; ++t) {
    p += r.instantaneous_policy_regret[t];
    e += r.instantaneous_external_regret[t];
    v += r.learner_values[t];
    CHECK(r.cumulative_policy_regret[t] == doctest::Approx(p).epsilon(1e-12));
    CHECK(r.cumulative_external_regret[t] == doctest::Approx(e).epsilon(1e-12));
  }
  CHECK(r.policy_regret == doctest::Approx(r.cumulative_policy_regret.back()));
  CHECK(r.external_regret == doctest::Approx(r.cumulative_external_regret.back()));
  CHECK(r.learner_value_sum == doctest::Approx(v));
  CHECK(r.best_fixed_value - r.learner_value_sum == doctest::Approx(r.policy_regret));
}

TEST_CASE("best policy is invariant to enumeration order") {
  const GameDims d{2, 2, 2, 2};
  auto policies = EnumerateDeterministicPolicies(2, 2, 2);
  const GeneratedInstance inst = GenerateInstance(d, 2, 6);
  const auto adv = ConsistentFromTable(inst.table, 2);
  const auto bench = FixedPolicyBenchmarks(inst.game, adv, policies, 30);
  const auto best = std::max_element(bench.begin(), bench.end()) - bench.begin();
  std::vector<std::int64_t> perm(16);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<DeterministicPolicy> shuffled;
    for (auto i : perm) shuffled.push_back(policies[i]);
    const std::vector<std::int64_t> played(30, 0);
    const RegretReport r = PolicyRegret(inst.game, adv, shuffled, played);
    CHECK(bench[perm[r.best_fixed_policy_index]] == doctest::Approx(bench[best]).epsilon(1e-12));
  }
}

TEST_CASE("parallel benchmarks match serial") {
  const GameDims d{2, 2, 2, 3};
  const auto policies = EnumerateDeterministicPolicies(2, 2, 3, 4096);
  const GeneratedInstance inst = GenerateInstance(d, 2, 4);
  const auto adv = ConsistentFromTable(inst.table, 2);
  const auto a = FixedPolicyBenchmarks(inst.game, adv, policies, 100, Benchmark::kAuto,
                                       Execution::kSerial);
  const auto b = FixedPolicyBenchmarks(inst.game, adv, policies, 100, Benchmark::kAuto,
                                       Execution::kParallel);
  CHECK(a == b);
  Rng rng(2);
  const auto played = RandomPlay(100, static_cast<std::int64_t>(policies.size()), rng);
  CHECK(ExternalRegret(inst.game, adv, policies, played, Execution::kSerial) ==
        ExternalRegret(inst.game, adv, policies, played, Execution::kParallel));
}

TEST_CASE("value sequence stabilizes after the memory window") {
  const GameDims d{2, 2, 2, 2};
  const GeneratedInstance inst = GenerateInstance(d, 3, 1);
  const auto adv = ConsistentFromTable(inst.table, 3);
  const auto pi = PolicyFromIndex(11, 2, 2, 2);
  const std::vector<double> v = FixedPolicyValueSequence(inst.game, adv, pi, 10);
  REQUIRE(v.size() == 10);
  for (int t = 3; t < 10; ++t) CHECK(v[t] == v[2]);
}

}  // namespace
}  // namespace polregret
