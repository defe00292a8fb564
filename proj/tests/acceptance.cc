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


// Acceptance report: one PASS/FAIL line per criterion A1..A7. Exits nonzero
// if any criterion fails.
//
//   polregret_acceptance [--only A1,A5]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "polregret/adversary.h"
#include "polregret/adversary_checks.h"
#include "polregret/ape_ove.h"
#include "polregret/counters.h"
#include "polregret/dynamic_programming.h"
#include "polregret/experiment.h"
#include "polregret/generator.h"
#include "polregret/policy_set.h"
#include "polregret/regret.h"
#include "polregret/sampling.h"
#include "polregret/version_space.h"
#include "polregret/visitation.h"

namespace polregret {
namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string Fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

ExperimentConfig Config(const char* text) { return ParseConfig(Json::parse(text)); }

// Reference instance of A1/A3: seeded 2x2x2x2 game, 4 candidate rows,
// 1-memory table adversary.
constexpr const char* kOpoConfig = R"({
  "game": {"generate": {"dims": [2, 2, 2, 2], "seed": 7, "candidates": 4}},
  "adversary": {"kind": "table", "m": 1},
  "algorithms": [{"name": "opo-omle", "delta": 0.05}],
  "T_grid": [200, 2000], "seeds": [0, 1, 2, 3, 4, 5, 6, 7, 8, 9]})";

constexpr const char* kApeConfig = R"({
  "game": {"generate": {"dims": [2, 2, 2, 2], "seed": 7, "candidates": 4}},
  "adversary": {"kind": "table", "m": 2},
  "algorithms": [{"name": "ape-ove", "delta": 0.05}],
  "T_grid": [480, 4800], "seeds": [0, 1, 2, 3, 4, 5, 6, 7, 8, 9]})";

struct OpoRuns {
  std::vector<std::vector<RunResult>> by_t;  // [T index][seed]
  ExperimentConfig config;
};

const OpoRuns& ReferenceOpoRuns() {
  static const OpoRuns runs = [] {
    OpoRuns r;
    r.config = Config(kOpoConfig);
    const Instance inst = BuildInstance(r.config);
    for (std::int64_t T : r.config.t_grid) {
      r.by_t.emplace_back(r.config.seeds.size());
#pragma omp parallel for schedule(dynamic)
      for (std::size_t i = 0; i < r.config.seeds.size(); ++i) {
        r.by_t.back()[i] = RunAlgorithm(inst, r.config.algorithms[0], T, r.config.seeds[i],
                                        1.0, Execution::kSerial);
      }
    }
    return r;
  }();
  return runs;
}

Outcome A1() {
  const OpoRuns& runs = ReferenceOpoRuns();
  std::vector<double> med;
  for (std::size_t k = 0; k < runs.by_t.size(); ++k) {
    std::vector<double> v;
    for (const RunResult& r : runs.by_t[k])
      v.push_back(r.row.policy_regret / static_cast<double>(runs.config.t_grid[k]));
    med.push_back(Median(v));
  }
  const double ratio = med[1] / med[0];
  return {ratio < 0.5, "median PR/T " + Fmt(med[0]) + " at T=200, " + Fmt(med[1]) +
                           " at T=2000; ratio " + Fmt(ratio) + " (need < 0.5)"};
}

Outcome A2() {
  const ExperimentConfig config = Config(R"({
    "game": {"trap": {"gap": 0.5}},
    "adversary": {"kind": "theorem1-trap"},
    "algorithms": [{"name": "fixed", "policy_index": 0}],
    "T_grid": [100, 1000], "seeds": [0]})");
  const Instance inst = BuildInstance(config);
  Outcome out;
  std::ostringstream detail;
  for (std::int64_t T : config.t_grid) {
    const RunResult r = RunAlgorithm(inst, config.algorithms[0], T, 0, 1.0);
    const double pr = r.row.policy_regret / static_cast<double>(T);
    const bool ok = pr >= 0.5 - 1e-9 && std::fabs(r.row.external_regret) <= 1e-9;
    out.passed = out.passed && ok;
    detail << "T=" << T << ": PR/T " << Fmt(pr, 6) << ", R " << Fmt(r.row.external_regret, 3)
           << "; ";
  }
  out.detail = detail.str() + "trapped policy index 0";
  return out;
}

Outcome A3() {
  const OpoRuns& runs = ReferenceOpoRuns();
  Outcome out;
  std::ostringstream detail;
  for (std::size_t k = 0; k < runs.by_t.size(); ++k) {
    int good = 0;
    double worst = 0.0;
    for (const RunResult& r : runs.by_t[k]) {
      std::int64_t below = 0;
      for (std::size_t t = 0; t < r.log.episodes.size(); ++t) {
        below += r.log.episodes[t].optimistic_value < r.report.learner_values[t] - 1e-9;
      }
      const double frac = static_cast<double>(below) / r.log.episodes.size();
      worst = std::max(worst, frac);
      good += frac <= 0.05;
    }
    out.passed = out.passed && good >= 9;
    if (k > 0) detail << "; ";
    detail << "T=" << runs.config.t_grid[k] << ": " << good << "/10 seeds within 0.05 (worst "
           << Fmt(worst, 3) << ")";
  }
  out.detail = detail.str();
  return out;
}

Outcome A4() {
  const std::vector<std::vector<double>> rows = {{0.9, 0.1}, {0.7, 0.3}, {0.5, 0.5}, {0.2, 0.8}};
  const int truth = 2;
  const double alpha = DefaultAlpha(4, 2, 2, 2, 200, 0.05, 2.0);
  const int trials = 1000;
  int retained = 0;
  std::vector<double> tv20, tv200;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = SeedStream(2024, 4).At(trial);
    VersionSpace vs(CandidateSet(rows), 1, 1, 1, alpha);
    bool alive = true;
    for (int t = 1; t <= 200; ++t) {
      vs.Update(0, 0, 0, SampleIndex(rows[truth], rng));
      const auto s = vs.surviving(0, 0, 0);
      alive = alive && std::find(s.begin(), s.end(), truth) != s.end();
      if (t == 20) tv20.push_back(vs.MaxTvTo(0, 0, 0, rows[truth]));
    }
    tv200.push_back(vs.MaxTvTo(0, 0, 0, rows[truth]));
    retained += alive;
  }
  const double m20 = Median(tv20), m200 = Median(tv200);
  return {retained >= 0.95 * trials && m200 < m20,
          "truth survives " + std::to_string(retained) + "/1000; median max TV " + Fmt(m20) +
              " at t=20, " + Fmt(m200) + " at t=200 (alpha " + Fmt(alpha) + ")"};
}

Outcome A5() {
  const ExperimentConfig config = Config(kApeConfig);
  const Instance inst = BuildInstance(config);
  const GameDims& d = inst.game.dims();
  const std::int64_t hsab = static_cast<std::int64_t>(d.horizon) * d.num_states *
                            d.num_learner_actions * d.num_adversary_actions;
  const double d_star =
      MinPositiveVisitation(inst.game, inst.policies, *inst.adversary, inst.memory).d_star;
  std::vector<double> fixed_values;
  for (const auto& pi : inst.policies) {
    fixed_values.push_back(
        ExactValue(inst.game, pi, RepeatedResponse(*inst.adversary, pi, inst.memory)));
  }
  const double best = *std::max_element(fixed_values.begin(), fixed_values.end());
  std::vector<std::int64_t> optimal;
  for (std::size_t i = 0; i < fixed_values.size(); ++i)
    if (fixed_values[i] >= best - 1e-12) optimal.push_back(static_cast<std::int64_t>(i));

  Outcome out;
  std::ostringstream detail;
  std::vector<double> med;
  bool switches_ok = true;
  int survive_min = 10;
  for (std::int64_t T : config.t_grid) {
    std::vector<RunResult> runs(config.seeds.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < config.seeds.size(); ++i) {
      runs[i] = RunAlgorithm(inst, config.algorithms[0], T, config.seeds[i], d_star,
                             Execution::kSerial);
    }
    std::vector<double> v;
    int survived = 0;
    for (const RunResult& r : runs) {
      v.push_back(r.row.policy_regret / static_cast<double>(T));
      bool all = true;
      for (const EpochSummary& e : r.log.epochs) {
        bool any = false;
        for (std::int64_t p : optimal)
          any = any || std::binary_search(e.policy_space.begin(), e.policy_space.end(), p);
        all = all && any;
      }
      survived += all;
      const std::int64_t K = static_cast<std::int64_t>(r.log.epochs.size());
      switches_ok = switches_ok && r.log.Switches() <= K * hsab;
    }
    survive_min = std::min(survive_min, survived);
    med.push_back(Median(v));
  }
  // With refinement thresholds above H every epoch keeps all of Π; report
  // the first epoch's cut so the (a) result can be read in context.
  const EpochSchedule s = MakeEpochSchedule(config.t_grid.back(), d, inst.memory);
  const double alpha = DefaultAlpha(inst.candidates.size(), d.horizon, d.num_states,
                                    d.num_learner_actions, config.t_grid.back(), 0.05);
  const double cut = RefinementThreshold(d, alpha, d_star, s.exploration_lengths[0], 1.0);
  const bool a = survive_min >= 9, c = med[1] < med[0];
  out.passed = a && switches_ok && c;
  detail << "(a) pi* kept in every epoch in >= " << survive_min << "/10 seeds"
         << " (first-epoch cut " << Fmt(cut) << " vs H=" << d.horizon << "); (b) switches <= K*HSAB: "
         << (switches_ok ? "yes" : "no") << "; (c) median PR/T " << Fmt(med[0]) << " at T=480, "
         << Fmt(med[1]) << " at T=4800";
  out.detail = detail.str();
  return out;
}

Outcome A6() {
  Outcome out;
  std::ostringstream detail;
  // Monte Carlo.
  int mc_ok = 0;
  const std::vector<GameDims> dims = {{2, 2, 2, 2}, {3, 2, 2, 3}, {2, 3, 2, 2}, {4, 2, 3, 2}};
  for (int i = 0; i < 20; ++i) {
    const GameDims dd = dims[i % dims.size()];
    const GeneratedInstance inst = GenerateInstance(dd, 1, 500 + i);
    const auto adv = ConsistentFromTable(inst.table, 1);
    const std::int64_t count =
        CountDeterministicPolicies(dd.num_states, dd.num_learner_actions, dd.horizon);
    const DeterministicPolicy pi =
        PolicyFromIndex((i * 7919) % count, dd.num_states, dd.num_learner_actions, dd.horizon);
    const std::vector<DeterministicPolicy> w = {pi};
    const StochasticPolicy mu = Respond(*adv, w);
    const int n = 100000;
    double sum = 0.0, sq = 0.0;
    Rng rng = SeedStream(900 + i).At(0);
    for (int e = 0; e < n; ++e) {
      const double g = SampleEpisode(inst.game, pi, mu, rng).Return();
      sum += g;
      sq += g * g;
    }
    const double mean = sum / n;
    const double se = std::sqrt(std::max(0.0, sq / n - mean * mean) / n);
    mc_ok += std::fabs(mean - ExactValue(inst.game, pi, mu)) <= 3 * se;
  }
  detail << "Monte Carlo " << mc_ok << "/20 within 3 SE; ";

  // Closed form vs naive benchmark.
  double worst = 0.0;
  const auto policies = EnumerateDeterministicPolicies(2, 2, 2);
  for (int m = 1; m <= 3; ++m) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const GeneratedInstance inst = GenerateInstance({2, 2, 2, 2}, m, 40 + seed);
      const auto adv = ConsistentFromTable(inst.table, m);
      Rng rng(seed * 31 + m);
      for (std::int64_t T = 1; T <= 50; T += 7) {
        std::vector<std::int64_t> played(T);
        for (auto& p : played) p = static_cast<std::int64_t>(rng() % policies.size());
        const RegretReport x =
            PolicyRegret(inst.game, adv, policies, played, Benchmark::kClosedForm);
        const RegretReport y = PolicyRegret(inst.game, adv, policies, played, Benchmark::kNaive);
        worst = std::max(worst, std::fabs(x.policy_regret - y.policy_regret));
      }
    }
  }
  detail << "closed form vs naive max gap " << Fmt(worst, 3) << "; ";

  // Best response vs brute force.
  int br_instances = 0;
  double br_gap = 0.0;
  const std::vector<GameDims> br_dims = {{2, 2, 2, 2}, {2, 2, 2, 3}, {3, 2, 2, 2}, {2, 2, 3, 2},
                                         {1, 3, 4, 3}, {2, 3, 4, 1}, {3, 2, 2, 3}};
  unsigned seed = 0;
  for (const GameDims& bd : br_dims) {
    for (int rep = 0; rep < 2; ++rep) {
      const MarkovGame game = testing::TinyGame(bd, ++seed);
      const auto ps = EnumerateDeterministicPolicies(bd.num_states, bd.num_learner_actions,
                                                     bd.horizon);
      for (std::size_t i = 0; i < ps.size(); i += std::max<std::size_t>(1, ps.size() / 16)) {
        const double v = ExactValue(game, ps[i], NashBestResponse(game, ps[i]));
        br_gap = std::max(br_gap, std::fabs(v - testing::BruteForceMinValue(game, ps[i])));
      }
      ++br_instances;
    }
  }
  detail << "best response vs brute force max gap " << Fmt(br_gap, 3) << " on " << br_instances
         << " instances";
  out.passed = mc_ok == 20 && worst <= 1e-9 && br_gap <= 1e-9;
  out.detail = detail.str();
  return out;
}

Outcome A7() {
  Outcome out;
  std::ostringstream detail;
  Rng rng = SeedStream(7, 7).At(0);

  // Absorbing rows.
  int absorbing_bad = 0;
  const GameDims d{3, 2, 2, 3};
  const MarkovGame game = testing::TinyGame(d, 77);
  auto random_u = [&](double p) {
    InfrequentSet u(d);
    for (int h = 0; h < d.horizon; ++h)
      for (int s = 0; s < d.num_states; ++s)
        for (int a = 0; a < d.num_learner_actions; ++a)
          for (int b = 0; b < d.num_adversary_actions; ++b)
            for (int x = 0; x < d.num_states; ++x)
              if (UniformUnit(rng) < p) u.Insert(h, s, a, b, x);
    return u;
  };
  auto random_counts = [&](int n) {
    Counters c(d);
    for (int i = 0; i < n; ++i) {
      const int h = static_cast<int>(rng() % d.horizon), s = static_cast<int>(rng() % d.num_states);
      const int a = static_cast<int>(rng() % 2), b = static_cast<int>(rng() % 2);
      c.Record(h, s, a, b, SampleIndex(game.transition_row(h, s, a, b), rng));
    }
    return c;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const Counters c = random_counts(static_cast<int>(rng() % 400));
    const InfrequentSet u = random_u(UniformUnit(rng));
    AbsorbingEstimate p(d);
    for (int h = 0; h < d.horizon; ++h) TransitionEstimate(h, c, u, p);
    try {
      p.Validate();
    } catch (const std::exception&) {
      ++absorbing_bad;
      continue;
    }
    for (int h = 0; h < d.horizon; ++h)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          if (p.row(h, p.dagger(), a, b)[p.dagger()] != 1.0) ++absorbing_bad;
          for (int s = 0; s < d.num_states; ++s)
            for (int x = 0; x < d.num_states; ++x)
              if (u.Contains(h, s, a, b, x) && p.row(h, s, a, b)[x] != 0.0) ++absorbing_bad;
        }
  }
  detail << "absorbing violations " << absorbing_bad << "/1000 estimates; ";

  // Nesting.
  int nesting_bad = 0;
  std::uniform_real_distribution<double> u01(0.05, 1.0);
  for (int seq = 0; seq < 10000; ++seq) {
    std::vector<std::vector<double>> rows(4, std::vector<double>(3));
    for (auto& r : rows) {
      double total = 0.0;
      for (double& x : r) total += (x = u01(rng));
      for (double& x : r) x /= total;
    }
    VersionSpace vs(CandidateSet(rows), 1, 1, 1, 0.1 + 3.0 * UniformUnit(rng));
    std::vector<int> prev(vs.surviving(0, 0, 0).begin(), vs.surviving(0, 0, 0).end());
    for (int t = 0; t < 30; ++t) {
      vs.Update(0, 0, 0, static_cast<int>(rng() % 3));
      const auto cur = vs.surviving(0, 0, 0);
      if (cur.empty() || !std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()))
        ++nesting_bad;
      prev.assign(cur.begin(), cur.end());
    }
  }
  detail << "nesting violations " << nesting_bad << " over 10^4 sequences; ";

  // Truncation monotonicity.
  int trunc_bad = 0;
  const auto policies = EnumerateDeterministicPolicies(3, 2, 3);
  const VersionSpace wide(CandidateSet({{0.7, 0.3}, {0.2, 0.8}, {0.5, 0.5}}), 3, 3, 2,
                          std::numeric_limits<double>::infinity());
  const auto plain = TransitionReward::Plain(d, game.rewards());
  for (int pair = 0; pair < 1000; ++pair) {
    const DeterministicPolicy& pi = policies[rng() % policies.size()];
    const InfrequentSet u = random_u(UniformUnit(rng));
    const Counters c = random_counts(300);
    AbsorbingEstimate p(d);
    for (int h = 0; h < d.horizon; ++h) TransitionEstimate(h, c, u, p);
    const auto cut = TransitionReward::Truncated(d, game.rewards(), u);
    if (OptimisticValueEstimate(pi, cut, p, wide, 0) >
        OptimisticValueEstimate(pi, plain, p, wide, 0) + 1e-12)
      ++trunc_bad;
  }
  detail << "truncation violations " << trunc_bad << "/1000 pairs; ";

  // Exhaustive consistency of table adversaries.
  int tables = 0, inconsistent = 0;
  for (int S = 1; S <= 3; ++S)
    for (int A = 2; A <= 3; ++A)
      for (int H = 1; H <= 3; ++H)
        for (int m = 1; m <= 3; ++m) {
          if (CappedPower(A, static_cast<std::int64_t>(H) * S * m, 4096) < 0) continue;
          const GeneratedInstance inst = GenerateInstance({S, A, 2, H}, m, 300 + tables);
          const auto adv = ConsistentFromTable(inst.table, m);
          const ConsistencyReport r = CheckConsistency(*adv, S, A, H, m, 4096, tables);
          ++tables;
          if (!r.consistent || !r.exhaustive) ++inconsistent;
        }
  detail << "table adversaries consistent " << tables - inconsistent << "/" << tables
         << " (exhaustive)";
  out.passed = absorbing_bad == 0 && nesting_bad == 0 && trunc_bad == 0 && inconsistent == 0;
  out.detail = detail.str();
  return out;
}

}  // namespace
}  // namespace polregret

int main(int argc, char** argv) {
  using polregret::Outcome;
  struct Criterion {
    const char* name;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {{"A1", polregret::A1}, {"A2", polregret::A2},
                                {"A3", polregret::A3}, {"A4", polregret::A4},
                                {"A5", polregret::A5}, {"A6", polregret::A6},
                                {"A7", polregret::A7}};
  std::string only;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--only") only = argv[i + 1];
  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && only.find(c.name) == std::string::npos) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s  %s [%.1fs]\n", c.name, o.passed ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.passed;
  }
  return failed == 0 ? 0 : 1;
}
