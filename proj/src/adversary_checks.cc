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

#include "polregret/adversary_checks.h"

#include <algorithm>

#include "polregret/policy_set.h"
#include "polregret/sampling.h"

namespace polregret {
namespace {

bool RowsEqual(std::span<const double> x, std::span<const double> y) {
  return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

DeterministicPolicy RandomPolicy(int S, int A, int H, Rng& rng) {
  DeterministicPolicy pi(H, S, A);
  for (int h = 0; h < H; ++h) {
    for (int s = 0; s < S; ++s) {
      pi.set_action(h, s, static_cast<int>(rng() % static_cast<unsigned>(A)));
    }
  }
  return pi;
}

std::vector<DeterministicPolicy> WindowFromIndex(std::int64_t index,
                                                 std::int64_t num_policies,
                                                 int m, int S, int A, int H) {
  std::vector<DeterministicPolicy> window(m);
  for (int i = m - 1; i >= 0; --i) {
    window[i] = PolicyFromIndex(index % num_policies, S, A, H);
    index /= num_policies;
  }
  return window;
}

ConsistencyReport ExhaustiveConsistency(const Adversary& adversary, int S,
                                        int A, int H, int m,
                                        std::int64_t num_windows) {
  ConsistencyReport report;
  report.exhaustive = true;
  const std::int64_t num_policies = CountDeterministicPolicies(S, A, H);
  const std::int64_t keys = CappedPower(A, m, kDefaultPolicyCap);
  const int B = adversary.num_adversary_actions();
  // First response row seen per (h, s, key), and the window that produced it.
  std::vector<double> seen(static_cast<std::size_t>(H) * S * keys * B, 0.0);
  std::vector<std::int64_t> owner(static_cast<std::size_t>(H) * S * keys, -1);

  for (std::int64_t w = 0; w < num_windows; ++w) {
    const auto window = WindowFromIndex(w, num_policies, m, S, A, H);
    const StochasticPolicy mu = Respond(adversary, window);
    ++report.probes;
    for (int h = 0; h < H; ++h) {
      for (int s = 0; s < S; ++s) {
        std::int64_t key = 0;
        for (const auto& pi : window) key = key * A + pi.action(h, s);
        const std::size_t slot = (static_cast<std::size_t>(h) * S + s) * keys + key;
        std::span<double> stored(seen.data() + slot * B, B);
        if (owner[slot] < 0) {
          owner[slot] = w;
          std::copy(mu.row(h, s).begin(), mu.row(h, s).end(), stored.begin());
        } else if (!RowsEqual(stored, mu.row(h, s))) {
          report.consistent = false;
          report.counterexample = ConsistencyCounterexample{
              WindowFromIndex(owner[slot], num_policies, m, S, A, H), window, h,
              s};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace

ConsistencyReport CheckConsistency(const Adversary& adversary, int num_states,
                                   int num_learner_actions, int horizon, int m,
                                   std::int64_t probe_budget,
                                   std::uint64_t seed) {
  const int S = num_states;
  const int A = num_learner_actions;
  const int H = horizon;
  const std::int64_t num_windows =
      CappedPower(A, static_cast<std::int64_t>(H) * S * m, probe_budget);
  if (num_windows >= 0) {
    return ExhaustiveConsistency(adversary, S, A, H, m, num_windows);
  }

  ConsistencyReport report;
  Rng rng = SeedStream(seed).At(0);
  for (std::int64_t probe = 0; probe < probe_budget; ++probe) {
    std::vector<DeterministicPolicy> first, second;
    const int h = static_cast<int>(rng() % static_cast<unsigned>(H));
    const int s = static_cast<int>(rng() % static_cast<unsigned>(S));
    for (int i = 0; i < m; ++i) {
      first.push_back(RandomPolicy(S, A, H, rng));
      DeterministicPolicy partner = RandomPolicy(S, A, H, rng);
      partner.set_action(h, s, first.back().action(h, s));
      second.push_back(std::move(partner));
    }
    ++report.probes;
    const auto mu1 = Respond(adversary, first);
    const auto mu2 = Respond(adversary, second);
    if (!RowsEqual(mu1.row(h, s), mu2.row(h, s))) {
      report.consistent = false;
      report.counterexample =
          ConsistencyCounterexample{std::move(first), std::move(second), h, s};
      return report;
    }
  }
  return report;
}

MemoryBoundReport CheckMemoryBound(const Adversary& adversary,
                                   std::span<const DeterministicPolicy> pool,
                                   int m, int max_t, std::int64_t probe_budget,
                                   std::uint64_t seed) {
  MemoryBoundReport report;
  if (pool.empty()) return report;
  const auto n = static_cast<std::int64_t>(pool.size());
  Rng rng = SeedStream(seed).At(1);
  std::int64_t total = 0;
  bool exhaustive = true;
  for (int t = 1; t <= max_t; ++t) {
    const std::int64_t count = CappedPower(n, t, probe_budget);
    if (count < 0) {
      exhaustive = false;
      break;
    }
    total += count;
  }
  exhaustive = exhaustive && total <= probe_budget;
  report.exhaustive = exhaustive;

  auto compare = [&](const std::vector<DeterministicPolicy>& x,
                     const std::vector<DeterministicPolicy>& y) {
    ++report.probes;
    if (!(Respond(adversary, x) == Respond(adversary, y))) {
      report.bounded = false;
      report.counterexample = std::make_pair(x, y);
      return false;
    }
    return true;
  };

  for (int t = 1; t <= max_t; ++t) {
    const int shared = std::min(t, m);
    const int free_slots = t - shared;
    if (free_slots == 0) continue;
    if (exhaustive) {
      // Fix the reference prefix to all-pool[0] and vary the free prefix over
      // every combination, for every shared suffix.
      const std::int64_t suffixes = CappedPower(n, shared, probe_budget);
      const std::int64_t prefixes = CappedPower(n, free_slots, probe_budget);
      for (std::int64_t suf = 0; suf < suffixes; ++suf) {
        std::vector<DeterministicPolicy> base(t, pool[0]);
        std::int64_t code = suf;
        for (int i = t - 1; i >= free_slots; --i) {
          base[i] = pool[code % n];
          code /= n;
        }
        for (std::int64_t pre = 1; pre < prefixes; ++pre) {
          std::vector<DeterministicPolicy> other = base;
          std::int64_t p = pre;
          for (int i = free_slots - 1; i >= 0; --i) {
            other[i] = pool[p % n];
            p /= n;
          }
          if (!compare(base, other)) return report;
        }
      }
    } else {
      const std::int64_t per_t = std::max<std::int64_t>(1, probe_budget / max_t);
      for (std::int64_t k = 0; k < per_t; ++k) {
        std::vector<DeterministicPolicy> x(t), y(t);
        for (int i = 0; i < t; ++i) {
          x[i] = pool[rng() % static_cast<std::uint64_t>(n)];
          y[i] = i < free_slots ? pool[rng() % static_cast<std::uint64_t>(n)]
                                : x[i];
        }
        if (!compare(x, y)) return report;
      }
    }
  }
  return report;
}

bool CheckStationary(const Adversary& adversary,
                     std::span<const DeterministicPolicy> window,
                     std::span<const std::int64_t> episode_indices) {
  if (episode_indices.empty()) return true;
  const auto reference = adversary.ResponseFor(window, episode_indices[0]);
  for (std::int64_t t : episode_indices.subspan(1)) {
    if (!(adversary.ResponseFor(window, t) == reference)) return false;
  }
  return true;
}

}  // namespace polregret
