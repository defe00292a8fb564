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

#ifndef POLREGRET_ADVERSARY_H_
#define POLREGRET_ADVERSARY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polregret/game.h"
#include "polregret/sampling.h"

namespace polregret {

enum class AdversaryKind {
  kScriptedSequence,
  kTable,
  kNashBestResponse,
  kTrap,
  kNeedle,
  kZetaPerturbed,
};

std::string AdversaryKindName(AdversaryKind kind);

// g(h, s, window) -> distribution over B, where window is the tuple of the
// learner's actions at (h, s) under its last m policies, oldest first, read
// as a base-A numeral (oldest policy is the most significant digit).
class ResponseTable {
 public:
  ResponseTable() = default;
  // All rows uniform.
  ResponseTable(int horizon, int num_states, int num_learner_actions,
                int num_adversary_actions, int memory);

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  int num_learner_actions() const { return num_learner_actions_; }
  int num_adversary_actions() const { return num_adversary_actions_; }
  int memory() const { return memory_; }
  std::int64_t num_windows() const { return num_windows_; }

  std::span<const double> row(int h, int s, std::int64_t window) const {
    return {rows_.data() + Offset(h, s, window),
            static_cast<std::size_t>(num_adversary_actions_)};
  }
  std::span<double> mutable_row(int h, int s, std::int64_t window) {
    return {rows_.data() + Offset(h, s, window),
            static_cast<std::size_t>(num_adversary_actions_)};
  }
  void SetRow(int h, int s, std::int64_t window, std::span<const double> p);

  // Throws InvalidPolicyError on the first non-stochastic row.
  void Validate() const;

  bool operator==(const ResponseTable&) const = default;

 private:
  std::size_t Offset(int h, int s, std::int64_t window) const {
    return ((static_cast<std::size_t>(h) * num_states_ + s) * num_windows_ +
            window) * num_adversary_actions_;
  }

  int horizon_ = 0;
  int num_states_ = 0;
  int num_learner_actions_ = 0;
  int num_adversary_actions_ = 0;
  int memory_ = 0;
  std::int64_t num_windows_ = 0;
  std::vector<double> rows_;
};

// A deterministic response process {f_t} over learner-policy histories.
class Adversary {
 public:
  virtual ~Adversary() = default;

  virtual AdversaryKind kind() const = 0;
  // Window length m; nullopt for unbounded memory.
  virtual std::optional<int> memory() const = 0;
  virtual bool stationary() const = 0;
  virtual int horizon() const = 0;
  virtual int num_states() const = 0;
  virtual int num_adversary_actions() const = 0;
  // Non-null for table-backed kinds.
  virtual const ResponseTable* table() const { return nullptr; }

  // f_t evaluated on `window`: the last min(t, m) learner policies for
  // m-memory-bounded kinds, the whole history otherwise. `t` is the 1-based
  // episode index. Implementations never see policies outside the window.
  virtual StochasticPolicy ResponseFor(
      std::span<const DeterministicPolicy> window, std::int64_t t) const = 0;
};

// f_t(history) with t = history.size(); trims to the memory window before
// dispatching. `history` must be non-empty.
StochasticPolicy Respond(const Adversary& adversary,
                         std::span<const DeterministicPolicy> history);

// Stateful wrapper feeding one learner policy per episode. Keeps only the
// last m policies for memory-bounded adversaries.
class AdversaryProcess {
 public:
  explicit AdversaryProcess(std::shared_ptr<const Adversary> adversary);

  // Appends `pi` as episode t's policy and returns f_t(π^1..π^t).
  StochasticPolicy Play(const DeterministicPolicy& pi);
  void Reset();

  std::int64_t episodes() const { return episodes_; }
  const Adversary& adversary() const { return *adversary_; }
  std::shared_ptr<const Adversary> shared_adversary() const {
    return adversary_;
  }

 private:
  std::shared_ptr<const Adversary> adversary_;
  std::vector<DeterministicPolicy> buffer_;
  std::int64_t episodes_ = 0;
};

// Oblivious adversary replaying a fixed script; episodes beyond the script
// repeat its last entry.
std::shared_ptr<const Adversary> ScriptedSequence(
    std::vector<StochasticPolicy> script);

// m-memory-bounded, stationary, consistent adversary backed by `table`.
// Throws InvalidPolicyError on non-stochastic rows and DimensionError if the
// table memory does not equal m. For t < m the window is left-padded with
// the earliest policy, so f([π]^t) = f([π]^m).
std::shared_ptr<const Adversary> ConsistentFromTable(ResponseTable table,
                                                     int m);

// Best response to a fixed Markov learner policy by backward induction;
// lowest adversary action index on ties.
StochasticPolicy NashBestResponse(const MarkovGame& game,
                                  const DeterministicPolicy& pi);

// 1-memory stationary adversary responding with NashBestResponse(game, π^t).
std::shared_ptr<const Adversary> NashBestResponseAdversary(MarkovGame game);

// Multiplies every table row entrywise by seeded factors in
// [e^-zeta, e^zeta] and renormalizes. Rows at equal (h, s, window) keys stay
// equal, so the result is still table-consistent.
class ZetaPerturbedAdversary;
std::shared_ptr<const ZetaPerturbedAdversary> ZetaPerturb(
    const Adversary& adversary, double zeta, Rng& rng);

class ZetaPerturbedAdversary : public Adversary {
 public:
  ZetaPerturbedAdversary(ResponseTable original, ResponseTable perturbed,
                         double zeta, std::vector<double> row_log_ratio);

  AdversaryKind kind() const override { return AdversaryKind::kZetaPerturbed; }
  std::optional<int> memory() const override { return table_.memory(); }
  bool stationary() const override { return true; }
  int horizon() const override { return table_.horizon(); }
  int num_states() const override { return table_.num_states(); }
  int num_adversary_actions() const override {
    return table_.num_adversary_actions();
  }
  const ResponseTable* table() const override { return &table_; }
  StochasticPolicy ResponseFor(std::span<const DeterministicPolicy> window,
                               std::int64_t t) const override;

  double zeta() const { return zeta_; }
  const ResponseTable& original() const { return original_; }
  // Realized max_b |log(perturbed_b / original_b)| per table row, in the
  // table's (h, s, window) order; bounded by 2 * zeta.
  const std::vector<double>& row_log_ratio() const { return row_log_ratio_; }
  double MaxLogRatio() const;

 private:
  ResponseTable table_;
  ResponseTable original_;
  double zeta_;
  std::vector<double> row_log_ratio_;
};

// Response of `table` to a window of policies at every (h, s); the window is
// left-padded with its first element up to the table memory.
StochasticPolicy TableResponse(const ResponseTable& table,
                               std::span<const DeterministicPolicy> window);

}  // namespace polregret

#endif  // POLREGRET_ADVERSARY_H_
