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

#include "polregret/adversary.h"

#include <algorithm>
#include <cmath>

#include "polregret/policy_set.h"

namespace polregret {

std::string AdversaryKindName(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::kScriptedSequence:
      return "scripted-sequence";
    case AdversaryKind::kTable:
      return "table";
    case AdversaryKind::kNashBestResponse:
      return "nash-best-response";
    case AdversaryKind::kTrap:
      return "theorem1-trap";
    case AdversaryKind::kNeedle:
      return "theorem3-needle";
    case AdversaryKind::kZetaPerturbed:
      return "zeta-perturbed";
  }
  return "unknown";
}

ResponseTable::ResponseTable(int horizon, int num_states,
                             int num_learner_actions,
                             int num_adversary_actions, int memory)
    : horizon_(horizon),
      num_states_(num_states),
      num_learner_actions_(num_learner_actions),
      num_adversary_actions_(num_adversary_actions),
      memory_(memory) {
  if (horizon <= 0 || num_states <= 0 || num_learner_actions <= 0 ||
      num_adversary_actions <= 0 || memory < 0) {
    throw DimensionError("response table dimensions must be positive");
  }
  num_windows_ = CappedPower(num_learner_actions, memory, kDefaultPolicyCap);
  if (num_windows_ < 0) throw CapExceededError("A^m windows exceed the cap");
  rows_.assign(static_cast<std::size_t>(horizon) * num_states * num_windows_ *
                   num_adversary_actions,
               1.0 / num_adversary_actions);
}

void ResponseTable::SetRow(int h, int s, std::int64_t window,
                           std::span<const double> p) {
  if (p.size() != static_cast<std::size_t>(num_adversary_actions_)) {
    throw DimensionError("response row has wrong length");
  }
  std::copy(p.begin(), p.end(), rows_.begin() + Offset(h, s, window));
}

void ResponseTable::Validate() const {
  for (int h = 0; h < horizon_; ++h) {
    for (int s = 0; s < num_states_; ++s) {
      for (std::int64_t w = 0; w < num_windows_; ++w) {
        if (!IsProbabilityVector(row(h, s, w))) {
          throw InvalidPolicyError(
              "response row (h=" + std::to_string(h) + ", s=" +
              std::to_string(s) + ", window=" + std::to_string(w) +
              ") is not a probability vector");
        }
      }
    }
  }
}

StochasticPolicy TableResponse(const ResponseTable& table,
                               std::span<const DeterministicPolicy> window) {
  const int m = table.memory();
  const int A = table.num_learner_actions();
  StochasticPolicy mu(table.horizon(), table.num_states(),
                      table.num_adversary_actions());
  const int pad = std::max<int>(0, m - static_cast<int>(window.size()));
  // Slots beyond the table memory are never read.
  const std::size_t first =
      window.size() > static_cast<std::size_t>(m) ? window.size() - m : 0;
  for (int h = 0; h < table.horizon(); ++h) {
    for (int s = 0; s < table.num_states(); ++s) {
      std::int64_t key = 0;
      for (int i = 0; i < m; ++i) {
        const std::size_t slot = i < pad ? first : first + (i - pad);
        key = key * A + window[slot].action(h, s);
      }
      mu.SetRow(h, s, table.row(h, s, key));
    }
  }
  return mu;
}

StochasticPolicy Respond(const Adversary& adversary,
                         std::span<const DeterministicPolicy> history) {
  if (history.empty()) throw InvalidPolicyError("history must be non-empty");
  const auto t = static_cast<std::int64_t>(history.size());
  if (auto m = adversary.memory()) {
    const std::size_t keep = std::min<std::size_t>(history.size(), *m);
    return adversary.ResponseFor(history.subspan(history.size() - keep), t);
  }
  return adversary.ResponseFor(history, t);
}

AdversaryProcess::AdversaryProcess(std::shared_ptr<const Adversary> adversary)
    : adversary_(std::move(adversary)) {}

StochasticPolicy AdversaryProcess::Play(const DeterministicPolicy& pi) {
  ++episodes_;
  buffer_.push_back(pi);
  if (auto m = adversary_->memory()) {
    if (buffer_.size() > static_cast<std::size_t>(*m)) {
      buffer_.erase(buffer_.begin(),
                    buffer_.end() - static_cast<std::ptrdiff_t>(*m));
    }
  }
  return adversary_->ResponseFor(buffer_, episodes_);
}

void AdversaryProcess::Reset() {
  buffer_.clear();
  episodes_ = 0;
}

namespace {

class ScriptedAdversary : public Adversary {
 public:
  explicit ScriptedAdversary(std::vector<StochasticPolicy> script)
      : script_(std::move(script)) {
    if (script_.empty()) throw InvalidPolicyError("script must be non-empty");
    for (const auto& mu : script_) mu.Validate();
  }

  AdversaryKind kind() const override {
    return AdversaryKind::kScriptedSequence;
  }
  std::optional<int> memory() const override { return 0; }
  bool stationary() const override { return script_.size() == 1; }
  int horizon() const override { return script_[0].horizon(); }
  int num_states() const override { return script_[0].num_states(); }
  int num_adversary_actions() const override {
    return script_[0].num_actions();
  }
  StochasticPolicy ResponseFor(std::span<const DeterministicPolicy>,
                               std::int64_t t) const override {
    const auto i = std::min<std::int64_t>(
        t - 1, static_cast<std::int64_t>(script_.size()) - 1);
    return script_[std::max<std::int64_t>(i, 0)];
  }

 private:
  std::vector<StochasticPolicy> script_;
};

class TableAdversary : public Adversary {
 public:
  explicit TableAdversary(ResponseTable table) : table_(std::move(table)) {}

  AdversaryKind kind() const override { return AdversaryKind::kTable; }
  std::optional<int> memory() const override { return table_.memory(); }
  bool stationary() const override { return true; }
  int horizon() const override { return table_.horizon(); }
  int num_states() const override { return table_.num_states(); }
  int num_adversary_actions() const override {
    return table_.num_adversary_actions();
  }
  const ResponseTable* table() const override { return &table_; }
  StochasticPolicy ResponseFor(std::span<const DeterministicPolicy> window,
                               std::int64_t) const override {
    return TableResponse(table_, window);
  }

 private:
  ResponseTable table_;
};

class NashAdversary : public Adversary {
 public:
  explicit NashAdversary(MarkovGame game) : game_(std::move(game)) {}

  AdversaryKind kind() const override {
    return AdversaryKind::kNashBestResponse;
  }
  std::optional<int> memory() const override { return 1; }
  bool stationary() const override { return true; }
  int horizon() const override { return game_.horizon(); }
  int num_states() const override { return game_.num_states(); }
  int num_adversary_actions() const override {
    return game_.num_adversary_actions();
  }
  StochasticPolicy ResponseFor(std::span<const DeterministicPolicy> window,
                               std::int64_t) const override {
    return NashBestResponse(game_, window.back());
  }

 private:
  MarkovGame game_;
};

}  // namespace

std::shared_ptr<const Adversary> ScriptedSequence(
    std::vector<StochasticPolicy> script) {
  return std::make_shared<ScriptedAdversary>(std::move(script));
}

std::shared_ptr<const Adversary> ConsistentFromTable(ResponseTable table,
                                                     int m) {
  if (table.memory() != m) {
    throw DimensionError("table memory " + std::to_string(table.memory()) +
                         " does not match m=" + std::to_string(m));
  }
  table.Validate();
  return std::make_shared<TableAdversary>(std::move(table));
}

StochasticPolicy NashBestResponse(const MarkovGame& game,
                                  const DeterministicPolicy& pi) {
  CheckDims(game, pi);
  const int S = game.num_states();
  const int B = game.num_adversary_actions();
  const int H = game.horizon();
  StochasticPolicy mu(H, S, B);
  std::vector<double> next(S, 0.0), cur(S, 0.0);
  for (int h = H - 1; h >= 0; --h) {
    for (int s = 0; s < S; ++s) {
      const int a = pi.action(h, s);
      int best_b = 0;
      double best_q = 0.0;
      for (int b = 0; b < B; ++b) {
        double q = game.reward(h, s, a, b);
        auto row = game.transition_row(h, s, a, b);
        for (int n = 0; n < S; ++n) q += row[n] * next[n];
        // Values equal up to rounding count as ties.
        if (b == 0 || q < best_q - 1e-12 * H) {
          best_q = q;
          best_b = b;
        }
      }
      mu.SetPointMass(h, s, best_b);
      cur[s] = best_q;
    }
    std::swap(cur, next);
  }
  return mu;
}

std::shared_ptr<const Adversary> NashBestResponseAdversary(MarkovGame game) {
  ValidateGame(game);
  return std::make_shared<NashAdversary>(std::move(game));
}

ZetaPerturbedAdversary::ZetaPerturbedAdversary(
    ResponseTable original, ResponseTable perturbed, double zeta,
    std::vector<double> row_log_ratio)
    : table_(std::move(perturbed)),
      original_(std::move(original)),
      zeta_(zeta),
      row_log_ratio_(std::move(row_log_ratio)) {}

StochasticPolicy ZetaPerturbedAdversary::ResponseFor(
    std::span<const DeterministicPolicy> window, std::int64_t) const {
  return TableResponse(table_, window);
}

double ZetaPerturbedAdversary::MaxLogRatio() const {
  double worst = 0.0;
  for (double r : row_log_ratio_) worst = std::max(worst, r);
  return worst;
}

std::shared_ptr<const ZetaPerturbedAdversary> ZetaPerturb(
    const Adversary& adversary, double zeta, Rng& rng) {
  if (!(zeta >= 0.0)) throw InvalidPolicyError("zeta must be nonnegative");
  const ResponseTable* source = adversary.table();
  if (source == nullptr) {
    throw InvalidPolicyError("zeta perturbation needs a table adversary");
  }
  ResponseTable out = *source;
  std::vector<double> ratios;
  const int B = out.num_adversary_actions();
  std::vector<double> scaled(B);
  for (int h = 0; h < out.horizon(); ++h) {
    for (int s = 0; s < out.num_states(); ++s) {
      for (std::int64_t w = 0; w < out.num_windows(); ++w) {
        auto original = source->row(h, s, w);
        double total = 0.0;
        for (int b = 0; b < B; ++b) {
          const double u = 2.0 * UniformUnit(rng) - 1.0;
          scaled[b] = original[b] * std::exp(zeta * u);
          total += scaled[b];
        }
        double worst = 0.0;
        for (int b = 0; b < B; ++b) {
          scaled[b] /= total;
          if (original[b] > 0.0) {
            worst = std::max(worst, std::abs(std::log(scaled[b] / original[b])));
          }
        }
        if (zeta == 0.0) {
          // Bitwise identity instead of x * 1 / sum(x), which may round.
          std::copy(original.begin(), original.end(), scaled.begin());
          worst = 0.0;
        }
        out.SetRow(h, s, w, scaled);
        ratios.push_back(worst);
      }
    }
  }
  return std::make_shared<ZetaPerturbedAdversary>(*source, std::move(out),
                                                  zeta, std::move(ratios));
}

}  // namespace polregret
