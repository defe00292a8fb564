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

// Experiment configs, multi-seed runs and invariant audits.
//
// Config document (unknown keys are errors):
//   {
//     "game": {"file": "game.json"}
//           | {"generate": {"dims": [S, A, B, H], "seed": 7, "candidates": 4}}
//           | {"trap": {"gap": 0.5}}
//           | {"needle": {"S": 2, "A": 2, "H": 2, "B": 2, "index": 5}},
//     "adversary": {"kind": "table", "m": 1, "table": "adversary.json",
//                   "candidates": [[...]], "zeta": 0.0, "zeta_seed": 0},
//     "algorithms": [{"name": "opo-omle", "delta": 0.05, "c_bonus": 1,
//                     "c_alpha": 1},
//                    {"name": "ape-ove", "delta": 0.05, "c_alpha": 1,
//                     "c_freq": 1, "c_refine": 1, "d_star": 0.1},
//                    {"name": "fixed", "policy_index": 0}],
//     "T_grid": [200, 2000],
//     "seeds": [0, 1, 2],
//     "output_dir": "out"
//   }
// Relative paths resolve against the config file's directory.

#ifndef POLREGRET_EXPERIMENT_H_
#define POLREGRET_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polregret/adversary.h"
#include "polregret/game.h"
#include "polregret/io.h"
#include "polregret/learner_log.h"
#include "polregret/policy_scan.h"
#include "polregret/regret.h"
#include "polregret/version_space.h"

namespace polregret {

struct GameSource {
  enum class Kind { kFile, kGenerate, kTrap, kNeedle };
  Kind kind = Kind::kGenerate;
  std::filesystem::path path;
  GameDims dims{2, 2, 2, 2};
  std::uint64_t seed = 0;
  int num_candidates = 4;
  double gap = 0.5;
  std::int64_t needle_index = 0;
};

struct AdversarySpec {
  std::string kind = "table";
  int memory = 1;
  std::optional<std::filesystem::path> table_path;
  std::optional<std::vector<std::vector<double>>> candidates;
  double zeta = 0.0;
  std::uint64_t zeta_seed = 0;
};

struct AlgorithmSpec {
  std::string name;
  double delta = 0.05;
  double c_bonus = 1.0;
  double c_alpha = 1.0;
  double c_freq = 1.0;
  double c_refine = 1.0;
  std::optional<double> d_star;
  std::int64_t policy_index = 0;  // "fixed" only
};

struct ExperimentConfig {
  GameSource game;
  AdversarySpec adversary;
  std::vector<AlgorithmSpec> algorithms;
  std::vector<std::int64_t> t_grid;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output_dir = "out";
};

// Throws ConfigError naming the offending key.
ExperimentConfig ParseConfig(const Json& doc,
                             const std::filesystem::path& base_dir = ".");
ExperimentConfig LoadConfig(const std::filesystem::path& path);

struct Instance {
  MarkovGame game;
  std::shared_ptr<const Adversary> adversary;
  CandidateSet candidates;
  std::vector<DeterministicPolicy> policies;
  // Memory the learner assumes; the adversary's own when bounded.
  int memory = 1;
  // False for kinds that are not consistent by construction (needle, Nash
  // best response); the audit then records the probe instead of failing.
  bool consistency_expected = true;
};

Instance BuildInstance(const ExperimentConfig& config);

struct RunResult {
  ResultRow row;
  LearnerLog log;
  RegretReport report;
};

// d_star is used by ape-ove only.
RunResult RunAlgorithm(const Instance& instance, const AlgorithmSpec& spec,
                       std::int64_t num_episodes, std::uint64_t seed,
                       double d_star, Execution exec = Execution::kAuto);

struct ExperimentOptions {
  int jobs = 1;
  bool record_wall_time = true;
  bool write_logs = true;
  std::optional<std::filesystem::path> output_dir;
};

// One row per (algorithm, T, seed) in that nesting order. Writes
// results.csv and per-run logs under the output directory.
std::vector<ResultRow> RunExperiment(const ExperimentConfig& config,
                                     const ExperimentOptions& options = {});

struct AuditItem {
  std::string name;
  bool passed = true;
  // Failure the instance is built to produce; does not fail the audit.
  bool expected = false;
  bool skipped = false;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditItem> items;
  bool ok() const;
  std::string Format() const;
};

AuditReport Audit(const ExperimentConfig& config);

}  // namespace polregret

#endif  // POLREGRET_EXPERIMENT_H_
