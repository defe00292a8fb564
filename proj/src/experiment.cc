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

#include "polregret/experiment.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <initializer_list>
#include <sstream>

#include "polregret/adversary_checks.h"
#include "polregret/ape_ove.h"
#include "polregret/environment.h"
#include "polregret/errors.h"
#include "polregret/generator.h"
#include "polregret/hard_instances.h"
#include "polregret/opo_omle.h"
#include "polregret/policy_set.h"
#include "polregret/visitation.h"

namespace polregret {

namespace {

void CheckKeys(const Json& obj, std::initializer_list<const char*> allowed,
               const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double GetDouble(const Json& obj, const char* key, double fallback,
                 const std::string& where) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) {
    throw ConfigError(where + "." + key + " must be a number");
  }
  return obj[key].get<double>();
}

std::int64_t GetInt(const Json& obj, const char* key, std::int64_t fallback,
                    const std::string& where) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer()) {
    throw ConfigError(where + "." + key + " must be an integer");
  }
  return obj[key].get<std::int64_t>();
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

GameSource ParseGame(const Json& node, const std::filesystem::path& base) {
  CheckKeys(node, {"file", "generate", "trap", "needle"}, "game");
  if (node.size() != 1) throw ConfigError("game needs exactly one source");
  GameSource g;
  if (node.contains("file")) {
    if (!node["file"].is_string()) throw ConfigError("game.file must be a path");
    g.kind = GameSource::Kind::kFile;
    g.path = Resolve(base, node["file"].get<std::string>());
  } else if (node.contains("generate")) {
    const Json& gen = node["generate"];
    CheckKeys(gen, {"dims", "seed", "candidates"}, "game.generate");
    g.kind = GameSource::Kind::kGenerate;
    if (!gen.contains("dims") || !gen["dims"].is_array() ||
        gen["dims"].size() != 4) {
      throw ConfigError("game.generate.dims must be [S, A, B, H]");
    }
    for (const Json& x : gen["dims"]) {
      if (!x.is_number_integer()) {
        throw ConfigError("game.generate.dims entries must be integers");
      }
    }
    g.dims = {gen["dims"][0].get<int>(), gen["dims"][1].get<int>(),
              gen["dims"][2].get<int>(), gen["dims"][3].get<int>()};
    g.seed = static_cast<std::uint64_t>(GetInt(gen, "seed", 0, "game.generate"));
    g.num_candidates =
        static_cast<int>(GetInt(gen, "candidates", 4, "game.generate"));
  } else if (node.contains("trap")) {
    CheckKeys(node["trap"], {"gap"}, "game.trap");
    g.kind = GameSource::Kind::kTrap;
    g.gap = GetDouble(node["trap"], "gap", 0.5, "game.trap");
  } else {
    const Json& n = node["needle"];
    CheckKeys(n, {"S", "A", "B", "H", "index"}, "game.needle");
    g.kind = GameSource::Kind::kNeedle;
    g.dims = {static_cast<int>(GetInt(n, "S", 2, "game.needle")),
              static_cast<int>(GetInt(n, "A", 2, "game.needle")),
              static_cast<int>(GetInt(n, "B", 2, "game.needle")),
              static_cast<int>(GetInt(n, "H", 2, "game.needle"))};
    g.needle_index = GetInt(n, "index", 0, "game.needle");
  }
  return g;
}

AdversarySpec ParseAdversary(const Json& node,
                             const std::filesystem::path& base) {
  CheckKeys(node, {"kind", "m", "table", "candidates", "zeta", "zeta_seed"},
            "adversary");
  AdversarySpec a;
  if (node.contains("kind")) {
    if (!node["kind"].is_string()) throw ConfigError("adversary.kind must be a string");
    a.kind = node["kind"].get<std::string>();
  }
  if (a.kind != "table" && a.kind != "nash-best-response" &&
      a.kind != "theorem1-trap" && a.kind != "theorem3-needle") {
    throw ConfigError("unknown adversary kind '" + a.kind + "'");
  }
  a.memory = static_cast<int>(GetInt(node, "m", 1, "adversary"));
  if (a.memory < 1) throw ConfigError("adversary.m must be at least 1");
  if (node.contains("table")) {
    if (!node["table"].is_string()) throw ConfigError("adversary.table must be a path");
    a.table_path = Resolve(base, node["table"].get<std::string>());
  }
  if (node.contains("candidates")) {
    a.candidates = CandidatesFromJson(node["candidates"]).rows();
  }
  a.zeta = GetDouble(node, "zeta", 0.0, "adversary");
  if (!(a.zeta >= 0.0)) throw ConfigError("adversary.zeta must be >= 0");
  a.zeta_seed = static_cast<std::uint64_t>(GetInt(node, "zeta_seed", 0, "adversary"));
  return a;
}

AlgorithmSpec ParseAlgorithm(const Json& node) {
  CheckKeys(node, {"name", "delta", "c_bonus", "c_alpha", "c_freq", "c_refine",
                   "d_star", "policy_index"},
            "algorithm");
  AlgorithmSpec s;
  if (!node.contains("name") || !node["name"].is_string()) {
    throw ConfigError("algorithm.name is required");
  }
  s.name = node["name"].get<std::string>();
  if (s.name != "opo-omle" && s.name != "ape-ove" && s.name != "fixed") {
    throw ConfigError("unknown algorithm '" + s.name + "'");
  }
  const std::string where = "algorithm " + s.name;
  s.delta = GetDouble(node, "delta", 0.05, where);
  if (!(s.delta > 0.0 && s.delta < 1.0)) {
    throw ConfigError(where + ": delta must lie in (0, 1)");
  }
  s.c_bonus = GetDouble(node, "c_bonus", 1.0, where);
  s.c_alpha = GetDouble(node, "c_alpha", 1.0, where);
  s.c_freq = GetDouble(node, "c_freq", 1.0, where);
  s.c_refine = GetDouble(node, "c_refine", 1.0, where);
  for (double c : {s.c_bonus, s.c_alpha, s.c_freq, s.c_refine}) {
    if (!(c >= 0.0)) throw ConfigError(where + ": constants must be >= 0");
  }
  if (node.contains("d_star")) {
    s.d_star = GetDouble(node, "d_star", 1.0, where);
    if (!(*s.d_star > 0.0 && *s.d_star <= 1.0)) {
      throw ConfigError(where + ": d_star must lie in (0, 1]");
    }
  }
  s.policy_index = GetInt(node, "policy_index", 0, where);
  return s;
}

std::vector<std::vector<double>> PointMasses(int num_actions) {
  std::vector<std::vector<double>> rows(num_actions,
                                        std::vector<double>(num_actions, 0.0));
  for (int b = 0; b < num_actions; ++b) rows[b][b] = 1.0;
  return rows;
}

// Adds every distinct table row missing from `rows`.
void AddTableRows(const ResponseTable& table,
                  std::vector<std::vector<double>>& rows) {
  for (int h = 0; h < table.horizon(); ++h) {
    for (int s = 0; s < table.num_states(); ++s) {
      for (std::int64_t w = 0; w < table.num_windows(); ++w) {
        const auto r = table.row(h, s, w);
        std::vector<double> row(r.begin(), r.end());
        if (std::find(rows.begin(), rows.end(), row) == rows.end()) {
          rows.push_back(std::move(row));
        }
      }
    }
  }
}

std::string RunStem(const std::string& algorithm, std::int64_t T,
                    std::uint64_t seed) {
  return algorithm + "_T" + std::to_string(T) + "_seed" + std::to_string(seed);
}

AuditItem Item(std::string name, bool passed, std::string detail) {
  AuditItem item;
  item.name = std::move(name);
  item.passed = passed;
  item.detail = std::move(detail);
  return item;
}

AuditItem Skipped(std::string name, std::string detail) {
  AuditItem item = Item(std::move(name), true, std::move(detail));
  item.skipped = true;
  return item;
}

}  // namespace

ExperimentConfig ParseConfig(const Json& doc,
                             const std::filesystem::path& base_dir) {
  CheckKeys(doc, {"game", "adversary", "algorithms", "T_grid", "seeds",
                  "output_dir"},
            "config");
  ExperimentConfig c;
  if (!doc.contains("game")) throw ConfigError("config.game is required");
  c.game = ParseGame(doc["game"], base_dir);
  if (doc.contains("adversary")) {
    c.adversary = ParseAdversary(doc["adversary"], base_dir);
  } else if (c.game.kind == GameSource::Kind::kTrap) {
    c.adversary.kind = "theorem1-trap";
  } else if (c.game.kind == GameSource::Kind::kNeedle) {
    c.adversary.kind = "theorem3-needle";
  }
  if (doc.contains("algorithms")) {
    if (!doc["algorithms"].is_array()) {
      throw ConfigError("config.algorithms must be an array");
    }
    for (const Json& a : doc["algorithms"]) {
      c.algorithms.push_back(ParseAlgorithm(a));
    }
  }
  if (doc.contains("T_grid")) {
    if (!doc["T_grid"].is_array()) throw ConfigError("config.T_grid must be an array");
    for (const Json& t : doc["T_grid"]) {
      if (!t.is_number_integer() || t.get<std::int64_t>() < 0) {
        throw ConfigError("T_grid entries must be non-negative integers");
      }
      c.t_grid.push_back(t.get<std::int64_t>());
    }
  }
  if (doc.contains("seeds")) {
    if (!doc["seeds"].is_array()) throw ConfigError("config.seeds must be an array");
    for (const Json& s : doc["seeds"]) {
      if (!s.is_number_integer() || s.get<std::int64_t>() < 0) {
        throw ConfigError("seeds must be non-negative integers");
      }
      c.seeds.push_back(s.get<std::uint64_t>());
    }
  }
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string()) {
      throw ConfigError("config.output_dir must be a path");
    }
    c.output_dir = Resolve(base_dir, doc["output_dir"].get<std::string>());
  } else {
    c.output_dir = base_dir / "out";
  }
  const bool trap = c.game.kind == GameSource::Kind::kTrap;
  const bool needle = c.game.kind == GameSource::Kind::kNeedle;
  if (trap != (c.adversary.kind == "theorem1-trap") ||
      needle != (c.adversary.kind == "theorem3-needle")) {
    throw ConfigError("adversary kind '" + c.adversary.kind +
                      "' does not match the game source");
  }
  if (trap && !(c.game.gap > 0.0 && c.game.gap < 1.0)) {
    throw ConfigError("game.trap.gap must lie in (0, 1)");
  }
  return c;
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  return ParseConfig(ReadJsonFile(path), path.parent_path().empty()
                                             ? std::filesystem::path(".")
                                             : path.parent_path());
}

Instance BuildInstance(const ExperimentConfig& config) {
  const GameSource& g = config.game;
  const AdversarySpec& spec = config.adversary;
  Instance out;
  std::vector<std::vector<double>> candidate_rows;
  std::optional<ResponseTable> table;

  switch (g.kind) {
    case GameSource::Kind::kTrap: {
      TrapInstance trap = MakeTrapInstance(g.gap);
      out.game = std::move(trap.game);
      out.adversary = trap.adversary;
      out.memory = spec.memory;
      break;
    }
    case GameSource::Kind::kNeedle: {
      const auto policies = EnumerateDeterministicPolicies(
          g.dims.num_states, g.dims.num_learner_actions, g.dims.horizon);
      if (g.needle_index < 0 ||
          g.needle_index >= static_cast<std::int64_t>(policies.size())) {
        throw ConfigError("game.needle.index outside the policy set");
      }
      NeedleInstance needle = MakeNeedleInstance(
          policies, g.needle_index, g.dims.num_adversary_actions);
      out.game = std::move(needle.game);
      out.adversary = needle.adversary;
      out.memory = 1;
      out.consistency_expected = false;
      break;
    }
    case GameSource::Kind::kGenerate: {
      GeneratedInstance gen =
          GenerateInstance(g.dims, spec.memory, g.seed, g.num_candidates);
      out.game = std::move(gen.game);
      candidate_rows = gen.candidates.rows();
      if (spec.kind == "table" && !spec.table_path) table = std::move(gen.table);
      break;
    }
    case GameSource::Kind::kFile:
      out.game = GameFromJson(ReadJsonFile(g.path));
      break;
  }

  if (spec.kind == "table") {
    if (spec.table_path) {
      const Json doc = ReadJsonFile(*spec.table_path);
      table = ResponseTableFromJson(doc, out.game.dims());
      if (doc.contains("candidates")) {
        candidate_rows = CandidatesFromJson(doc["candidates"]).rows();
      }
    }
    if (!table) throw ConfigError("table adversary needs adversary.table");
    out.memory = table->memory();
    out.adversary = ConsistentFromTable(*table, table->memory());
    if (spec.zeta > 0.0) {
      Rng rng = SeedStream(spec.zeta_seed, 0x7a657461).At(0);
      auto perturbed = ZetaPerturb(*out.adversary, spec.zeta, rng);
      out.adversary = perturbed;
      table = *perturbed->table();
    }
  } else if (spec.kind == "nash-best-response") {
    out.adversary = NashBestResponseAdversary(out.game);
    out.memory = 1;
    out.consistency_expected = false;
  }

  if (spec.candidates) {
    candidate_rows = *spec.candidates;
  } else if (spec.kind != "table") {
    candidate_rows = PointMasses(out.game.num_adversary_actions());
  }
  // Perturbed rows are appended so the candidate set stays realizable.
  if (table && spec.zeta > 0.0) AddTableRows(*table, candidate_rows);
  if (candidate_rows.empty()) {
    throw ConfigError("no candidate set: give adversary.candidates");
  }
  out.candidates = CandidatesFromJson(Json(candidate_rows));
  if (out.candidates.num_actions() != out.game.num_adversary_actions()) {
    throw ConfigError("candidate rows must have B entries");
  }
  out.policies = EnumerateDeterministicPolicies(out.game.num_states(),
                                                out.game.num_learner_actions(),
                                                out.game.horizon());
  return out;
}

RunResult RunAlgorithm(const Instance& instance, const AlgorithmSpec& spec,
                       std::int64_t num_episodes, std::uint64_t seed,
                       double d_star, Execution exec) {
  Environment env(instance.game, instance.adversary, SeedStream(seed, 0));
  RunResult out;
  if (spec.name == "opo-omle") {
    OpoOmleConfig c;
    c.num_episodes = num_episodes;
    c.delta = spec.delta;
    c.c_bonus = spec.c_bonus;
    c.c_alpha = spec.c_alpha;
    c.execution = exec;
    out.log = RunOpoOmle(env, instance.policies, instance.candidates, c);
  } else if (spec.name == "ape-ove") {
    ApeOveConfig c;
    c.num_episodes = num_episodes;
    c.memory = instance.memory;
    c.delta = spec.delta;
    c.d_star = d_star;
    c.c_alpha = spec.c_alpha;
    c.c_freq = spec.c_freq;
    c.c_refine = spec.c_refine;
    c.execution = exec;
    out.log = RunApeOve(env, instance.policies, instance.candidates, c);
  } else if (spec.name == "fixed") {
    if (spec.policy_index < 0 ||
        spec.policy_index >= static_cast<std::int64_t>(instance.policies.size())) {
      throw ConfigError("fixed.policy_index outside the policy set");
    }
    const auto start = std::chrono::steady_clock::now();
    out.log.algorithm = "fixed";
    for (std::int64_t t = 1; t <= num_episodes; ++t) {
      EpisodeRecord record;
      record.episode = t;
      record.policy_index = spec.policy_index;
      record.trajectory = env.Play(instance.policies[spec.policy_index]);
      record.realized_return = record.trajectory.Return();
      out.log.episodes.push_back(std::move(record));
    }
    out.log.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  } else {
    throw ConfigError("unknown algorithm '" + spec.name + "'");
  }
  const std::vector<std::int64_t> played = out.log.PlayedIndices();
  out.report = PolicyRegret(instance.game, instance.adversary,
                            instance.policies, played, Benchmark::kAuto, exec);
  out.row.algorithm = spec.name;
  out.row.num_episodes = num_episodes;
  out.row.seed = seed;
  out.row.policy_regret = out.report.policy_regret;
  out.row.external_regret = out.report.external_regret;
  out.row.best_fixed_value = out.report.best_fixed_value;
  out.row.learner_value_sum = out.report.learner_value_sum;
  out.row.wall_ms = out.log.wall_ms;
  return out;
}

std::vector<ResultRow> RunExperiment(const ExperimentConfig& config,
                                     const ExperimentOptions& options) {
  const Instance instance = BuildInstance(config);
  const std::filesystem::path out_dir =
      options.output_dir ? *options.output_dir : config.output_dir;

  double oracle_d_star = 1.0;
  bool need_oracle = false;
  for (const AlgorithmSpec& a : config.algorithms) {
    need_oracle = need_oracle || (a.name == "ape-ove" && !a.d_star);
  }
  if (need_oracle) {
    if (!HasClosedFormBenchmark(*instance.adversary)) {
      throw ConfigError(
          "ape-ove needs d_star for an adversary without bounded memory");
    }
    oracle_d_star = MinPositiveVisitation(instance.game, instance.policies,
                                          *instance.adversary, instance.memory)
                        .d_star;
  }

  struct Task {
    const AlgorithmSpec* spec;
    std::int64_t T;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (const AlgorithmSpec& a : config.algorithms) {
    for (std::int64_t T : config.t_grid) {
      for (std::uint64_t seed : config.seeds) tasks.push_back({&a, T, seed});
    }
  }

  std::vector<ResultRow> rows(tasks.size());
  const int jobs = std::max(1, options.jobs);
  const Execution inner = jobs > 1 ? Execution::kSerial : Execution::kAuto;
  std::exception_ptr error;
  const std::int64_t n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for num_threads(jobs) schedule(dynamic) if (jobs > 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const Task& task = tasks[i];
      RunResult run =
          RunAlgorithm(instance, *task.spec, task.T, task.seed,
                       task.spec->d_star ? *task.spec->d_star : oracle_d_star,
                       inner);
      if (!options.record_wall_time) run.row.wall_ms = 0.0;
      if (options.write_logs) {
        const std::string stem = RunStem(task.spec->name, task.T, task.seed);
        WriteFileAtomic(out_dir / "logs" / (stem + ".csv"),
                        LearnerLogCsv(run.log, run.report));
        if (!run.log.epochs.empty()) {
          WriteFileAtomic(out_dir / "logs" / (stem + "_epochs.csv"),
                          EpochSummaryCsv(run.log));
        }
      }
      rows[i] = std::move(run.row);
    } catch (...) {
#pragma omp critical(polregret_experiment_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  WriteFileAtomic(out_dir / "results.csv", ResultsCsv(rows));
  return rows;
}

bool AuditReport::ok() const {
  for (const AuditItem& item : items) {
    if (!item.passed && !item.expected) return false;
  }
  return true;
}

std::string AuditReport::Format() const {
  std::ostringstream out;
  for (const AuditItem& item : items) {
    const char* tag = item.skipped  ? "SKIP"
                      : item.passed ? "PASS"
                      : item.expected ? "EXPECTED-FAIL"
                                      : "FAIL";
    out << tag << "  " << item.name;
    if (!item.detail.empty()) out << ": " << item.detail;
    out << "\n";
  }
  out << (ok() ? "audit passed" : "audit FAILED") << "\n";
  return out.str();
}

AuditReport Audit(const ExperimentConfig& config) {
  AuditReport report;
  if (config.game.kind == GameSource::Kind::kFile) {
    try {
      ValidateGame(GameFromJson(ReadJsonFile(config.game.path), false));
      report.items.push_back(Item("game-stochastic", true, "rows and rewards valid"));
    } catch (const InvalidGameError& e) {
      report.items.push_back(Item("game-stochastic", false, e.what()));
      return report;
    }
  }
  if (config.adversary.table_path) {
    try {
      const Json doc = ReadJsonFile(*config.adversary.table_path);
      const MarkovGame game =
          config.game.kind == GameSource::Kind::kFile
              ? GameFromJson(ReadJsonFile(config.game.path), false)
              : GenerateInstance(config.game.dims, config.adversary.memory,
                                 config.game.seed)
                    .game;
      ResponseTableFromJson(doc, game.dims(), false).Validate();
      report.items.push_back(Item("adversary-rows", true, "rows stochastic"));
    } catch (const InvalidPolicyError& e) {
      report.items.push_back(Item("adversary-rows", false, e.what()));
      return report;
    }
  }

  const Instance inst = BuildInstance(config);
  const GameDims& d = inst.game.dims();
  if (config.game.kind != GameSource::Kind::kFile) {
    ValidateGame(inst.game);
    report.items.push_back(Item("game-stochastic", true, "rows and rewards valid"));
  }
  report.items.push_back(Item(
      "policy-set", true,
      std::to_string(inst.policies.size()) + " deterministic policies"));

  const Adversary& adv = *inst.adversary;
  if (const ResponseTable* table = adv.table()) {
    bool realizable = true;
    for (int h = 0; h < table->horizon() && realizable; ++h) {
      for (int s = 0; s < table->num_states() && realizable; ++s) {
        for (std::int64_t w = 0; w < table->num_windows(); ++w) {
          if (inst.candidates.Find(table->row(h, s, w)) < 0) {
            realizable = false;
            break;
          }
        }
      }
    }
    report.items.push_back(Item("realizability", realizable,
                                realizable ? "every table row is a candidate"
                                           : "a table row is not a candidate"));
  } else {
    report.items.push_back(Skipped("realizability", "adversary has no table"));
  }

  if (adv.memory()) {
    const int m = *adv.memory();
    const MemoryBoundReport mem =
        CheckMemoryBound(adv, inst.policies, m, m + 3, 4096, 0);
    report.items.push_back(Item("memory-bound", mem.bounded,
                                "m=" + std::to_string(m) + ", " +
                                    std::to_string(mem.probes) + " probes" +
                                    (mem.exhaustive ? " (exhaustive)" : "")));
    const std::vector<DeterministicPolicy> window(std::max(m, 1),
                                                  inst.policies.back());
    const std::vector<std::int64_t> ts = {std::max(m, 1), m + 1, 17, 1000};
    const bool stationary = CheckStationary(adv, window, ts);
    report.items.push_back(Item("stationary", stationary == adv.stationary(),
                                stationary ? "response independent of t"
                                           : "response varies with t"));
    const ConsistencyReport cons =
        CheckConsistency(adv, d.num_states, d.num_learner_actions, d.horizon,
                         std::max(m, 1), 4096, 0);
    AuditItem item = Item("consistency", cons.consistent,
                          std::to_string(cons.probes) + " probes" +
                              (cons.exhaustive ? " (exhaustive)" : ""));
    if (!cons.consistent && !inst.consistency_expected) {
      item.expected = true;
      item.detail += ", inconsistent by construction";
    }
    report.items.push_back(std::move(item));
  } else {
    report.items.push_back(Skipped("memory-bound", "unbounded memory"));
    report.items.push_back(Skipped("consistency", "unbounded memory"));
  }

  {
    // Surviving sets only shrink along an update sequence.
    bool nested = true;
    Rng rng = SeedStream(0, 0x76730000).At(0);
    for (int trial = 0; trial < 100 && nested; ++trial) {
      std::uniform_int_distribution<int> pick(0, inst.candidates.size() - 1);
      const auto truth = inst.candidates[pick(rng)];
      VersionSpace vs(inst.candidates, 1, 1, 1,
                      DefaultAlpha(inst.candidates.size(), 1, 1, 1, 200, 0.05));
      std::vector<int> prev(vs.surviving(0, 0, 0).begin(),
                            vs.surviving(0, 0, 0).end());
      for (int t = 0; t < 200 && nested; ++t) {
        vs.Update(0, 0, 0, SampleIndex(truth, rng));
        const auto now = vs.surviving(0, 0, 0);
        nested = std::includes(prev.begin(), prev.end(), now.begin(), now.end());
        prev.assign(now.begin(), now.end());
      }
    }
    report.items.push_back(Item("version-space-nesting", nested,
                                "100 sequences of 200 updates"));
  }

  const bool opo_applicable = adv.memory() && *adv.memory() <= 1 &&
                              adv.stationary() && inst.consistency_expected;
  if (opo_applicable) {
    double delta = 0.05;
    for (const AlgorithmSpec& a : config.algorithms) {
      if (a.name == "opo-omle") delta = a.delta;
    }
    const std::int64_t T = 200;
    AlgorithmSpec spec;
    spec.name = "opo-omle";
    spec.delta = delta;
    const RunResult run = RunAlgorithm(inst, spec, T,
                                       config.seeds.empty() ? 0 : config.seeds[0],
                                       1.0);
    std::int64_t below = 0;
    for (std::int64_t t = 0; t < T; ++t) {
      if (run.log.episodes[t].optimistic_value <
          run.report.learner_values[t] - 1e-9) {
        ++below;
      }
    }
    const double fraction = static_cast<double>(below) / T;
    report.items.push_back(Item("optimism", fraction <= delta,
                                "fraction below exact value " +
                                    FormatDouble(fraction) + " over " +
                                    std::to_string(T) + " episodes"));
  } else {
    report.items.push_back(
        Skipped("optimism", "needs a 1-memory stationary consistent adversary"));
  }

  if (adv.memory() && adv.stationary() && inst.consistency_expected) {
    Environment env(inst.game, inst.adversary, SeedStream(0, 0x61627300));
    ExplorationParams params;
    params.exploration_length = 5;
    params.memory = inst.memory;
    params.alpha = DefaultAlpha(inst.candidates.size(), d.horizon, d.num_states,
                                d.num_learner_actions, 1000, 0.05);
    params.infrequent_threshold = 2.0;
    std::vector<std::int64_t> all(inst.policies.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::int64_t>(i);
    LearnerLog log;
    const ExplorationResult res = LayerwiseExploration(
        all, inst.policies, env, inst.candidates, AbsorbingEstimate(d), params,
        log);
    bool ok = true;
    std::string detail = "|U|=" + std::to_string(res.infrequent.size());
    try {
      res.transitions.Validate();
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    for (int h = 0; h < d.horizon && ok; ++h) {
      for (int s = 0; s < d.num_states; ++s) {
        for (int a = 0; a < d.num_learner_actions; ++a) {
          for (int b = 0; b < d.num_adversary_actions; ++b) {
            for (int x = 0; x < d.num_states; ++x) {
              if (res.infrequent.Contains(h, s, a, b, x) &&
                  res.transitions.row(h, s, a, b)[x] != 0.0) {
                ok = false;
                detail = "U transition with positive mass";
              }
            }
          }
        }
      }
    }
    report.items.push_back(Item("absorbing-estimate", ok, detail));
  } else {
    report.items.push_back(
        Skipped("absorbing-estimate", "needs a stationary consistent adversary"));
  }
  return report;
}

}  // namespace polregret
