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

// polregret generate --dims S,A,B,H --seed N --out DIR [--memory M]
// polregret run --config PATH [--out DIR] [--jobs N] [--no-wall-time]
// polregret audit --config PATH
//
// Exit codes: 0 ok, 2 bad config or arguments, 3 runtime error, 4 audit failed.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polregret/errors.h"
#include "polregret/experiment.h"
#include "polregret/generator.h"
#include "polregret/io.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitAudit = 4;

polregret::GameDims ParseDims(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw polregret::ConfigError("--dims must be S,A,B,H integers");
    }
  }
  if (v.size() != 4) throw polregret::ConfigError("--dims must be S,A,B,H");
  return {v[0], v[1], v[2], v[3]};
}

int Generate(const std::string& dims_text, std::uint64_t seed, int memory,
             int candidates, const std::filesystem::path& out) {
  const polregret::GameDims dims = ParseDims(dims_text);
  const polregret::GeneratedInstance inst =
      polregret::GenerateInstance(dims, memory, seed, candidates);
  polregret::Json adversary = polregret::ResponseTableToJson(inst.table);
  adversary["candidates"] = polregret::CandidatesToJson(inst.candidates);
  polregret::WriteFileAtomic(out / "game.json",
                             polregret::GameToJson(inst.game).dump(1) + "\n");
  polregret::WriteFileAtomic(out / "adversary.json", adversary.dump(1) + "\n");
  std::cout << "wrote " << (out / "game.json").string() << " and "
            << (out / "adversary.json").string() << "\n";
  return kExitOk;
}

int Run(const std::filesystem::path& config_path,
        const std::string& out, int jobs, bool wall_time) {
  const polregret::ExperimentConfig config = polregret::LoadConfig(config_path);
  polregret::ExperimentOptions options;
  options.jobs = jobs;
  options.record_wall_time = wall_time;
  if (!out.empty()) options.output_dir = out;
  const auto rows = polregret::RunExperiment(config, options);
  const auto dir = options.output_dir ? *options.output_dir : config.output_dir;
  std::cout << rows.size() << " runs, results in "
            << (dir / "results.csv").string() << "\n";
  return kExitOk;
}

int AuditCommand(const std::filesystem::path& config_path) {
  const polregret::AuditReport report =
      polregret::Audit(polregret::LoadConfig(config_path));
  std::cout << report.Format();
  return report.ok() ? kExitOk : kExitAudit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Policy regret experiments on tabular Markov games"};
  app.require_subcommand(1);

  std::string dims, out, config;
  std::uint64_t seed = 0;
  int memory = 1, candidates = 4, jobs = 1;
  bool no_wall_time = false;

  CLI::App* gen = app.add_subcommand("generate", "Write a random instance");
  gen->add_option("--dims", dims, "S,A,B,H")->required();
  gen->add_option("--seed", seed, "Generator seed")->required();
  gen->add_option("--out", out, "Output directory")->required();
  gen->add_option("--memory", memory, "Response table memory m")
      ->check(CLI::PositiveNumber);
  gen->add_option("--candidates", candidates, "Candidate rows")
      ->check(CLI::PositiveNumber);

  CLI::App* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("--config", config, "Config path")->required();
  run->add_option("--out", out, "Output directory (overrides output_dir)");
  run->add_option("--jobs", jobs, "Concurrent runs")->check(CLI::PositiveNumber);
  run->add_flag("--no-wall-time", no_wall_time,
                "Write wall_ms as 0 so reruns are byte-identical");

  CLI::App* audit = app.add_subcommand("audit", "Check instance invariants");
  audit->add_option("--config", config, "Config path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen) return Generate(dims, seed, memory, candidates, out);
    if (*run) return Run(config, out, jobs, !no_wall_time);
    if (*audit) return AuditCommand(config);
  } catch (const polregret::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const polregret::InvalidGameError& e) {
    std::cerr << "invalid game: " << e.what() << "\n";
    return kExitConfig;
  } catch (const polregret::CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitRuntime;
}
