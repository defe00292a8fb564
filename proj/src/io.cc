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

#include "polregret/io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "polregret/errors.h"

namespace polregret {

namespace {

int IntField(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw ConfigError(std::string("missing integer field '") + key + "'");
  }
  return doc[key].get<int>();
}

const Json& ArrayOf(const Json& node, std::size_t size, const std::string& what) {
  if (!node.is_array() || node.size() != size) {
    throw ConfigError(what + ": expected an array of length " +
                      std::to_string(size));
  }
  return node;
}

double Number(const Json& node, const std::string& what) {
  if (!node.is_number()) throw ConfigError(what + ": expected a number");
  return node.get<double>();
}

}  // namespace

Json GameToJson(const MarkovGame& game) {
  const GameDims& d = game.dims();
  Json trans = Json::array();
  Json rew = Json::array();
  for (int h = 0; h < d.horizon; ++h) {
    Json th = Json::array(), rh = Json::array();
    for (int s = 0; s < d.num_states; ++s) {
      Json ts = Json::array(), rs = Json::array();
      for (int a = 0; a < d.num_learner_actions; ++a) {
        Json ta = Json::array(), ra = Json::array();
        for (int b = 0; b < d.num_adversary_actions; ++b) {
          const auto row = game.transition_row(h, s, a, b);
          ta.push_back(Json(std::vector<double>(row.begin(), row.end())));
          ra.push_back(game.reward(h, s, a, b));
        }
        ts.push_back(std::move(ta));
        rs.push_back(std::move(ra));
      }
      th.push_back(std::move(ts));
      rh.push_back(std::move(rs));
    }
    trans.push_back(std::move(th));
    rew.push_back(std::move(rh));
  }
  Json doc;
  doc["S"] = d.num_states;
  doc["A"] = d.num_learner_actions;
  doc["B"] = d.num_adversary_actions;
  doc["H"] = d.horizon;
  doc["s1"] = game.initial_state();
  doc["transitions"] = std::move(trans);
  doc["rewards"] = std::move(rew);
  return doc;
}

MarkovGame GameFromJson(const Json& doc, bool validate) {
  if (!doc.is_object()) throw ConfigError("game document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "S" && key != "A" && key != "B" && key != "H" && key != "s1" &&
        key != "transitions" && key != "rewards") {
      throw ConfigError("unknown game key '" + key + "'");
    }
  }
  GameDims d;
  d.num_states = IntField(doc, "S");
  d.num_learner_actions = IntField(doc, "A");
  d.num_adversary_actions = IntField(doc, "B");
  d.horizon = IntField(doc, "H");
  const int s1 = IntField(doc, "s1");
  if (d.num_states <= 0 || d.num_learner_actions <= 0 ||
      d.num_adversary_actions <= 0 || d.horizon <= 0) {
    throw ConfigError("game dimensions must be positive");
  }
  if (s1 < 0 || s1 >= d.num_states) throw ConfigError("s1 out of range");
  if (!doc.contains("transitions") || !doc.contains("rewards")) {
    throw ConfigError("game document needs 'transitions' and 'rewards'");
  }
  MarkovGame game(d, s1);
  const Json& trans = ArrayOf(doc["transitions"], d.horizon, "transitions");
  const Json& rew = ArrayOf(doc["rewards"], d.horizon, "rewards");
  for (int h = 0; h < d.horizon; ++h) {
    const Json& th = ArrayOf(trans[h], d.num_states, "transitions[h]");
    const Json& rh = ArrayOf(rew[h], d.num_states, "rewards[h]");
    for (int s = 0; s < d.num_states; ++s) {
      const Json& ts = ArrayOf(th[s], d.num_learner_actions, "transitions[h][s]");
      const Json& rs = ArrayOf(rh[s], d.num_learner_actions, "rewards[h][s]");
      for (int a = 0; a < d.num_learner_actions; ++a) {
        const Json& ta =
            ArrayOf(ts[a], d.num_adversary_actions, "transitions[h][s][a]");
        const Json& ra = ArrayOf(rs[a], d.num_adversary_actions, "rewards[h][s][a]");
        for (int b = 0; b < d.num_adversary_actions; ++b) {
          const Json& row = ArrayOf(ta[b], d.num_states, "transitions[h][s][a][b]");
          auto out = game.mutable_transition_row(h, s, a, b);
          for (int x = 0; x < d.num_states; ++x) {
            out[x] = Number(row[x], "transition entry");
          }
          game.set_reward(h, s, a, b, Number(ra[b], "reward entry"));
        }
      }
    }
  }
  if (validate) ValidateGame(game);
  return game;
}

Json ResponseTableToJson(const ResponseTable& table) {
  Json rows = Json::array();
  for (int h = 0; h < table.horizon(); ++h) {
    Json rh = Json::array();
    for (int s = 0; s < table.num_states(); ++s) {
      Json rs = Json::array();
      for (std::int64_t w = 0; w < table.num_windows(); ++w) {
        const auto row = table.row(h, s, w);
        rs.push_back(Json(std::vector<double>(row.begin(), row.end())));
      }
      rh.push_back(std::move(rs));
    }
    rows.push_back(std::move(rh));
  }
  Json doc;
  doc["m"] = table.memory();
  doc["rows"] = std::move(rows);
  return doc;
}

ResponseTable ResponseTableFromJson(const Json& doc, const GameDims& dims,
                                    bool validate) {
  if (!doc.is_object()) throw ConfigError("adversary document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "m" && key != "rows" && key != "candidates") {
      throw ConfigError("unknown adversary key '" + key + "'");
    }
  }
  const int m = IntField(doc, "m");
  if (m < 0) throw ConfigError("m must be non-negative");
  if (!doc.contains("rows")) throw ConfigError("adversary document needs 'rows'");
  ResponseTable table(dims.horizon, dims.num_states, dims.num_learner_actions,
                      dims.num_adversary_actions, m);
  const Json& rows = ArrayOf(doc["rows"], dims.horizon, "rows");
  for (int h = 0; h < dims.horizon; ++h) {
    const Json& rh = ArrayOf(rows[h], dims.num_states, "rows[h]");
    for (int s = 0; s < dims.num_states; ++s) {
      const Json& rs = ArrayOf(rh[s], table.num_windows(), "rows[h][s]");
      for (std::int64_t w = 0; w < table.num_windows(); ++w) {
        const Json& row = ArrayOf(rs[w], dims.num_adversary_actions, "rows[h][s][w]");
        auto out = table.mutable_row(h, s, w);
        for (int b = 0; b < dims.num_adversary_actions; ++b) {
          out[b] = Number(row[b], "response entry");
        }
      }
    }
  }
  if (validate) table.Validate();
  return table;
}

Json CandidatesToJson(const CandidateSet& candidates) {
  return Json(candidates.rows());
}

CandidateSet CandidatesFromJson(const Json& rows) {
  if (!rows.is_array()) throw ConfigError("candidates must be an array of rows");
  std::vector<std::vector<double>> out;
  for (const Json& row : rows) {
    if (!row.is_array()) throw ConfigError("candidate row must be an array");
    std::vector<double> r;
    for (const Json& x : row) r.push_back(Number(x, "candidate entry"));
    out.push_back(std::move(r));
  }
  try {
    return CandidateSet(std::move(out));
  } catch (const Error& e) {
    throw ConfigError(std::string("candidates: ") + e.what());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ReadJsonFile(const std::filesystem::path& path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const Json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string FormatDouble(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string LearnerLogCsv(const LearnerLog& log, const RegretReport& report) {
  std::string out =
      "episode,policy_index,realized_return,optimistic_value,"
      "exact_value_vs_response,instantaneous_policy_regret\n";
  for (std::size_t t = 0; t < log.episodes.size(); ++t) {
    const EpisodeRecord& e = log.episodes[t];
    out += std::to_string(e.episode) + "," + std::to_string(e.policy_index) +
           "," + FormatDouble(e.realized_return) + "," +
           FormatDouble(e.optimistic_value) + "," +
           FormatDouble(t < report.learner_values.size()
                            ? report.learner_values[t] : 0.0) +
           "," +
           FormatDouble(t < report.instantaneous_policy_regret.size()
                            ? report.instantaneous_policy_regret[t] : 0.0) +
           "\n";
  }
  return out;
}

std::string EpochSummaryCsv(const LearnerLog& log) {
  std::string out =
      "epoch,T_k,policy_space_size,infrequent_size,max_optimistic_value,"
      "threshold,episodes_consumed\n";
  for (const EpochSummary& e : log.epochs) {
    out += std::to_string(e.epoch) + "," + std::to_string(e.exploration_length) +
           "," + std::to_string(e.policy_space_size) + "," +
           std::to_string(e.infrequent_size) + "," +
           FormatDouble(e.max_optimistic_value) + "," +
           FormatDouble(e.threshold) + "," +
           std::to_string(e.episodes_consumed) + "\n";
  }
  return out;
}

std::string ResultsCsv(const std::vector<ResultRow>& rows) {
  std::string out =
      "algorithm,T,seed,PR_T,external_R_T,best_fixed_value,learner_value_sum,"
      "wall_ms\n";
  for (const ResultRow& r : rows) {
    out += r.algorithm + "," + std::to_string(r.num_episodes) + "," +
           std::to_string(r.seed) + "," + FormatDouble(r.policy_regret) + "," +
           FormatDouble(r.external_regret) + "," +
           FormatDouble(r.best_fixed_value) + "," +
           FormatDouble(r.learner_value_sum) + "," + FormatDouble(r.wall_ms) +
           "\n";
  }
  return out;
}

}  // namespace polregret
