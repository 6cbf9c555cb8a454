// Copyright 2026 The sfjsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sfjsp/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace sfjsp {

void ScenarioConfig::validate() const {
  if (n_scn < 1 || n_rew < 1 || n_eval < 1)
    throw std::invalid_argument("scenario config: n_scn, n_rew and n_eval must be >= 1");
}

void ObjectiveSpec::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("objective: alpha must lie in (0, 1]");
}

std::string ObjectiveSpec::label() const {
  if (kind == Kind::Mean) return "mean";
  char buf[32];
  std::snprintf(buf, sizeof buf, "var%g", alpha);
  return buf;
}

Scenario sample_scenario(const StochasticInstance& si, Stream& rng) {
  Scenario s;
  s.times.reserve(si.dists().size());
  for (const auto& d : si.dists()) s.times.push_back(d.sample(rng));
  return s;
}

std::vector<Scenario> sample_set(const StochasticInstance& si, std::uint64_t seed,
                                 ScenarioStream which, int count) {
  const Stream set_stream = Stream(seed).child(static_cast<std::uint64_t>(which));
  std::vector<Scenario> out;
  out.reserve(count);
  for (int l = 0; l < count; ++l) {
    Stream rng = set_stream.child(static_cast<std::uint64_t>(l));
    out.push_back(sample_scenario(si, rng));
  }
  return out;
}

ScenarioSets sample_sets(const StochasticInstance& si, const ScenarioConfig& cfg) {
  cfg.validate();
  return {sample_set(si, cfg.seed, ScenarioStream::State, cfg.n_scn),
          sample_set(si, cfg.seed, ScenarioStream::Reward, cfg.n_rew),
          sample_set(si, cfg.seed, ScenarioStream::Eval, cfg.n_eval)};
}

double quantile_var(std::span<const double> values, double alpha) {
  if (values.empty()) throw std::invalid_argument("quantile_var: empty value list");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("quantile_var: alpha must lie in (0, 1]");
  const auto n = static_cast<long>(values.size());
  long k = static_cast<long>(std::ceil(alpha * static_cast<double>(n) - 1e-9));
  k = std::clamp(k, 1L, n);
  std::vector<double> buf(values.begin(), values.end());
  std::nth_element(buf.begin(), buf.begin() + (k - 1), buf.end());
  return buf[k - 1];
}

double evaluate_objective(std::span<const double> values, const ObjectiveSpec& spec) {
  if (values.empty()) throw std::invalid_argument("evaluate_objective: empty value list");
  if (spec.kind == ObjectiveSpec::Kind::VaR) return quantile_var(values, spec.alpha);
  // Sorted accumulation makes the mean independent of input order.
  std::vector<double> buf(values.begin(), values.end());
  std::sort(buf.begin(), buf.end());
  return std::accumulate(buf.begin(), buf.end(), 0.0) / static_cast<double>(buf.size());
}

std::string scenario_sets_to_json(const ScenarioSets& sets) {
  auto dump = [](const std::vector<Scenario>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : v) arr.push_back(s.times);
    return arr;
  };
  nlohmann::json doc = {{"format_version", 1},
                        {"state", dump(sets.state)},
                        {"reward", dump(sets.reward)},
                        {"eval", dump(sets.eval)}};
  return doc.dump() + "\n";
}

ScenarioSets scenario_sets_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (doc.at("format_version").get<int>() != 1)
    throw std::invalid_argument("scenario sets: unsupported format_version");
  auto load = [&](const char* key) {
    std::vector<Scenario> out;
    for (const auto& row : doc.at(key)) out.push_back({row.get<std::vector<double>>()});
    return out;
  };
  return {load("state"), load("reward"), load("eval")};
}

}  // namespace sfjsp
