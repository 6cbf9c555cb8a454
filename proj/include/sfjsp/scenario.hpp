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

#ifndef SFJSP_SCENARIO_HPP_
#define SFJSP_SCENARIO_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sfjsp/rng.hpp"
#include "sfjsp/stochastic.hpp"

namespace sfjsp {

/// One realization of every processing time, indexed by pair id.
struct Scenario {
  std::vector<double> times;
  bool operator==(const Scenario&) const = default;
};

struct ScenarioConfig {
  int n_scn = 100;
  int n_rew = 1000;
  int n_eval = 1000;
  std::uint64_t seed = 0;
  void validate() const;
};

struct ObjectiveSpec {
  enum class Kind { Mean, VaR };
  Kind kind = Kind::VaR;
  double alpha = 0.95;

  static ObjectiveSpec mean() { return {Kind::Mean, 1.0}; }
  static ObjectiveSpec var(double alpha) { return {Kind::VaR, alpha}; }
  void validate() const;
  std::string label() const;
};

/// Child-stream layout under Stream(seed): 0 = state set, 1 = reward set,
/// 2 = evaluation set; scenario l of a set uses that set's child(l).
enum class ScenarioStream : std::uint64_t { State = 0, Reward = 1, Eval = 2 };

Scenario sample_scenario(const StochasticInstance& si, Stream& rng);

struct ScenarioSets {
  std::vector<Scenario> state;
  std::vector<Scenario> reward;
  std::vector<Scenario> eval;
};

ScenarioSets sample_sets(const StochasticInstance& si, const ScenarioConfig& cfg);

/// Samples `count` scenarios from one child stream of Stream(seed).
std::vector<Scenario> sample_set(const StochasticInstance& si, std::uint64_t seed,
                                 ScenarioStream which, int count);

/// The ceil(alpha n)-th smallest value (1-based), i.e. the smallest sample c
/// with empirical P(X <= c) >= alpha. alpha = 1 gives the maximum.
double quantile_var(std::span<const double> values, double alpha);

double evaluate_objective(std::span<const double> values, const ObjectiveSpec& spec);

/// Audit dump: {"format_version":1,"state":[[...]],"reward":[[...]],"eval":[[...]]}.
std::string scenario_sets_to_json(const ScenarioSets& sets);
ScenarioSets scenario_sets_from_json(const std::string& text);

}  // namespace sfjsp

#endif  // SFJSP_SCENARIO_HPP_
