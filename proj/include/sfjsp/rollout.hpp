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

#ifndef SFJSP_ROLLOUT_HPP_
#define SFJSP_ROLLOUT_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "sfjsp/environment.hpp"
#include "sfjsp/policy.hpp"

namespace sfjsp {

struct RolloutMode {
  enum class Kind { Greedy, Sample };
  Kind kind = Kind::Greedy;
  std::uint64_t seed = 0;  // action-sampling stream, Sample only

  static RolloutMode greedy() { return {Kind::Greedy, 0}; }
  static RolloutMode sample(std::uint64_t seed) { return {Kind::Sample, seed}; }
};

struct Transition {
  int step = 0;
  double det_max_lb = 0.0;  // before the action
  double objective = 0.0;   // f(C_t) before the action
  Action action;
  double reward = 0.0;
};

struct RolloutResult {
  Schedule schedule;
  std::vector<Transition> trajectory;
  double initial_objective = 0.0;  // f(C_0)
  double final_objective = 0.0;    // f(C_|O|), reward-scenario makespans
  double det_makespan = 0.0;
};

using StateObserver = std::function<void(const SchedulingState&)>;

/// Constructs one schedule: score, select, apply to every view, reward.
/// The observer (if any) sees the state before each action and once after
/// the last.
RolloutResult rollout(const StochasticInstance& si, std::shared_ptr<const ScenarioSets> sets,
                      const Policy& policy, RolloutMode mode,
                      const ObjectiveSpec& objective = ObjectiveSpec::var(0.95),
                      const StateObserver& observer = {});

RolloutResult rollout(const StochasticInstance& si, const ScenarioConfig& cfg,
                      const Policy& policy, RolloutMode mode,
                      const ObjectiveSpec& objective = ObjectiveSpec::var(0.95),
                      const StateObserver& observer = {});

struct InferenceConfig {
  RolloutMode::Kind mode = RolloutMode::Kind::Greedy;
  int k = 100;
  ObjectiveSpec objective = ObjectiveSpec::var(0.95);
  std::uint64_t seed = 0;
  int threads = 1;
  void validate() const;
};

struct InferenceResult {
  Schedule best;
  double objective = 0.0;
  int best_index = 0;
  std::vector<double> all_objectives;  // one per rollout, in sample order
};

/// Objective of a finished schedule over a scenario list.
double schedule_objective(const Instance& inst, const Schedule& sched,
                          const std::vector<Scenario>& scenarios, const ObjectiveSpec& spec);

/// Greedy: one rollout. Sample: k rollouts, sample i drawing actions from
/// Stream(seed).child(i); every candidate is scored on the shared reward
/// set and the first minimizer wins.
InferenceResult infer(const StochasticInstance& si, const ScenarioConfig& cfg,
                      const Policy& policy, const InferenceConfig& icfg);
InferenceResult infer(const StochasticInstance& si, std::shared_ptr<const ScenarioSets> sets,
                      const Policy& policy, const InferenceConfig& icfg);

}  // namespace sfjsp

#endif  // SFJSP_ROLLOUT_HPP_
