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

#ifndef SFJSP_ENVIRONMENT_HPP_
#define SFJSP_ENVIRONMENT_HPP_

#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sfjsp/instance.hpp"
#include "sfjsp/scenario.hpp"
#include "sfjsp/schedule.hpp"
#include "sfjsp/stochastic.hpp"

namespace sfjsp {

class IllegalActionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Timing of the partial schedule under one processing-time table.
///
/// For a scheduled op, lb == completion. For an unscheduled op,
/// lb = lb(job predecessor) + min compatible time, with 0 for a first op.
struct ScheduleView {
  std::span<const double> times;     // by pair id
  std::vector<double> start;         // by op; meaningful once scheduled
  std::vector<double> completion;    // by op; meaningful once scheduled
  std::vector<double> lb;            // by op
  std::vector<double> machine_ready;
  std::vector<double> machine_busy;  // processing time accumulated per machine
  std::vector<double> job_ready;     // completion of the job's last scheduled op
  double max_lb = 0.0;

  double min_time(const Instance& inst, int op) const;
  double mean_time(const Instance& inst, int op) const;
};

/// MDP state: the deterministic view plus one view per state scenario and
/// per reward scenario. All views share the assignment and machine orders.
class SchedulingState {
 public:
  const Instance& instance() const { return *instance_; }
  const ScheduleView& det() const { return det_; }
  const std::vector<ScheduleView>& scenarios() const { return scn_; }
  const std::vector<ScheduleView>& rewards() const { return rew_; }
  const ScenarioSets& scenario_sets() const { return *sets_; }
  std::shared_ptr<const ScenarioSets> shared_scenario_sets() const { return sets_; }

  int step() const { return step_; }
  bool done() const { return step_ == instance_->num_ops(); }
  bool is_scheduled(int op) const { return assignment_[op] >= 0; }
  int assigned_machine(int op) const { return assignment_[op]; }
  /// Index in its job of the first unscheduled op; job_size when finished.
  int next_index(int job) const { return next_index_[job]; }
  /// First unscheduled op of the job, or -1.
  int next_op(int job) const;
  const std::vector<std::vector<int>>& machine_orders() const { return machine_order_; }
  const std::vector<Action>& actions() const { return actions_; }

  /// Reward-scenario makespan lower bounds C_t (one per reward view).
  std::vector<double> reward_bounds() const;

  /// O_u(t): every op except those already followed by another op on their machine.
  bool is_relevant_op(int op) const { return !has_machine_successor_[op]; }
  std::vector<int> relevant_ops() const;
  /// M_u(t): machines compatible with at least one unscheduled op.
  std::vector<int> relevant_machines() const;

  Schedule schedule() const;

 private:
  friend SchedulingState reset(const StochasticInstance&, std::shared_ptr<const ScenarioSets>);
  friend bool apply_action(SchedulingState&, const Action&);

  std::shared_ptr<const Instance> instance_;
  std::shared_ptr<const ScenarioSets> sets_;
  ScheduleView det_;
  std::vector<ScheduleView> scn_;
  std::vector<ScheduleView> rew_;
  int step_ = 0;
  std::vector<int> assignment_;
  std::vector<int> next_index_;
  std::vector<std::vector<int>> machine_order_;
  std::vector<char> has_machine_successor_;
  std::vector<Action> actions_;
};

/// Samples the scenario sets from cfg and builds the t = 0 state.
SchedulingState reset(const StochasticInstance& si, const ScenarioConfig& cfg);
/// Builds the t = 0 state over pre-sampled sets (eval set unused).
SchedulingState reset(const StochasticInstance& si, std::shared_ptr<const ScenarioSets> sets);

/// Compatible (first unscheduled op, machine) pairs, sorted by (op, machine).
std::vector<Action> eligible_actions(const SchedulingState& state);

/// Schedules `a` in every view; start = max(job ready, machine ready).
/// Returns true when the episode is complete. Throws IllegalActionError.
bool apply_action(SchedulingState& state, const Action& a);

/// Copying form: returns (next state, done).
std::pair<SchedulingState, bool> transition(const SchedulingState& state, const Action& a);

/// r_t = f(C_t) - f(C_{t+1}) over reward-scenario lower bounds.
double reward(const SchedulingState& prev, const SchedulingState& next, const ObjectiveSpec& spec);
double reward(std::span<const double> prev_bounds, std::span<const double> next_bounds,
              const ObjectiveSpec& spec);

}  // namespace sfjsp

#endif  // SFJSP_ENVIRONMENT_HPP_
