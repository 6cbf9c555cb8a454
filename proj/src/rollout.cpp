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

#include "sfjsp/rollout.hpp"

#include <stdexcept>

#include "sfjsp/parallel.hpp"

namespace sfjsp {

RolloutResult rollout(const StochasticInstance& si, std::shared_ptr<const ScenarioSets> sets,
                      const Policy& policy, RolloutMode mode, const ObjectiveSpec& objective,
                      const StateObserver& observer) {
  objective.validate();
  SchedulingState state = reset(si, std::move(sets));
  Stream rng(mode.seed);
  RolloutResult out;
  out.trajectory.reserve(state.instance().num_ops());

  std::vector<double> bounds = state.reward_bounds();
  double f_prev = evaluate_objective(bounds, objective);
  out.initial_objective = f_prev;
  while (!state.done()) {
    if (observer) observer(state);
    PolicyScores scores = policy.score(state);
    const Action a = (mode.kind == RolloutMode::Kind::Greedy)
                         ? greedy_select(scores)
                         : sample_select(with_probabilities(std::move(scores)), rng);
    Transition tr;
    tr.step = state.step();
    tr.det_max_lb = state.det().max_lb;
    tr.objective = f_prev;
    tr.action = a;
    apply_action(state, a);
    bounds = state.reward_bounds();
    const double f_next = evaluate_objective(bounds, objective);
    tr.reward = f_prev - f_next;
    f_prev = f_next;
    out.trajectory.push_back(tr);
  }
  if (observer) observer(state);
  out.final_objective = f_prev;
  out.det_makespan = state.det().max_lb;
  out.schedule = state.schedule();
  return out;
}

RolloutResult rollout(const StochasticInstance& si, const ScenarioConfig& cfg,
                      const Policy& policy, RolloutMode mode, const ObjectiveSpec& objective,
                      const StateObserver& observer) {
  return rollout(si, std::make_shared<const ScenarioSets>(sample_sets(si, cfg)), policy, mode,
                 objective, observer);
}

void InferenceConfig::validate() const {
  if (k < 1) throw std::invalid_argument("inference: k must be >= 1");
  objective.validate();
}

double schedule_objective(const Instance& inst, const Schedule& sched,
                          const std::vector<Scenario>& scenarios, const ObjectiveSpec& spec) {
  validate_schedule(inst, sched);
  std::vector<double> makespans;
  makespans.reserve(scenarios.size());
  for (const auto& sc : scenarios) makespans.push_back(simulate_schedule(inst, sched, sc.times).makespan);
  return evaluate_objective(makespans, spec);
}

InferenceResult infer(const StochasticInstance& si, std::shared_ptr<const ScenarioSets> sets,
                      const Policy& policy, const InferenceConfig& icfg) {
  icfg.validate();
  const bool greedy = icfg.mode == RolloutMode::Kind::Greedy;
  const int runs = greedy ? 1 : icfg.k;
  const Stream root(icfg.seed);
  std::vector<Schedule> schedules(runs);
  std::vector<double> objectives(runs);
  parallel_for(runs, icfg.threads, [&](int i) {
    const RolloutMode mode =
        greedy ? RolloutMode::greedy()
               : RolloutMode::sample(root.child(static_cast<std::uint64_t>(i)).key());
    auto r = rollout(si, sets, policy, mode, icfg.objective);
    objectives[i] = schedule_objective(si.base(), r.schedule, sets->reward, icfg.objective);
    schedules[i] = std::move(r.schedule);
  });
  InferenceResult out;
  for (int i = 1; i < runs; ++i)
    if (objectives[i] < objectives[out.best_index]) out.best_index = i;
  out.objective = objectives[out.best_index];
  out.best = std::move(schedules[out.best_index]);
  out.all_objectives = std::move(objectives);
  return out;
}

InferenceResult infer(const StochasticInstance& si, const ScenarioConfig& cfg,
                      const Policy& policy, const InferenceConfig& icfg) {
  return infer(si, std::make_shared<const ScenarioSets>(sample_sets(si, cfg)), policy, icfg);
}

}  // namespace sfjsp
