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

#include "sfjsp/environment.hpp"

#include <algorithm>
#include <limits>

namespace sfjsp {

double ScheduleView::min_time(const Instance& inst, int op) const {
  double best = std::numeric_limits<double>::infinity();
  for (int p = inst.pair_begin(op); p < inst.pair_end(op); ++p) best = std::min(best, times[p]);
  return best;
}

double ScheduleView::mean_time(const Instance& inst, int op) const {
  double sum = 0.0;
  for (int p = inst.pair_begin(op); p < inst.pair_end(op); ++p) sum += times[p];
  return sum / (inst.pair_end(op) - inst.pair_begin(op));
}

namespace {

ScheduleView make_view(const Instance& inst, std::span<const double> times) {
  ScheduleView v;
  v.times = times;
  v.start.assign(inst.num_ops(), 0.0);
  v.completion.assign(inst.num_ops(), 0.0);
  v.lb.assign(inst.num_ops(), 0.0);
  v.machine_ready.assign(inst.num_machines(), 0.0);
  v.machine_busy.assign(inst.num_machines(), 0.0);
  v.job_ready.assign(inst.num_jobs(), 0.0);
  for (int j = 0; j < inst.num_jobs(); ++j) {
    double acc = 0.0;
    for (int i = 0; i < inst.job_size(j); ++i) {
      const int op = inst.op_id(j, i);
      acc += v.min_time(inst, op);
      v.lb[op] = acc;
    }
    v.max_lb = std::max(v.max_lb, acc);
  }
  return v;
}

void schedule_in_view(ScheduleView& v, const Instance& inst, int op, int machine, int pair) {
  const int job = inst.job_of(op);
  const double start = std::max(v.job_ready[job], v.machine_ready[machine]);
  const double end = start + v.times[pair];
  v.start[op] = start;
  v.completion[op] = end;
  v.lb[op] = end;
  v.machine_ready[machine] = end;
  v.machine_busy[machine] += v.times[pair];
  v.job_ready[job] = end;
  double acc = end;
  const int last = inst.first_op(job) + inst.job_size(job) - 1;
  for (int o = op + 1; o <= last; ++o) {
    acc += v.min_time(inst, o);
    v.lb[o] = acc;
  }
  // Only this job's bounds moved, and none of them decreased.
  v.max_lb = std::max(v.max_lb, v.lb[last]);
}

}  // namespace

int SchedulingState::next_op(int job) const {
  if (next_index_[job] >= instance_->job_size(job)) return -1;
  return instance_->op_id(job, next_index_[job]);
}

std::vector<double> SchedulingState::reward_bounds() const {
  std::vector<double> c;
  c.reserve(rew_.size());
  for (const auto& v : rew_) c.push_back(v.max_lb);
  return c;
}

std::vector<int> SchedulingState::relevant_ops() const {
  std::vector<int> ops;
  for (int op = 0; op < instance_->num_ops(); ++op)
    if (is_relevant_op(op)) ops.push_back(op);
  return ops;
}

std::vector<int> SchedulingState::relevant_machines() const {
  const Instance& inst = *instance_;
  std::vector<char> used(inst.num_machines(), 0);
  for (int j = 0; j < inst.num_jobs(); ++j)
    for (int i = next_index_[j]; i < inst.job_size(j); ++i) {
      const int op = inst.op_id(j, i);
      for (int p = inst.pair_begin(op); p < inst.pair_end(op); ++p) used[inst.pair_machine(p)] = 1;
    }
  std::vector<int> machines;
  for (int m = 0; m < inst.num_machines(); ++m)
    if (used[m]) machines.push_back(m);
  return machines;
}

Schedule SchedulingState::schedule() const {
  Schedule s;
  s.assignment = assignment_;
  s.machine_order = machine_order_;
  s.provenance = actions_;
  return s;
}

SchedulingState reset(const StochasticInstance& si, std::shared_ptr<const ScenarioSets> sets) {
  if (!sets) throw std::invalid_argument("reset: missing scenario sets");
  SchedulingState s;
  s.instance_ = std::make_shared<const Instance>(si.base());
  s.sets_ = std::move(sets);
  const Instance& inst = *s.instance_;
  auto check = [&](const Scenario& sc) {
    if (static_cast<int>(sc.times.size()) != inst.num_pairs())
      throw std::invalid_argument("reset: scenario size does not match instance");
  };
  s.det_ = make_view(inst, inst.times());
  s.scn_.reserve(s.sets_->state.size());
  for (const auto& sc : s.sets_->state) {
    check(sc);
    s.scn_.push_back(make_view(inst, sc.times));
  }
  s.rew_.reserve(s.sets_->reward.size());
  for (const auto& sc : s.sets_->reward) {
    check(sc);
    s.rew_.push_back(make_view(inst, sc.times));
  }
  s.assignment_.assign(inst.num_ops(), -1);
  s.next_index_.assign(inst.num_jobs(), 0);
  s.machine_order_.assign(inst.num_machines(), {});
  s.has_machine_successor_.assign(inst.num_ops(), 0);
  s.actions_.reserve(inst.num_ops());
  return s;
}

SchedulingState reset(const StochasticInstance& si, const ScenarioConfig& cfg) {
  return reset(si, std::make_shared<const ScenarioSets>(sample_sets(si, cfg)));
}

std::vector<Action> eligible_actions(const SchedulingState& state) {
  const Instance& inst = state.instance();
  std::vector<Action> actions;
  for (int j = 0; j < inst.num_jobs(); ++j) {
    const int op = state.next_op(j);
    if (op < 0) continue;
    const auto begin = actions.size();
    for (const auto& alt : inst.alternatives(op)) actions.push_back({op, alt.machine});
    std::sort(actions.begin() + static_cast<std::ptrdiff_t>(begin), actions.end());
  }
  return actions;
}

bool apply_action(SchedulingState& state, const Action& a) {
  const Instance& inst = *state.instance_;
  if (state.done()) throw IllegalActionError("apply_action: episode already finished");
  if (a.op < 0 || a.op >= inst.num_ops())
    throw IllegalActionError("apply_action: unknown operation " + std::to_string(a.op));
  const int job = inst.job_of(a.op);
  if (state.next_op(job) != a.op)
    throw IllegalActionError("apply_action: operation " + std::to_string(a.op) +
                             " is not the first unscheduled operation of job " +
                             std::to_string(job));
  const int pair = inst.pair_id(a.op, a.machine);
  if (pair < 0)
    throw IllegalActionError("apply_action: machine " + std::to_string(a.machine) +
                             " is not compatible with operation " + std::to_string(a.op));

  schedule_in_view(state.det_, inst, a.op, a.machine, pair);
  for (auto& v : state.scn_) schedule_in_view(v, inst, a.op, a.machine, pair);
  for (auto& v : state.rew_) schedule_in_view(v, inst, a.op, a.machine, pair);

  auto& order = state.machine_order_[a.machine];
  if (!order.empty()) state.has_machine_successor_[order.back()] = 1;
  order.push_back(a.op);
  state.assignment_[a.op] = a.machine;
  ++state.next_index_[job];
  state.actions_.push_back(a);
  ++state.step_;
  return state.done();
}

std::pair<SchedulingState, bool> transition(const SchedulingState& state, const Action& a) {
  SchedulingState next = state;
  const bool done = apply_action(next, a);
  return {std::move(next), done};
}

double reward(std::span<const double> prev_bounds, std::span<const double> next_bounds,
              const ObjectiveSpec& spec) {
  return evaluate_objective(prev_bounds, spec) - evaluate_objective(next_bounds, spec);
}

double reward(const SchedulingState& prev, const SchedulingState& next, const ObjectiveSpec& spec) {
  return reward(prev.reward_bounds(), next.reward_bounds(), spec);
}

}  // namespace sfjsp
