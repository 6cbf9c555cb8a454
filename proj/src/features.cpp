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

#include "sfjsp/features.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sfjsp {
namespace {

struct IndexSets {
  std::vector<int> ops;
  std::vector<int> machines;
  std::vector<Action> actions;
};

IndexSets index_sets(const SchedulingState& state) {
  return {state.relevant_ops(), state.relevant_machines(), eligible_actions(state)};
}

FeatureSet features_over(const SchedulingState& state, const ScheduleView& v,
                         const IndexSets& ids) {
  const Instance& inst = state.instance();
  FeatureSet f;
  f.ops = ids.ops;
  f.machines = ids.machines;
  f.actions = ids.actions;
  const double max_lb = v.max_lb;

  f.op_features.resize(static_cast<Eigen::Index>(ids.ops.size()), kOpFeatureDim);
  for (std::size_t r = 0; r < ids.ops.size(); ++r) {
    const int op = ids.ops[r];
    const int job = inst.job_of(op);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int p = inst.pair_begin(op); p < inst.pair_end(op); ++p) {
      lo = std::min(lo, v.times[p]);
      hi = std::max(hi, v.times[p]);
    }
    int remaining = 0;
    double work = 0.0;
    const int from = std::max(inst.index_in_job(op), state.next_index(job));
    for (int i = from; i < inst.job_size(job); ++i) {
      ++remaining;
      work += v.mean_time(inst, inst.op_id(job, i));
    }
    auto row = f.op_features.row(static_cast<Eigen::Index>(r));
    row << (state.is_scheduled(op) ? 1.0 : 0.0), v.lb[op], v.lb[op] / max_lb, lo,
        v.mean_time(inst, op), hi, static_cast<double>(remaining), work, v.job_ready[job],
        static_cast<double>(inst.index_in_job(op) + 1) / inst.job_size(job);
  }

  double total_busy = 0.0;
  for (double b : v.machine_busy) total_busy += b;
  f.machine_features.resize(static_cast<Eigen::Index>(ids.machines.size()), kMachineFeatureDim);
  for (std::size_t r = 0; r < ids.machines.size(); ++r) {
    const int m = ids.machines[r];
    int count = 0;
    double lo = 0.0;
    double sum = 0.0;
    for (const auto& a : ids.actions) {
      if (a.machine != m) continue;
      const double t = v.times[inst.pair_id(a.op, m)];
      lo = (count == 0) ? t : std::min(lo, t);
      sum += t;
      ++count;
    }
    const double ready = v.machine_ready[m];
    const double busy = v.machine_busy[m];
    auto row = f.machine_features.row(static_cast<Eigen::Index>(r));
    row << ready, ready / max_lb, ready > 0.0 ? busy / ready : 0.0, static_cast<double>(count),
        lo, count > 0 ? sum / count : 0.0, total_busy > 0.0 ? busy / total_busy : 0.0,
        ready - busy;
  }

  f.pair_features.resize(static_cast<Eigen::Index>(ids.actions.size()), kPairFeatureDim);
  for (std::size_t r = 0; r < ids.actions.size(); ++r) {
    const auto& a = ids.actions[r];
    const int job = inst.job_of(a.op);
    const double p = v.times[inst.pair_id(a.op, a.machine)];
    const double job_ready = v.job_ready[job];
    const double machine_ready = v.machine_ready[a.machine];
    const double completion = std::max(job_ready, machine_ready) + p;
    auto row = f.pair_features.row(static_cast<Eigen::Index>(r));
    row << p, p / v.min_time(inst, a.op), p / v.mean_time(inst, a.op), completion,
        std::max(0.0, job_ready - machine_ready), completion - v.lb[a.op],
        machine_ready - job_ready, completion / max_lb;
  }
  return f;
}

}  // namespace

FeatureSet view_features(const SchedulingState& state, const ScheduleView& view) {
  if (state.done()) throw std::invalid_argument("view_features: episode finished");
  return features_over(state, view, index_sets(state));
}

StateFeatures extract_features(const SchedulingState& state) {
  if (state.done()) throw std::invalid_argument("extract_features: episode finished");
  const IndexSets ids = index_sets(state);
  StateFeatures out;
  out.det = features_over(state, state.det(), ids);
  out.scenarios.reserve(state.scenarios().size());
  for (const auto& v : state.scenarios()) out.scenarios.push_back(features_over(state, v, ids));
  return out;
}

}  // namespace sfjsp
