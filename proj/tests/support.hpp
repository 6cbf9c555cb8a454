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

// Helpers shared by the unit and acceptance tests. The reference routines
// here are deliberately written without the library's scheduling code.

#ifndef SFJSP_TESTS_SUPPORT_HPP_
#define SFJSP_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sfjsp/instance.hpp"
#include "sfjsp/rng.hpp"
#include "sfjsp/schedule.hpp"

namespace sfjsp::testing {

/// Random instance with `jobs` jobs of 1..max_ops ops, each op compatible
/// with a random nonempty machine subset, integer times in [1, max_time].
inline Instance random_instance(Stream& rng, int jobs, int max_ops, int machines, int max_time,
                                const std::string& name = "tiny") {
  std::vector<Job> js(jobs);
  for (auto& job : js) {
    const int n_ops = static_cast<int>(rng.uniform_int(1, max_ops));
    for (int i = 0; i < n_ops; ++i) {
      Operation op;
      while (op.alternatives.empty()) {
        for (int m = 0; m < machines; ++m)
          if (rng.uniform() < 0.6)
            op.alternatives.push_back({m, static_cast<double>(rng.uniform_int(1, max_time))});
      }
      job.operations.push_back(op);
    }
  }
  return Instance(name, machines, js);
}

/// Longest-path completion times by repeated relaxation; nullopt on a cycle.
inline std::optional<double> reference_makespan(const Instance& inst, const Schedule& s,
                                                const std::vector<double>& times) {
  const int n = inst.num_ops();
  std::vector<std::vector<int>> preds(n);
  for (int op = 0; op < n; ++op)
    if (inst.index_in_job(op) > 0) preds[op].push_back(op - 1);
  for (const auto& order : s.machine_order)
    for (std::size_t i = 1; i < order.size(); ++i) preds[order[i]].push_back(order[i - 1]);
  std::vector<double> done(n, -1.0);
  for (int round = 0; round < n; ++round) {
    bool progressed = false;
    for (int op = 0; op < n; ++op) {
      if (done[op] >= 0.0) continue;
      double start = 0.0;
      bool ready = true;
      for (int p : preds[op]) {
        if (done[p] < 0.0) {
          ready = false;
          break;
        }
        start = std::max(start, done[p]);
      }
      if (!ready) continue;
      done[op] = start + times[inst.pair_id(op, s.assignment[op])];
      progressed = true;
    }
    if (!progressed) break;
  }
  double makespan = 0.0;
  for (double c : done) {
    if (c < 0.0) return std::nullopt;
    makespan = std::max(makespan, c);
  }
  return makespan;
}

inline double reference_quantile(std::vector<double> v, double alpha) {
  std::sort(v.begin(), v.end());
  // smallest sample c with #{x <= c} / n >= alpha
  for (std::size_t i = 0; i < v.size(); ++i)
    if (static_cast<double>(i + 1) >= alpha * static_cast<double>(v.size()) - 1e-9) {
      std::size_t j = i;
      while (j + 1 < v.size() && v[j + 1] == v[i]) ++j;
      return v[j];
    }
  return v.back();
}

inline double reference_mean(const std::vector<double>& v) {
  long double s = 0.0L;
  for (double x : v) s += x;
  return static_cast<double>(s / v.size());
}

using ScheduleKey = std::pair<std::vector<int>, std::vector<std::vector<int>>>;

/// Every (assignment, machine order) reachable by a complete sequence of
/// constructive actions, found by depth-first search.
inline std::set<ScheduleKey> enumerate_by_actions(const Instance& inst) {
  std::set<ScheduleKey> out;
  std::vector<int> next(inst.num_jobs(), 0);
  ScheduleKey cur{std::vector<int>(inst.num_ops(), -1),
                  std::vector<std::vector<int>>(inst.num_machines())};
  auto dfs = [&](auto&& self, int placed) -> void {
    if (placed == inst.num_ops()) {
      out.insert(cur);
      return;
    }
    for (int j = 0; j < inst.num_jobs(); ++j) {
      if (next[j] == inst.job_size(j)) continue;
      const int op = inst.op_id(j, next[j]);
      for (const auto& alt : inst.jobs()[j].operations[next[j]].alternatives) {
        cur.first[op] = alt.machine;
        cur.second[alt.machine].push_back(op);
        ++next[j];
        self(self, placed + 1);
        --next[j];
        cur.second[alt.machine].pop_back();
        cur.first[op] = -1;
      }
    }
  };
  dfs(dfs, 0);
  return out;
}

inline Schedule key_schedule(const ScheduleKey& k) { return Schedule{k.first, k.second, {}}; }

}  // namespace sfjsp::testing

#endif  // SFJSP_TESTS_SUPPORT_HPP_
