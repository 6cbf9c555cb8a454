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

#include "sfjsp/schedule.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace sfjsp {

Schedule schedule_from_actions(const Instance& inst, std::span<const Action> actions) {
  Schedule s;
  s.assignment.assign(inst.num_ops(), -1);
  s.machine_order.resize(inst.num_machines());
  for (const auto& a : actions) {
    if (a.op < 0 || a.op >= inst.num_ops() || a.machine < 0 || a.machine >= inst.num_machines())
      throw InfeasibleScheduleError("action refers to an unknown operation or machine");
    if (s.assignment[a.op] != -1)
      throw InfeasibleScheduleError("operation " + std::to_string(a.op) + " scheduled twice");
    s.assignment[a.op] = a.machine;
    s.machine_order[a.machine].push_back(a.op);
  }
  s.provenance.assign(actions.begin(), actions.end());
  return s;
}

void validate_schedule(const Instance& inst, const Schedule& sched) {
  if (static_cast<int>(sched.assignment.size()) != inst.num_ops())
    throw InfeasibleScheduleError("schedule assigns " + std::to_string(sched.assignment.size()) +
                                  " operations, instance has " + std::to_string(inst.num_ops()));
  if (static_cast<int>(sched.machine_order.size()) != inst.num_machines())
    throw InfeasibleScheduleError("schedule machine count does not match instance");
  for (int op = 0; op < inst.num_ops(); ++op)
    if (sched.assignment[op] < 0 || inst.pair_id(op, sched.assignment[op]) < 0)
      throw InfeasibleScheduleError("operation " + std::to_string(op) +
                                    " assigned to an incompatible machine");
  std::vector<int> seen(inst.num_ops(), 0);
  for (int m = 0; m < inst.num_machines(); ++m) {
    for (int op : sched.machine_order[m]) {
      if (op < 0 || op >= inst.num_ops())
        throw InfeasibleScheduleError("machine order lists unknown operation");
      if (sched.assignment[op] != m)
        throw InfeasibleScheduleError("operation " + std::to_string(op) +
                                      " appears on a machine it is not assigned to");
      if (seen[op]++)
        throw InfeasibleScheduleError("operation " + std::to_string(op) + " listed twice");
    }
  }
  for (int op = 0; op < inst.num_ops(); ++op)
    if (!seen[op])
      throw InfeasibleScheduleError("operation " + std::to_string(op) + " missing from machine order");
}

namespace {

// Kahn's algorithm over the union of job chains and machine chains. Each op
// has at most one job predecessor and one machine predecessor.
template <class OnOp>
bool longest_path(const Instance& inst, const Schedule& sched, std::span<const double> times,
                  OnOp&& on_op) {
  const int n = inst.num_ops();
  std::vector<int> machine_next(n, -1);
  std::vector<int> indegree(n, 0);
  for (const auto& order : sched.machine_order)
    for (std::size_t i = 1; i < order.size(); ++i) {
      machine_next[order[i - 1]] = order[i];
      ++indegree[order[i]];
    }
  for (int op = 0; op < n; ++op)
    if (inst.index_in_job(op) > 0) ++indegree[op];

  std::vector<double> ready(n, 0.0);
  std::vector<int> stack;
  stack.reserve(n);
  for (int op = n - 1; op >= 0; --op)
    if (indegree[op] == 0) stack.push_back(op);
  int processed = 0;
  while (!stack.empty()) {
    const int op = stack.back();
    stack.pop_back();
    ++processed;
    const int pair = inst.pair_id(op, sched.assignment[op]);
    const double end = ready[op] + times[pair];
    on_op(op, ready[op], end);
    auto release = [&](int next) {
      ready[next] = std::max(ready[next], end);
      if (--indegree[next] == 0) stack.push_back(next);
    };
    if (!inst.is_last_in_job(op)) release(op + 1);
    if (machine_next[op] >= 0) release(machine_next[op]);
  }
  return processed == n;
}

}  // namespace

std::optional<SimulationResult> try_simulate(const Instance& inst, const Schedule& sched,
                                             std::span<const double> times) {
  SimulationResult r;
  r.start.assign(inst.num_ops(), 0.0);
  r.completion.assign(inst.num_ops(), 0.0);
  const bool ok = longest_path(inst, sched, times, [&](int op, double start, double end) {
    r.start[op] = start;
    r.completion[op] = end;
    r.makespan = std::max(r.makespan, end);
  });
  if (!ok) return std::nullopt;
  return r;
}

std::optional<double> try_makespan(const Instance& inst, const Schedule& sched,
                                   std::span<const double> times) {
  double makespan = 0.0;
  const bool ok = longest_path(inst, sched, times, [&](int, double, double end) {
    makespan = std::max(makespan, end);
  });
  if (!ok) return std::nullopt;
  return makespan;
}

SimulationResult simulate_schedule(const Instance& inst, const Schedule& sched,
                                   std::span<const double> times) {
  validate_schedule(inst, sched);
  if (static_cast<int>(times.size()) != inst.num_pairs())
    throw std::invalid_argument("simulate_schedule: time table size does not match instance");
  auto r = try_simulate(inst, sched, times);
  if (!r)
    throw InfeasibleScheduleError(
        "schedule is infeasible: job precedence and machine order form a cycle");
  return *std::move(r);
}

std::string schedule_to_json(const Instance& inst, const Schedule& sched) {
  using nlohmann::json;
  json assignment = json::array();
  for (int op = 0; op < static_cast<int>(sched.assignment.size()); ++op)
    assignment.push_back({{"job", inst.job_of(op)},
                          {"op", inst.index_in_job(op)},
                          {"machine", sched.assignment[op]}});
  json orders = json::array();
  for (const auto& order : sched.machine_order) {
    json row = json::array();
    for (int op : order) row.push_back({inst.job_of(op), inst.index_in_job(op)});
    orders.push_back(row);
  }
  json provenance = json::array();
  for (const auto& a : sched.provenance)
    provenance.push_back({inst.job_of(a.op), inst.index_in_job(a.op), a.machine});
  json doc = {{"format_version", 1},
              {"instance", inst.name()},
              {"assignment", assignment},
              {"machine_order", orders},
              {"provenance", provenance}};
  return doc.dump(1) + "\n";
}

Schedule schedule_from_json(const Instance& inst, const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid schedule JSON: ") + e.what());
  }
  auto op_of = [&](int job, int index) {
    if (job < 0 || job >= inst.num_jobs() || index < 0 || index >= inst.job_size(job))
      throw ParseError("schedule refers to unknown operation (" + std::to_string(job) + "," +
                       std::to_string(index) + ")");
    return inst.op_id(job, index);
  };
  try {
    if (doc.at("format_version").get<int>() != 1)
      throw ParseError("unsupported schedule format_version");
    Schedule s;
    s.assignment.assign(inst.num_ops(), -1);
    for (const auto& a : doc.at("assignment"))
      s.assignment[op_of(a.at("job").get<int>(), a.at("op").get<int>())] = a.at("machine").get<int>();
    for (const auto& row : doc.at("machine_order")) {
      std::vector<int> order;
      for (const auto& ji : row) order.push_back(op_of(ji.at(0).get<int>(), ji.at(1).get<int>()));
      s.machine_order.push_back(std::move(order));
    }
    if (doc.contains("provenance"))
      for (const auto& p : doc.at("provenance"))
        s.provenance.push_back({op_of(p.at(0).get<int>(), p.at(1).get<int>()), p.at(2).get<int>()});
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed schedule JSON: ") + e.what());
  }
}

std::string schedule_to_gantt_csv(const Instance& inst, const Schedule& sched,
                                  std::span<const double> times) {
  const auto sim = simulate_schedule(inst, sched, times);
  std::ostringstream out;
  out << "job,op,machine,start,end\n";
  char buf[64];
  for (int m = 0; m < inst.num_machines(); ++m)
    for (int op : sched.machine_order[m]) {
      out << inst.job_of(op) << ',' << inst.index_in_job(op) << ',' << m << ',';
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", sim.start[op], sim.completion[op]);
      out << buf << '\n';
    }
  return out.str();
}

}  // namespace sfjsp
