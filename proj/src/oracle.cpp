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

#include "sfjsp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>

#include "sfjsp/parallel.hpp"

namespace sfjsp {

namespace {

std::string format_count(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, x < 1e18 ? "%.0f" : "%.3e", x);
  return buf;
}

// Compatible machines of each op, ascending.
std::vector<std::vector<int>> sorted_machines(const Instance& inst) {
  std::vector<std::vector<int>> out(inst.num_ops());
  for (int op = 0; op < inst.num_ops(); ++op) {
    for (const auto& alt : inst.alternatives(op)) out[op].push_back(alt.machine);
    std::sort(out[op].begin(), out[op].end());
  }
  return out;
}

double assignment_count(const std::vector<std::vector<int>>& machines) {
  double n = 1.0;
  for (const auto& m : machines) n *= static_cast<double>(m.size());
  return n;
}

// Mixed-radix decode, last op fastest, so index order is lexicographic.
void decode_assignment(std::uint64_t index, const std::vector<std::vector<int>>& machines,
                       std::vector<int>& assignment) {
  for (int op = static_cast<int>(machines.size()) - 1; op >= 0; --op) {
    const auto radix = machines[op].size();
    assignment[op] = machines[op][index % radix];
    index /= radix;
  }
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

// Visits all machine-order combinations for one assignment, machine 0
// outermost and each machine's permutations in lexicographic order.
template <class Visit>
void for_each_order(const Instance& inst, const std::vector<int>& assignment, Visit&& visit) {
  Schedule s;
  s.assignment = assignment;
  s.machine_order.assign(inst.num_machines(), {});
  for (int op = 0; op < inst.num_ops(); ++op) s.machine_order[assignment[op]].push_back(op);
  const int m = inst.num_machines();
  for (;;) {
    visit(s);
    int k = m - 1;
    while (k >= 0 && !std::next_permutation(s.machine_order[k].begin(), s.machine_order[k].end()))
      --k;  // next_permutation wrapped machine k back to ascending
    if (k < 0) return;
  }
}

struct Candidate {
  double objective = std::numeric_limits<double>::infinity();
  Schedule schedule;
  std::uint64_t feasible = 0;
};

template <class Score>
OracleResult minimize(const Instance& inst, double budget, int threads, Score&& score) {
  const auto machines = sorted_machines(inst);
  const double space = schedule_space_size(inst, budget);
  if (space > budget) throw BudgetExceededError(space, budget);
  const auto assignments = static_cast<std::uint64_t>(assignment_count(machines));

  std::vector<Candidate> per_assignment(assignments);
  parallel_for(static_cast<int>(assignments), threads, [&](int a) {
    std::vector<int> assignment(inst.num_ops());
    decode_assignment(static_cast<std::uint64_t>(a), machines, assignment);
    Candidate& best = per_assignment[a];
    for_each_order(inst, assignment, [&](const Schedule& s) {
      const std::optional<double> value = score(s);
      if (!value) return;
      ++best.feasible;
      if (*value < best.objective) {
        best.objective = *value;
        best.schedule = s;
      }
    });
  });

  OracleResult out;
  out.objective = std::numeric_limits<double>::infinity();
  for (auto& c : per_assignment) {
    out.feasible_schedules += c.feasible;
    if (c.feasible && c.objective < out.objective) {
      out.objective = c.objective;
      out.schedule = std::move(c.schedule);
    }
  }
  return out;
}

}  // namespace

BudgetExceededError::BudgetExceededError(double space_size, double budget)
    : std::runtime_error("schedule space of size " + format_count(space_size) +
                         " exceeds oracle budget " + format_count(budget)),
      space_size_(space_size) {}

double schedule_space_size(const Instance& inst, double cap) {
  const auto machines = sorted_machines(inst);
  const double assignments = assignment_count(machines);
  if (assignments > cap) return assignments;
  std::vector<int> assignment(inst.num_ops());
  std::vector<std::size_t> counts(inst.num_machines());
  double total = 0.0;
  for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(assignments); ++a) {
    decode_assignment(a, machines, assignment);
    std::fill(counts.begin(), counts.end(), 0);
    for (int m : assignment) ++counts[m];
    double orders = 1.0;
    for (auto c : counts) orders *= factorial(c);
    total += orders;
  }
  return total;
}

void for_each_feasible_schedule(const Instance& inst, double budget,
                                const std::function<void(const Schedule&)>& visit) {
  const auto machines = sorted_machines(inst);
  const double space = schedule_space_size(inst, budget);
  if (space > budget) throw BudgetExceededError(space, budget);
  const auto assignments = static_cast<std::uint64_t>(assignment_count(machines));
  std::vector<int> assignment(inst.num_ops());
  for (std::uint64_t a = 0; a < assignments; ++a) {
    decode_assignment(a, machines, assignment);
    for_each_order(inst, assignment, [&](const Schedule& s) {
      if (try_makespan(inst, s, inst.times())) visit(s);
    });
  }
}

OracleResult brute_force_det(const Instance& inst, double budget, int threads) {
  return minimize(inst, budget, threads,
                  [&](const Schedule& s) { return try_makespan(inst, s, inst.times()); });
}

OracleResult brute_force_stoch(const StochasticInstance& si, const std::vector<Scenario>& scenarios,
                               const ObjectiveSpec& spec, double budget, int threads) {
  spec.validate();
  if (scenarios.empty()) throw std::invalid_argument("brute_force_stoch: no scenarios");
  const Instance& inst = si.base();
  return minimize(inst, budget, threads, [&](const Schedule& s) -> std::optional<double> {
    std::vector<double> makespans;
    makespans.reserve(scenarios.size());
    for (const auto& sc : scenarios) {
      const auto c = try_makespan(inst, s, sc.times);
      if (!c) return std::nullopt;
      makespans.push_back(*c);
    }
    return evaluate_objective(makespans, spec);
  });
}

}  // namespace sfjsp
