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

#ifndef SFJSP_ORACLE_HPP_
#define SFJSP_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sfjsp/scenario.hpp"
#include "sfjsp/schedule.hpp"

namespace sfjsp {

inline constexpr double kDefaultOracleBudget = 1e6;

class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(double space_size, double budget);
  double space_size() const { return space_size_; }

 private:
  double space_size_;
};

/// Raw size of the enumeration space: sum over machine assignments of the
/// product of per-machine factorials (before the cycle filter). When the
/// assignment count alone exceeds `cap`, returns that count as a lower bound.
double schedule_space_size(const Instance& inst, double cap = kDefaultOracleBudget);

/// Visits every feasible (acyclic) schedule exactly once in lexicographic
/// order of (assignment, machine orders). Throws BudgetExceededError first
/// if the raw space exceeds `budget`.
void for_each_feasible_schedule(const Instance& inst, double budget,
                                const std::function<void(const Schedule&)>& visit);

struct OracleResult {
  Schedule schedule;
  double objective = 0.0;
  std::uint64_t feasible_schedules = 0;
};

/// Minimum deterministic makespan; ties go to the lexicographically first
/// schedule. Work is split across `threads` by assignment.
OracleResult brute_force_det(const Instance& inst, double budget = kDefaultOracleBudget,
                             int threads = 1);

/// One shared schedule minimizing the objective over the given scenarios.
OracleResult brute_force_stoch(const StochasticInstance& si, const std::vector<Scenario>& scenarios,
                               const ObjectiveSpec& spec, double budget = kDefaultOracleBudget,
                               int threads = 1);

}  // namespace sfjsp

#endif  // SFJSP_ORACLE_HPP_
