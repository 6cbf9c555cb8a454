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

#ifndef SFJSP_SCHEDULE_HPP_
#define SFJSP_SCHEDULE_HPP_

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfjsp/instance.hpp"

namespace sfjsp {

/// Assign operation `op` (flat id) to `machine`.
struct Action {
  int op = 0;
  int machine = 0;
  auto operator<=>(const Action&) const = default;
};

/// Machine assignment plus per-machine processing order.
struct Schedule {
  std::vector<int> assignment;                  // op -> machine
  std::vector<std::vector<int>> machine_order;  // machine -> ops in processing order
  std::vector<Action> provenance;               // constructing actions, if any

  bool operator==(const Schedule&) const = default;
};

class InfeasibleScheduleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimulationResult {
  double makespan = 0.0;
  std::vector<double> start;       // per op
  std::vector<double> completion;  // per op
};

/// Builds assignment and machine orders from a full action sequence.
Schedule schedule_from_actions(const Instance& inst, std::span<const Action> actions);

/// Structural checks: every op assigned once to a compatible machine and
/// listed exactly once, on that machine. Throws InfeasibleScheduleError.
void validate_schedule(const Instance& inst, const Schedule& sched);

/// Semi-active timing: start(op) = max(completion of job predecessor,
/// completion of machine predecessor). `times` is indexed by pair id.
/// Throws InfeasibleScheduleError if job precedence plus machine order
/// contains a cycle.
SimulationResult simulate_schedule(const Instance& inst, const Schedule& sched,
                                   std::span<const double> times);

/// Same as simulate_schedule but returns nullopt on a cycle (structure is
/// assumed valid).
std::optional<SimulationResult> try_simulate(const Instance& inst, const Schedule& sched,
                                             std::span<const double> times);

/// Makespan only, without per-op vectors; nullopt on a cycle.
std::optional<double> try_makespan(const Instance& inst, const Schedule& sched,
                                   std::span<const double> times);

/// {"format_version":1,"instance":str,
///  "assignment":[{"job":j,"op":i,"machine":k}],   (0-based)
///  "machine_order":[[[j,i],...],...], "provenance":[[j,i,k],...]}
std::string schedule_to_json(const Instance& inst, const Schedule& sched);
Schedule schedule_from_json(const Instance& inst, const std::string& text);

/// Gantt rows `job,op,machine,start,end` for the given time table.
std::string schedule_to_gantt_csv(const Instance& inst, const Schedule& sched,
                                  std::span<const double> times);

}  // namespace sfjsp

#endif  // SFJSP_SCHEDULE_HPP_
