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

#ifndef SFJSP_INSTANCE_HPP_
#define SFJSP_INSTANCE_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfjsp {

/// Raised by the text and JSON readers. The message names the offending line
/// (text format) or path (JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Alternative {
  int machine = 0;  // 0-based
  double time = 0.0;
  bool operator==(const Alternative&) const = default;
};

struct Operation {
  std::vector<Alternative> alternatives;
  bool operator==(const Operation&) const = default;
};

struct Job {
  std::vector<Operation> operations;
  bool operator==(const Job&) const = default;
};

/// A flexible job-shop instance.
///
/// Operations get flat ids in job-major order; every compatible
/// (operation, machine) pair gets a flat pair id in the same order, so a
/// processing-time table for the instance or for any sampled scenario is a
/// plain vector indexed by pair id.
class Instance {
 public:
  Instance() = default;
  /// Validates: at least one job, each job nonempty, each operation with a
  /// nonempty set of distinct machines in [0, num_machines), all times > 0.
  Instance(std::string name, int num_machines, std::vector<Job> jobs);

  const std::string& name() const { return name_; }
  int num_machines() const { return num_machines_; }
  int num_jobs() const { return static_cast<int>(jobs_.size()); }
  int num_ops() const { return static_cast<int>(op_job_.size()); }
  int num_pairs() const { return static_cast<int>(pair_machine_.size()); }
  const std::vector<Job>& jobs() const { return jobs_; }

  int job_size(int job) const { return static_cast<int>(jobs_[job].operations.size()); }
  int first_op(int job) const { return job_first_op_[job]; }
  int op_id(int job, int index) const { return job_first_op_[job] + index; }
  int job_of(int op) const { return op_job_[op]; }
  int index_in_job(int op) const { return op_index_[op]; }
  bool is_last_in_job(int op) const { return op_index_[op] + 1 == job_size(op_job_[op]); }

  std::span<const Alternative> alternatives(int op) const {
    return jobs_[op_job_[op]].operations[op_index_[op]].alternatives;
  }
  int pair_begin(int op) const { return op_pair_begin_[op]; }
  int pair_end(int op) const { return op_pair_begin_[op + 1]; }
  /// Pair id of (op, machine), or -1 when the machine is incompatible.
  int pair_id(int op, int machine) const;
  int pair_op(int pair) const { return pair_op_[pair]; }
  int pair_machine(int pair) const { return pair_machine_[pair]; }

  /// Deterministic processing times indexed by pair id.
  const std::vector<double>& times() const { return times_; }

  bool operator==(const Instance& other) const {
    return name_ == other.name_ && num_machines_ == other.num_machines_ &&
           jobs_ == other.jobs_;
  }

 private:
  std::string name_;
  int num_machines_ = 0;
  std::vector<Job> jobs_;
  std::vector<int> job_first_op_;
  std::vector<int> op_job_;
  std::vector<int> op_index_;
  std::vector<int> op_pair_begin_;
  std::vector<int> pair_op_;
  std::vector<int> pair_machine_;
  std::vector<double> times_;
};

/// Reads the standard FJSP benchmark layout: a header `n m [avg]` followed by
/// one line per job `k  c1 m t m t ...  c2 m t ...`, machines 1-based.
Instance parse_standard_fjsp(const std::string& text, std::string name = "");

/// Writes the standard layout; the header carries the average number of
/// compatible machines per operation.
std::string serialize_instance(const Instance& inst);

Instance read_instance_file(const std::string& path);

/// Instance-class label used for grouping: the name with a trailing
/// `_<digits>` suffix removed.
std::string instance_class(const std::string& name);

}  // namespace sfjsp

#endif  // SFJSP_INSTANCE_HPP_
