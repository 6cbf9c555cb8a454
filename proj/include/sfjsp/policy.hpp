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

#ifndef SFJSP_POLICY_HPP_
#define SFJSP_POLICY_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sfjsp/environment.hpp"
#include "sfjsp/rng.hpp"

namespace sfjsp {

/// One score per eligible action, optionally with a probability vector.
/// Scores may be -inf to exclude an action.
struct PolicyScores {
  std::vector<Action> actions;
  std::vector<double> scores;
  std::optional<std::vector<double>> probabilities;
};

/// Numerically stable softmax; -inf entries get probability 0.
std::vector<double> softmax(std::span<const double> scores);

/// Fills `probabilities` from the scores when absent.
PolicyScores with_probabilities(PolicyScores s);

/// Argmax; ties go to the earliest action in the list.
Action greedy_select(const PolicyScores& s);

/// Categorical draw from the probability vector. Throws std::invalid_argument
/// when the vector is missing, has the wrong size, negative entries, or does
/// not sum to 1 within 1e-9.
Action sample_select(const PolicyScores& s, Stream& rng);

/// Scoring interface. Implementations must be stateless with respect to
/// `score` so one instance can serve parallel rollouts.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string name() const = 0;
  virtual PolicyScores score(const SchedulingState& state) const = 0;
};

enum class DispatchRule { FIFO, MOR, MWKR, SPT };

std::string_view rule_name(DispatchRule r);

/// Priority dispatching rules on deterministic (median) times.
///
/// Each unfinished job offers its next op on the machine with the earliest
/// resulting completion (ties: lowest machine id); the job's priority is
///   FIFO: -(job ready time)
///   MOR:  ops left in the job
///   MWKR: summed mean compatible time of the ops left
///   SPT:  -(processing time on that machine)
/// Other machines of the same op score -inf.
PolicyScores pdr_score(DispatchRule rule, const SchedulingState& state);

class PdrPolicy final : public Policy {
 public:
  explicit PdrPolicy(DispatchRule rule) : rule_(rule) {}
  std::string name() const override { return std::string(rule_name(rule_)); }
  PolicyScores score(const SchedulingState& state) const override {
    return pdr_score(rule_, state);
  }

 private:
  DispatchRule rule_;
};

/// All eligible actions score 0 (uniform under sampling).
class UniformPolicy final : public Policy {
 public:
  std::string name() const override { return "random"; }
  PolicyScores score(const SchedulingState& state) const override;
};

/// "fifo", "mor", "mwkr", "spt", "random". The attention policy is built
/// separately because it needs a weight file (see spm_policy.hpp).
std::unique_ptr<Policy> make_builtin_policy(std::string_view name);

}  // namespace sfjsp

#endif  // SFJSP_POLICY_HPP_
