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

#ifndef SFJSP_FEATURES_HPP_
#define SFJSP_FEATURES_HPP_

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "sfjsp/environment.hpp"

namespace sfjsp {

inline constexpr int kOpFeatureDim = 10;
inline constexpr int kMachineFeatureDim = 8;
inline constexpr int kPairFeatureDim = 8;

/// Columns of the default feature set that carry time units; every other
/// column is dimensionless.
inline constexpr std::array<int, 6> kOpTimeColumns = {1, 3, 4, 5, 7, 8};
inline constexpr std::array<int, 4> kMachineTimeColumns = {0, 4, 5, 7};
inline constexpr std::array<int, 5> kPairTimeColumns = {0, 3, 4, 5, 6};

/// Features of one view. Rows of each matrix follow the id lists.
///
/// Operation columns: scheduled flag, lb, lb / max lb, min / mean / max
/// compatible time, unscheduled ops left in the job from this op, their
/// summed mean time, job ready time, (index + 1) / job length.
///
/// Machine columns: ready time, ready / max lb, busy / ready, eligible
/// actions on the machine, min and mean eligible time, share of total busy
/// time, idle time (ready - busy).
///
/// Pair columns: p, p / min p of the op, p / mean p of the op, completion
/// estimate max(job ready, machine ready) + p, machine idle induced
/// max(0, job ready - machine ready), completion estimate - lb, machine
/// ready - job ready, completion estimate / max lb.
struct FeatureSet {
  std::vector<int> ops;
  std::vector<int> machines;
  std::vector<Action> actions;
  Eigen::MatrixXd op_features;
  Eigen::MatrixXd machine_features;
  Eigen::MatrixXd pair_features;
};

struct StateFeatures {
  FeatureSet det;
  std::vector<FeatureSet> scenarios;  // one per state scenario, same id lists
};

FeatureSet view_features(const SchedulingState& state, const ScheduleView& view);

/// Deterministic features plus one FeatureSet per state-scenario view, all
/// over O_u(t), M_u(t) and A(t). Requires an unfinished episode.
StateFeatures extract_features(const SchedulingState& state);

}  // namespace sfjsp

#endif  // SFJSP_FEATURES_HPP_
