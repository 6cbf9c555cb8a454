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

#ifndef SFJSP_NN_SPM_HPP_
#define SFJSP_NN_SPM_HPP_

#include <vector>

#include "sfjsp/features.hpp"
#include "sfjsp/nn/attention.hpp"

namespace sfjsp::nn {

/// Scenario processing module: input projection, m inducing points and two
/// attention blocks.
template <typename Scalar>
struct SPMParams {
  Linear<Scalar> input;      // raw feature dim -> d
  Mat<Scalar> inducing;      // m x d
  MHABParams<Scalar> induce;     // MHAB(I, H)
  MHABParams<Scalar> broadcast;  // MHAB(H, J)

  static SPMParams zeros(int raw_dim, int d, int m) {
    return {Linear<Scalar>::zeros(raw_dim, d), Mat<Scalar>::Zero(m, d), MHABParams<Scalar>::zeros(d),
            MHABParams<Scalar>::zeros(d)};
  }
};

/// SPM(H) = mean over rows of MHAB(H, MHAB(I, H)), H = input(H_raw).
/// One row of `raw` per scenario; cost is linear in the row count.
template <typename Derived, typename Scalar = typename Derived::Scalar>
RowVec<Scalar> spm(const Eigen::MatrixBase<Derived>& raw, const SPMParams<Scalar>& p,
                   const MHAConfig& cfg) {
  require(raw.rows() >= 1, "spm: need at least one scenario row");
  require(p.inducing.rows() >= 1, "spm: need at least one inducing point");
  const Mat<Scalar> h = apply(p.input, raw);
  const Mat<Scalar> j = mhab(p.inducing, h, p.induce, cfg);
  const Mat<Scalar> h_prime = mhab(h, j, p.broadcast, cfg);
  return h_prime.colwise().mean();
}

/// Per-entity policy inputs: each row is [deterministic features | SPM
/// embedding of that entity's scenario feature rows].
template <typename Scalar>
struct PolicyInputs {
  std::vector<int> ops;
  std::vector<int> machines;
  std::vector<Action> actions;
  Mat<Scalar> op_inputs;
  Mat<Scalar> machine_inputs;
  Mat<Scalar> pair_inputs;
};

namespace detail {

template <typename Scalar, typename Select>
Mat<Scalar> concat_with_spm(const Eigen::MatrixXd& det, const std::vector<FeatureSet>& scen,
                            Select&& select, const SPMParams<Scalar>& params,
                            const MHAConfig& cfg) {
  const Eigen::Index rows = det.rows();
  const Eigen::Index raw = det.cols();
  Mat<Scalar> out(rows, raw + cfg.dim);
  Mat<Scalar> stack(static_cast<Eigen::Index>(scen.size()), raw);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (std::size_t l = 0; l < scen.size(); ++l)
      stack.row(static_cast<Eigen::Index>(l)) = select(scen[l]).row(r).template cast<Scalar>();
    out.row(r).head(raw) = det.row(r).template cast<Scalar>();
    out.row(r).tail(cfg.dim) = spm(stack, params, cfg);
  }
  return out;
}

}  // namespace detail

/// Applies SPM_O, SPM_M and SPM_OM to the scenario features of every
/// relevant op, relevant machine and eligible action.
template <typename Scalar>
PolicyInputs<Scalar> build_policy_inputs(const FeatureSet& det, const std::vector<FeatureSet>& scen,
                                         const SPMParams<Scalar>& spm_op,
                                         const SPMParams<Scalar>& spm_machine,
                                         const SPMParams<Scalar>& spm_pair, const MHAConfig& cfg) {
  require(!scen.empty(), "build_policy_inputs: need at least one scenario feature set");
  for (const auto& s : scen) {
    require(s.ops == det.ops && s.machines == det.machines && s.actions == det.actions,
            "build_policy_inputs: scenario index sets differ from deterministic ones");
    require(s.op_features.cols() == det.op_features.cols() &&
                s.machine_features.cols() == det.machine_features.cols() &&
                s.pair_features.cols() == det.pair_features.cols(),
            "build_policy_inputs: feature width mismatch");
  }
  PolicyInputs<Scalar> in;
  in.ops = det.ops;
  in.machines = det.machines;
  in.actions = det.actions;
  in.op_inputs = detail::concat_with_spm<Scalar>(
      det.op_features, scen, [](const FeatureSet& f) -> const Eigen::MatrixXd& { return f.op_features; },
      spm_op, cfg);
  in.machine_inputs = detail::concat_with_spm<Scalar>(
      det.machine_features, scen,
      [](const FeatureSet& f) -> const Eigen::MatrixXd& { return f.machine_features; }, spm_machine,
      cfg);
  in.pair_inputs = detail::concat_with_spm<Scalar>(
      det.pair_features, scen,
      [](const FeatureSet& f) -> const Eigen::MatrixXd& { return f.pair_features; }, spm_pair, cfg);
  return in;
}

}  // namespace sfjsp::nn

#endif  // SFJSP_NN_SPM_HPP_
