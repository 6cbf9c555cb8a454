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

#ifndef SFJSP_NN_ACTOR_CRITIC_HPP_
#define SFJSP_NN_ACTOR_CRITIC_HPP_

#include <algorithm>
#include <vector>

#include "sfjsp/nn/spm.hpp"

namespace sfjsp::nn {

template <typename Scalar>
struct Embeddings {
  Mat<Scalar> ops;       // one row per relevant op
  Mat<Scalar> machines;  // one row per relevant machine
};

/// Maps entity inputs to embeddings. Stands in for a graph encoder such as
/// stacked operation/machine attention blocks.
template <typename Scalar>
class BaseEncoder {
 public:
  virtual ~BaseEncoder() = default;
  virtual Embeddings<Scalar> encode(const Mat<Scalar>& op_inputs,
                                    const Mat<Scalar>& machine_inputs) const = 0;
  virtual int embed_dim() const = 0;
};

template <typename Scalar>
class LinearEncoder final : public BaseEncoder<Scalar> {
 public:
  LinearEncoder(const Linear<Scalar>& op, const Linear<Scalar>& machine) : op_(op), machine_(machine) {
    require(op.out() == machine.out(), "linear encoder: embedding widths differ");
  }
  Embeddings<Scalar> encode(const Mat<Scalar>& op_inputs,
                            const Mat<Scalar>& machine_inputs) const override {
    return {apply(op_, op_inputs), apply(machine_, machine_inputs)};
  }
  int embed_dim() const override { return op_.out(); }

 private:
  const Linear<Scalar>& op_;
  const Linear<Scalar>& machine_;
};

/// Actor: [h_O | h_M | h_G | h_OM] -> hidden (ReLU) -> score.
/// Critic: h_G -> hidden (ReLU) -> value.
template <typename Scalar>
struct ActorCriticParams {
  Linear<Scalar> actor_hidden;
  Linear<Scalar> actor_out;
  Linear<Scalar> critic_hidden;
  Linear<Scalar> critic_out;
};

template <typename Scalar>
struct ActorCriticOutput {
  std::vector<Action> actions;
  std::vector<double> scores;
  std::vector<double> probabilities;
  Scalar value = Scalar(0);
};

template <typename Scalar>
ActorCriticOutput<Scalar> actor_critic_forward(const PolicyInputs<Scalar>& in,
                                               const BaseEncoder<Scalar>& encoder,
                                               const ActorCriticParams<Scalar>& ac) {
  require(!in.actions.empty(), "actor_critic_forward: no eligible actions");
  require(in.op_inputs.rows() == static_cast<Eigen::Index>(in.ops.size()) &&
              in.machine_inputs.rows() == static_cast<Eigen::Index>(in.machines.size()) &&
              in.pair_inputs.rows() == static_cast<Eigen::Index>(in.actions.size()),
          "actor_critic_forward: input rows do not match index sets");
  const Embeddings<Scalar> emb = encoder.encode(in.op_inputs, in.machine_inputs);
  const Eigen::Index e = encoder.embed_dim();
  Mat<Scalar> graph(1, 2 * e);
  graph.leftCols(e) = emb.ops.colwise().mean();
  graph.rightCols(e) = emb.machines.colwise().mean();

  const Eigen::Index pair_dim = in.pair_inputs.cols();
  const auto n = static_cast<Eigen::Index>(in.actions.size());
  Mat<Scalar> actor_in(n, 4 * e + pair_dim);
  for (Eigen::Index a = 0; a < n; ++a) {
    const Action& act = in.actions[a];
    const auto op_row = std::lower_bound(in.ops.begin(), in.ops.end(), act.op) - in.ops.begin();
    const auto m_row =
        std::lower_bound(in.machines.begin(), in.machines.end(), act.machine) - in.machines.begin();
    require(op_row < static_cast<Eigen::Index>(in.ops.size()) && in.ops[op_row] == act.op,
            "actor_critic_forward: action op is not a relevant op");
    require(m_row < static_cast<Eigen::Index>(in.machines.size()) &&
                in.machines[m_row] == act.machine,
            "actor_critic_forward: action machine is not a relevant machine");
    actor_in.row(a) << emb.ops.row(op_row), emb.machines.row(m_row), graph, in.pair_inputs.row(a);
  }
  const Mat<Scalar> scores = apply(ac.actor_out, relu(apply(ac.actor_hidden, actor_in)));
  const Mat<Scalar> value = apply(ac.critic_out, relu(apply(ac.critic_hidden, graph)));

  ActorCriticOutput<Scalar> out;
  out.actions = in.actions;
  out.scores.resize(n);
  for (Eigen::Index a = 0; a < n; ++a) out.scores[a] = static_cast<double>(scores(a, 0));
  Mat<Scalar> probs = scores.transpose();
  softmax_rows(probs);
  out.probabilities.resize(n);
  for (Eigen::Index a = 0; a < n; ++a) out.probabilities[a] = static_cast<double>(probs(0, a));
  out.value = value(0, 0);
  return out;
}

}  // namespace sfjsp::nn

#endif  // SFJSP_NN_ACTOR_CRITIC_HPP_
