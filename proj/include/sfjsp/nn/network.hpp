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

#ifndef SFJSP_NN_NETWORK_HPP_
#define SFJSP_NN_NETWORK_HPP_

#include <cmath>
#include <cstdint>
#include <string>

#include "sfjsp/features.hpp"
#include "sfjsp/nn/actor_critic.hpp"
#include "sfjsp/rng.hpp"

namespace sfjsp::nn {

struct NetworkConfig {
  MHAConfig attention;  // d = 32, h = 4 by default
  int inducing_points = 16;
  int op_dim = kOpFeatureDim;
  int machine_dim = kMachineFeatureDim;
  int pair_dim = kPairFeatureDim;
  int embed_dim = 32;
  int actor_hidden = 128;
  int critic_hidden = 128;

  void validate() const {
    attention.validate();
    require(inducing_points >= 1, "network config: need at least one inducing point");
    require(op_dim >= 1 && machine_dim >= 1 && pair_dim >= 1, "network config: feature dims");
    require(embed_dim >= 1 && actor_hidden >= 1 && critic_hidden >= 1, "network config: widths");
  }
  int actor_input_dim() const { return 4 * embed_dim + pair_dim + attention.dim; }
  bool operator==(const NetworkConfig& o) const {
    return attention.heads == o.attention.heads && attention.dim == o.attention.dim &&
           attention.layer_norm_eps == o.attention.layer_norm_eps &&
           inducing_points == o.inducing_points && op_dim == o.op_dim &&
           machine_dim == o.machine_dim && pair_dim == o.pair_dim && embed_dim == o.embed_dim &&
           actor_hidden == o.actor_hidden && critic_hidden == o.critic_hidden;
  }
};

template <typename Scalar>
struct NetworkParams {
  SPMParams<Scalar> spm_op, spm_machine, spm_pair;
  Linear<Scalar> encoder_op, encoder_machine;
  ActorCriticParams<Scalar> ac;

  /// Correctly shaped, zero weights, identity layer norms.
  static NetworkParams zeros(const NetworkConfig& cfg) {
    cfg.validate();
    const int d = cfg.attention.dim;
    const int m = cfg.inducing_points;
    const int e = cfg.embed_dim;
    NetworkParams p{SPMParams<Scalar>::zeros(cfg.op_dim, d, m),
                    SPMParams<Scalar>::zeros(cfg.machine_dim, d, m),
                    SPMParams<Scalar>::zeros(cfg.pair_dim, d, m),
                    Linear<Scalar>::zeros(cfg.op_dim + d, e),
                    Linear<Scalar>::zeros(cfg.machine_dim + d, e),
                    {Linear<Scalar>::zeros(cfg.actor_input_dim(), cfg.actor_hidden),
                     Linear<Scalar>::zeros(cfg.actor_hidden, 1),
                     Linear<Scalar>::zeros(2 * e, cfg.critic_hidden),
                     Linear<Scalar>::zeros(cfg.critic_hidden, 1)}};
    return p;
  }
};

enum class TensorRole { Weight, Bias, Gain, NormBias, Inducing };

namespace detail {

template <typename Scalar, typename Fn>
void visit_linear(const std::string& prefix, Linear<Scalar>& l, Fn& fn) {
  fn(prefix + ".weight", l.weight, TensorRole::Weight, static_cast<int>(l.weight.rows()));
  fn(prefix + ".bias", l.bias, TensorRole::Bias, static_cast<int>(l.weight.rows()));
}

template <typename Scalar, typename Fn>
void visit_mhab(const std::string& prefix, MHABParams<Scalar>& b, Fn& fn) {
  const int d = static_cast<int>(b.attn.w_q.rows());
  fn(prefix + ".attn.w_q", b.attn.w_q, TensorRole::Weight, d);
  fn(prefix + ".attn.w_k", b.attn.w_k, TensorRole::Weight, d);
  fn(prefix + ".attn.w_v", b.attn.w_v, TensorRole::Weight, d);
  fn(prefix + ".attn.w_o", b.attn.w_o, TensorRole::Weight, d);
  visit_linear(prefix + ".ff_hidden", b.ff_hidden, fn);
  visit_linear(prefix + ".ff_out", b.ff_out, fn);
  fn(prefix + ".norm1.gain", b.norm1.gain, TensorRole::Gain, d);
  fn(prefix + ".norm1.bias", b.norm1.bias, TensorRole::NormBias, d);
  fn(prefix + ".norm2.gain", b.norm2.gain, TensorRole::Gain, d);
  fn(prefix + ".norm2.bias", b.norm2.bias, TensorRole::NormBias, d);
}

template <typename Scalar, typename Fn>
void visit_spm(const std::string& prefix, SPMParams<Scalar>& s, Fn& fn) {
  visit_linear(prefix + ".input", s.input, fn);
  fn(prefix + ".inducing", s.inducing, TensorRole::Inducing, static_cast<int>(s.inducing.cols()));
  visit_mhab(prefix + ".induce", s.induce, fn);
  visit_mhab(prefix + ".broadcast", s.broadcast, fn);
}

}  // namespace detail

/// Calls fn(name, tensor, role, fan_in) for every tensor in a fixed order.
template <typename Scalar, typename Fn>
void for_each_tensor(NetworkParams<Scalar>& p, Fn&& fn) {
  detail::visit_spm("spm_op", p.spm_op, fn);
  detail::visit_spm("spm_machine", p.spm_machine, fn);
  detail::visit_spm("spm_pair", p.spm_pair, fn);
  detail::visit_linear("encoder.op", p.encoder_op, fn);
  detail::visit_linear("encoder.machine", p.encoder_machine, fn);
  detail::visit_linear("actor.hidden", p.ac.actor_hidden, fn);
  detail::visit_linear("actor.out", p.ac.actor_out, fn);
  detail::visit_linear("critic.hidden", p.ac.critic_hidden, fn);
  detail::visit_linear("critic.out", p.ac.critic_out, fn);
}

/// Weights, biases and inducing points ~ U(-1/sqrt(fan_in), 1/sqrt(fan_in));
/// layer-norm gains 1 and biases 0. Tensor i draws from Stream(seed).child(i).
template <typename Scalar>
NetworkParams<Scalar> init_params(const NetworkConfig& cfg, std::uint64_t seed) {
  NetworkParams<Scalar> p = NetworkParams<Scalar>::zeros(cfg);
  const Stream root(seed);
  std::uint64_t index = 0;
  for_each_tensor(p, [&](const std::string&, Mat<Scalar>& t, TensorRole role, int fan_in) {
    Stream rng = root.child(index++);
    switch (role) {
      case TensorRole::Gain: t.setOnes(); return;
      case TensorRole::NormBias: t.setZero(); return;
      default: break;
    }
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    for (Eigen::Index r = 0; r < t.rows(); ++r)
      for (Eigen::Index c = 0; c < t.cols(); ++c) t(r, c) = Scalar(rng.uniform(-bound, bound));
  });
  return p;
}

/// Full forward pass from environment features to action scores and value.
template <typename Scalar>
ActorCriticOutput<Scalar> network_forward(const StateFeatures& features, const NetworkParams<Scalar>& p,
                                          const NetworkConfig& cfg) {
  const PolicyInputs<Scalar> in = build_policy_inputs(features.det, features.scenarios, p.spm_op,
                                                      p.spm_machine, p.spm_pair, cfg.attention);
  const LinearEncoder<Scalar> encoder(p.encoder_op, p.encoder_machine);
  return actor_critic_forward(in, encoder, p.ac);
}

}  // namespace sfjsp::nn

#endif  // SFJSP_NN_NETWORK_HPP_
