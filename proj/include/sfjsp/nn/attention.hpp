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

#ifndef SFJSP_NN_ATTENTION_HPP_
#define SFJSP_NN_ATTENTION_HPP_

#include <cmath>

#include "sfjsp/nn/layers.hpp"

namespace sfjsp::nn {

struct MHAConfig {
  int heads = 4;
  int dim = 32;
  double layer_norm_eps = 1e-5;

  int head_dim() const { return dim / heads; }
  void validate() const {
    require(heads >= 1, "mha config: heads must be >= 1");
    require(dim >= 1, "mha config: dim must be >= 1");
    require(dim % heads == 0, "mha config: heads must divide dim");
  }
};

/// softmax(Q K^T / sqrt(d_q)) row by row.
template <typename DQ, typename DK, typename Scalar = typename DQ::Scalar>
Mat<Scalar> attention_weights(const Eigen::MatrixBase<DQ>& q, const Eigen::MatrixBase<DK>& k) {
  require(q.cols() == k.cols(), "attention: query/key width mismatch");
  require(k.rows() >= 1, "attention: no keys");
  Mat<Scalar> logits = (q * k.transpose()) / std::sqrt(Scalar(q.cols()));
  softmax_rows(logits);
  return logits;
}

/// Att(Q, K, V) = softmax(Q K^T / sqrt(d_q)) V.
template <typename DQ, typename DK, typename DV, typename Scalar = typename DQ::Scalar>
Mat<Scalar> attention(const Eigen::MatrixBase<DQ>& q, const Eigen::MatrixBase<DK>& k,
                      const Eigen::MatrixBase<DV>& v) {
  require(k.rows() == v.rows(), "attention: key/value count mismatch");
  return attention_weights(q, k) * v;
}

/// Head projections are stored side by side: head i uses column block
/// [i * d/h, (i + 1) * d/h) of w_q, w_k and w_v (each d x d). w_o is d x d.
template <typename Scalar>
struct MHAParams {
  Mat<Scalar> w_q, w_k, w_v, w_o;

  static MHAParams zeros(int d) {
    return {Mat<Scalar>::Zero(d, d), Mat<Scalar>::Zero(d, d), Mat<Scalar>::Zero(d, d),
            Mat<Scalar>::Zero(d, d)};
  }
};

/// MHA(X, Y, Y) = concat(head_1 .. head_h) W_O,
/// head_i = Att(X W_i^Q, Y W_i^K, Y W_i^V).
template <typename DX, typename DY, typename Scalar = typename DX::Scalar>
Mat<Scalar> mha(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                const MHAParams<Scalar>& p, const MHAConfig& cfg) {
  cfg.validate();
  require(x.cols() == cfg.dim && y.cols() == cfg.dim, "mha: input width must equal dim");
  require(p.w_q.rows() == cfg.dim && p.w_q.cols() == cfg.dim, "mha: projection shape");
  const Mat<Scalar> q = x * p.w_q;
  const Mat<Scalar> k = y * p.w_k;
  const Mat<Scalar> v = y * p.w_v;
  const int dh = cfg.head_dim();
  Mat<Scalar> heads(x.rows(), cfg.dim);
  for (int h = 0; h < cfg.heads; ++h)
    heads.middleCols(h * dh, dh) =
        attention(q.middleCols(h * dh, dh), k.middleCols(h * dh, dh), v.middleCols(h * dh, dh));
  return heads * p.w_o;
}

/// Attention block: one ReLU hidden layer of width d in the feed-forward part.
template <typename Scalar>
struct MHABParams {
  MHAParams<Scalar> attn;
  Linear<Scalar> ff_hidden;
  Linear<Scalar> ff_out;
  LayerNormParams<Scalar> norm1;
  LayerNormParams<Scalar> norm2;

  static MHABParams zeros(int d) {
    return {MHAParams<Scalar>::zeros(d), Linear<Scalar>::zeros(d, d), Linear<Scalar>::zeros(d, d),
            LayerNormParams<Scalar>::identity(d), LayerNormParams<Scalar>::identity(d)};
  }
};

template <typename Derived, typename Scalar = typename Derived::Scalar>
Mat<Scalar> feed_forward(const Eigen::MatrixBase<Derived>& z, const MHABParams<Scalar>& p) {
  return apply(p.ff_out, relu(apply(p.ff_hidden, z)));
}

/// MHAB(X, Y) = LayerNorm(Z + FF(Z)),  Z = LayerNorm(X + MHA(X, Y, Y)).
template <typename DX, typename DY, typename Scalar = typename DX::Scalar>
Mat<Scalar> mhab(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                 const MHABParams<Scalar>& p, const MHAConfig& cfg) {
  const Mat<Scalar> z = layer_norm(x + mha(x, y, p.attn, cfg), p.norm1, cfg.layer_norm_eps);
  return layer_norm(z + feed_forward(z, p), p.norm2, cfg.layer_norm_eps);
}

}  // namespace sfjsp::nn

#endif  // SFJSP_NN_ATTENTION_HPP_
