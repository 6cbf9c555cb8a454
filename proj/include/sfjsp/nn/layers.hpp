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

#ifndef SFJSP_NN_LAYERS_HPP_
#define SFJSP_NN_LAYERS_HPP_

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sfjsp::nn {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

inline void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

/// y = x W + b, with W: in x out and b: 1 x out.
template <typename Scalar>
struct Linear {
  Mat<Scalar> weight;
  Mat<Scalar> bias;

  static Linear zeros(int in, int out) {
    return {Mat<Scalar>::Zero(in, out), Mat<Scalar>::Zero(1, out)};
  }
  int in() const { return static_cast<int>(weight.rows()); }
  int out() const { return static_cast<int>(weight.cols()); }
};

template <typename Derived, typename Scalar = typename Derived::Scalar>
Mat<Scalar> apply(const Linear<Scalar>& layer, const Eigen::MatrixBase<Derived>& x) {
  require(x.cols() == layer.weight.rows(), "linear: input width mismatch");
  Mat<Scalar> y = x * layer.weight;
  y.rowwise() += layer.bias.row(0);
  return y;
}

template <typename Derived>
auto relu(const Eigen::MatrixBase<Derived>& x) {
  return x.cwiseMax(typename Derived::Scalar(0));
}

/// Row-wise softmax in place, shifted by the row maximum.
template <typename Scalar>
void softmax_rows(Mat<Scalar>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    row.array() -= row.maxCoeff();
    row = row.array().exp().matrix();
    row /= row.sum();
  }
}

template <typename Scalar>
struct LayerNormParams {
  Mat<Scalar> gain;  // 1 x d
  Mat<Scalar> bias;  // 1 x d

  static LayerNormParams identity(int d) {
    return {Mat<Scalar>::Ones(1, d), Mat<Scalar>::Zero(1, d)};
  }
};

/// Normalizes each row over the feature dimension (population variance).
template <typename Derived, typename Scalar = typename Derived::Scalar>
Mat<Scalar> layer_norm(const Eigen::MatrixBase<Derived>& x, const LayerNormParams<Scalar>& p,
                       double eps) {
  require(x.cols() == p.gain.cols(), "layer_norm: width mismatch");
  Mat<Scalar> y(x.rows(), x.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const Scalar mean = x.row(r).mean();
    const auto centered = (x.row(r).array() - mean).matrix().eval();
    const Scalar var = centered.squaredNorm() / Scalar(x.cols());
    const Scalar inv = Scalar(1) / std::sqrt(var + Scalar(eps));
    y.row(r) = (centered.array() * inv * p.gain.row(0).array() + p.bias.row(0).array()).matrix();
  }
  return y;
}

}  // namespace sfjsp::nn

#endif  // SFJSP_NN_LAYERS_HPP_
