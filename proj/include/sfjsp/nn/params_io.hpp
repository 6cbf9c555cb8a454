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

#ifndef SFJSP_NN_PARAMS_IO_HPP_
#define SFJSP_NN_PARAMS_IO_HPP_

#include <string>

#include "sfjsp/nn/network.hpp"

namespace sfjsp::nn {

constexpr int kWeightFormatVersion = 1;

/// Weight file (JSON, format_version 1):
/// {
///   "format_version": 1,
///   "config": {"heads", "dim", "layer_norm_eps", "inducing_points", "op_dim",
///              "machine_dim", "pair_dim", "embed_dim", "actor_hidden",
///              "critic_hidden", "feed_forward": "relu, width dim",
///              "projection_layout": "per-head column blocks"},
///   "tensors": {"<name>": {"shape": [rows, cols], "data": [row-major reals]}}
/// }
/// Tensor names follow for_each_tensor, e.g. "spm_op.induce.attn.w_q".
std::string params_to_json(const NetworkConfig& cfg, const NetworkParams<double>& p);

struct LoadedNetwork {
  NetworkConfig config;
  NetworkParams<double> params;
};

/// Throws std::invalid_argument naming the tensor on a missing, unknown or
/// mis-shaped entry.
LoadedNetwork params_from_json(const std::string& text);

void save_params(const std::string& path, const NetworkConfig& cfg, const NetworkParams<double>& p);
LoadedNetwork load_params(const std::string& path);

}  // namespace sfjsp::nn

#endif  // SFJSP_NN_PARAMS_IO_HPP_
