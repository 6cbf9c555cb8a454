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

#ifndef SFJSP_SPM_POLICY_HPP_
#define SFJSP_SPM_POLICY_HPP_

#include <memory>
#include <string>

#include "sfjsp/nn/network.hpp"
#include "sfjsp/policy.hpp"

namespace sfjsp {

/// Attention-scored policy: deterministic features concatenated with SPM
/// embeddings of the state-scenario features, a base encoder, and the actor
/// head. Scores are the actor outputs; probabilities their softmax.
class SpmPolicy final : public Policy {
 public:
  SpmPolicy(nn::NetworkConfig cfg, nn::NetworkParams<double> params)
      : cfg_(std::move(cfg)), params_(std::move(params)) {}

  static SpmPolicy from_file(const std::string& path);
  static SpmPolicy random(const nn::NetworkConfig& cfg, std::uint64_t seed);

  std::string name() const override { return "spm"; }
  PolicyScores score(const SchedulingState& state) const override;
  /// Critic value of the state.
  double value(const SchedulingState& state) const;

  const nn::NetworkConfig& config() const { return cfg_; }
  const nn::NetworkParams<double>& params() const { return params_; }

 private:
  nn::NetworkConfig cfg_;
  nn::NetworkParams<double> params_;
};

}  // namespace sfjsp

#endif  // SFJSP_SPM_POLICY_HPP_
