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

#include "sfjsp/spm_policy.hpp"

#include "sfjsp/features.hpp"
#include "sfjsp/nn/params_io.hpp"

namespace sfjsp {

SpmPolicy SpmPolicy::from_file(const std::string& path) {
  auto loaded = nn::load_params(path);
  return SpmPolicy(loaded.config, std::move(loaded.params));
}

SpmPolicy SpmPolicy::random(const nn::NetworkConfig& cfg, std::uint64_t seed) {
  return SpmPolicy(cfg, nn::init_params<double>(cfg, seed));
}

PolicyScores SpmPolicy::score(const SchedulingState& state) const {
  const auto out = nn::network_forward(extract_features(state), params_, cfg_);
  return {out.actions, out.scores, out.probabilities};
}

double SpmPolicy::value(const SchedulingState& state) const {
  return nn::network_forward(extract_features(state), params_, cfg_).value;
}

}  // namespace sfjsp
