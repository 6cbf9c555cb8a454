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

#ifndef SFJSP_STOCHASTIC_HPP_
#define SFJSP_STOCHASTIC_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sfjsp/distribution.hpp"
#include "sfjsp/instance.hpp"

namespace sfjsp {

/// An instance whose processing times are random variables. `dists` is
/// indexed by pair id and each entry's median equals the deterministic time.
class StochasticInstance {
 public:
  StochasticInstance() = default;
  StochasticInstance(Instance base, std::vector<DistributionSpec> dists);

  /// Every pair Degenerate at its deterministic time.
  static StochasticInstance deterministic(Instance base);

  const Instance& base() const { return base_; }
  const std::vector<DistributionSpec>& dists() const { return dists_; }
  const DistributionSpec& dist(int pair) const { return dists_[pair]; }

  bool operator==(const StochasticInstance&) const = default;

 private:
  Instance base_;
  std::vector<DistributionSpec> dists_;
};

using FamilyMix = std::vector<std::pair<Family, double>>;

/// Draws CV ~ U(cv_lo, cv_hi) and a family from `mix` independently per
/// compatible pair, then fits the family to (time, CV * time). Pair p uses
/// the stream Stream(seed).child(p).
StochasticInstance annotate_stochastic(const Instance& inst, double cv_lo, double cv_hi,
                                       const FamilyMix& mix, std::uint64_t seed);

/// Parses "lognormal:0.5,beta:0.5" style mixes. A list of bare names splits
/// the weight equally; explicit weights must sum to 1.
FamilyMix parse_family_mix(const std::string& text);

constexpr int kInstanceFormatVersion = 1;

/// JSON schema (format_version 1):
/// {
///   "format_version": 1, "name": str, "num_machines": int,
///   "jobs": [ [ {"alternatives": [ {"machine": int (0-based), "time": real,
///                "distribution": {"family": str, "median": real, "std": real,
///                                 "params": {name: real, ...}}} ] } ] ]
/// }
/// "distribution" may be omitted (Degenerate). On read, "params" are
/// informational: parameters are refitted from (family, median, std).
std::string serialize_json(const StochasticInstance& si);
StochasticInstance parse_json_instance(const std::string& text);

/// Reads either format by content: JSON when the first non-blank character is
/// '{', otherwise the standard text layout (all pairs Degenerate).
StochasticInstance read_stochastic_file(const std::string& path);

}  // namespace sfjsp

#endif  // SFJSP_STOCHASTIC_HPP_
