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

#ifndef SFJSP_DISTRIBUTION_HPP_
#define SFJSP_DISTRIBUTION_HPP_

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sfjsp/rng.hpp"

namespace sfjsp {

enum class Family { Degenerate, LogNormal, Beta, Gamma };

std::string_view family_name(Family f);
/// Accepts "degenerate", "lognormal", "beta", "gamma" (case-insensitive).
Family parse_family(std::string_view name);

class FitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A processing-time distribution pinned to a target (median, std).
///
/// Parameter slots by family:
///   LogNormal: {mu, sigma}           X = exp(mu + sigma Z)
///   Beta:      {a, b, upper}         X = upper * Beta(a, b)
///   Gamma:     {shape, scale}        X = scale * Gamma(shape)
///   Degenerate: unused               X = median
struct DistributionSpec {
  Family family = Family::Degenerate;
  double median = 1.0;
  double std = 0.0;
  std::array<double, 3> params{};

  /// Strictly positive draw.
  double sample(Stream& rng) const;
  double analytic_median() const;
  double analytic_std() const;

  bool operator==(const DistributionSpec&) const = default;
};

DistributionSpec degenerate(double median);

/// Solves the family parameters for the requested median and standard
/// deviation. std == 0 yields a Degenerate spec for every family.
DistributionSpec fit_distribution(Family family, double median, double std);

/// Parameter names in slot order (empty for Degenerate).
std::array<std::string_view, 3> param_names(Family f);
int param_count(Family f);

}  // namespace sfjsp

#endif  // SFJSP_DISTRIBUTION_HPP_
