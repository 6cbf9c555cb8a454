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

#include "sfjsp/distribution.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "sfjsp/special.hpp"

namespace sfjsp {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Degenerate: return "degenerate";
    case Family::LogNormal: return "lognormal";
    case Family::Beta: return "beta";
    case Family::Gamma: return "gamma";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "degenerate") return Family::Degenerate;
  if (lower == "lognormal" || lower == "log-normal") return Family::LogNormal;
  if (lower == "beta") return Family::Beta;
  if (lower == "gamma") return Family::Gamma;
  throw std::invalid_argument("unknown distribution family '" + std::string(name) + "'");
}

std::array<std::string_view, 3> param_names(Family f) {
  switch (f) {
    case Family::LogNormal: return {"mu", "sigma", ""};
    case Family::Beta: return {"a", "b", "upper"};
    case Family::Gamma: return {"shape", "scale", ""};
    case Family::Degenerate: break;
  }
  return {"", "", ""};
}

int param_count(Family f) {
  switch (f) {
    case Family::LogNormal: return 2;
    case Family::Beta: return 3;
    case Family::Gamma: return 2;
    case Family::Degenerate: return 0;
  }
  return 0;
}

double DistributionSpec::sample(Stream& rng) const {
  double x = 0.0;
  do {
    switch (family) {
      case Family::Degenerate: return median;
      case Family::LogNormal: x = std::exp(params[0] + params[1] * rng.normal()); break;
      case Family::Beta: x = params[2] * rng.beta(params[0], params[1]); break;
      case Family::Gamma: x = params[1] * rng.gamma(params[0]); break;
    }
  } while (!(x > 0.0));
  return x;
}

double DistributionSpec::analytic_median() const {
  switch (family) {
    case Family::Degenerate: return median;
    case Family::LogNormal: return std::exp(params[0]);
    case Family::Beta: return params[2] * special::beta_inc_inverse(params[0], params[1], 0.5);
    case Family::Gamma: return params[1] * special::gamma_p_inverse(params[0], 0.5);
  }
  return median;
}

double DistributionSpec::analytic_std() const {
  switch (family) {
    case Family::Degenerate: return 0.0;
    case Family::LogNormal: {
      const double s2 = params[1] * params[1];
      return std::exp(params[0]) * std::sqrt(std::expm1(s2)) * std::exp(0.5 * s2);
    }
    case Family::Beta: {
      const double a = params[0];
      const double b = params[1];
      return params[2] * std::sqrt(a * b / ((a + b) * (a + b) * (a + b + 1.0)));
    }
    case Family::Gamma: return std::sqrt(params[0]) * params[1];
  }
  return 0.0;
}

DistributionSpec degenerate(double median) {
  DistributionSpec spec;
  spec.family = Family::Degenerate;
  spec.median = median;
  spec.std = 0.0;
  return spec;
}

namespace {

// Median of a unit-scale gamma; asymptotic series once the shape is large.
double gamma_median(double shape) {
  if (shape > 1e3) {
    const double k = shape;
    return k - 1.0 / 3.0 + 8.0 / (405.0 * k) + 184.0 / (25515.0 * k * k) +
           2248.0 / (3444525.0 * k * k * k);
  }
  return special::gamma_p_inverse(shape, 0.5);
}

// std / median of a unit-scale gamma.
double gamma_cv(double shape) { return std::sqrt(shape) / gamma_median(shape); }

}  // namespace

DistributionSpec fit_distribution(Family family, double median, double std) {
  if (!(median > 0.0) || !std::isfinite(median))
    throw FitError("fit_distribution: median must be positive");
  if (!(std >= 0.0) || !std::isfinite(std))
    throw FitError("fit_distribution: std must be nonnegative");
  if (std == 0.0 || family == Family::Degenerate) {
    if (std != 0.0) throw FitError("fit_distribution: degenerate family requires std == 0");
    return degenerate(median);
  }

  DistributionSpec spec;
  spec.family = family;
  spec.median = median;
  spec.std = std;
  const double cv = std / median;

  switch (family) {
    case Family::LogNormal: {
      // cv^2 = (e^{s^2} - 1) e^{s^2}  =>  e^{s^2} = (1 + sqrt(1 + 4 cv^2)) / 2.
      const double u = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * cv * cv));
      spec.params = {std::log(median), std::sqrt(std::log(u)), 0.0};
      break;
    }
    case Family::Beta: {
      // Symmetric Beta(a, a) on [0, 2 median]: median exact, cv = 1/sqrt(2a + 1).
      if (cv >= 1.0)
        throw FitError("fit_distribution: beta on [0, 2*median] cannot reach cv " +
                       std::to_string(cv) + " (needs cv < 1)");
      const double a = 0.5 * (1.0 / (cv * cv) - 1.0);
      spec.params = {a, a, 2.0 * median};
      break;
    }
    case Family::Gamma: {
      // gamma_cv is decreasing in shape; bisect on log(shape).
      double lo = std::log(1e-3);
      double hi = std::log(1e9);
      if (cv > gamma_cv(std::exp(lo)) || cv < gamma_cv(std::exp(hi)))
        throw FitError("fit_distribution: gamma cannot reach cv " + std::to_string(cv));
      // Tighten around the large-shape estimate 1/cv^2 before bisecting.
      const double guess = std::log(1.0 / (cv * cv));
      if (guess - 1.0 > lo && gamma_cv(std::exp(guess - 1.0)) > cv) lo = guess - 1.0;
      if (guess + 1.0 < hi && gamma_cv(std::exp(guess + 1.0)) < cv) hi = guess + 1.0;
      for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (gamma_cv(std::exp(mid)) > cv)
          lo = mid;
        else
          hi = mid;
      }
      const double shape = std::exp(0.5 * (lo + hi));
      spec.params = {shape, median / gamma_median(shape), 0.0};
      break;
    }
    case Family::Degenerate: break;
  }
  return spec;
}

}  // namespace sfjsp
