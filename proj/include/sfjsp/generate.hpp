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

#ifndef SFJSP_GENERATE_HPP_
#define SFJSP_GENERATE_HPP_

#include <cstdint>
#include <vector>

#include "sfjsp/instance.hpp"

namespace sfjsp {

enum class TimeScheme { SD1, SD3 };

struct IntRange {
  int lo = 1;
  int hi = 1;
};

/// Synthetic instance parameters. Structural defaults (see `defaults`) are
/// not authoritative for SD1; override them freely.
struct GeneratorConfig {
  int n_jobs = 10;
  int n_machines = 5;
  IntRange ops_per_job{4, 6};
  IntRange machines_per_op{1, 5};
  TimeScheme scheme = TimeScheme::SD3;
  std::uint64_t seed = 0;

  /// ops per job ~ U{ceil(0.8 m) .. floor(1.2 m)}, machines per op ~ U{1 .. m}.
  static GeneratorConfig defaults(TimeScheme scheme, int n_jobs, int n_machines,
                                  std::uint64_t seed);
  void validate() const;
};

/// SD3 instance together with the per-operation base times it was drawn from.
struct Sd3Draw {
  Instance instance;
  std::vector<double> base_times;  // indexed by op id
};

/// Base time ~ U(1, 99) per operation, then each compatible pair gets
/// U(0.85 base, 1.15 base), rounded to the nearest integer and clamped to >= 1.
Instance generate_sd3(const GeneratorConfig& cfg);
Sd3Draw generate_sd3_detailed(const GeneratorConfig& cfg);

/// Processing times ~ U{1 .. 20} independently per compatible pair.
Instance generate_sd1(const GeneratorConfig& cfg);

/// Dispatches on cfg.scheme.
Instance generate(const GeneratorConfig& cfg);

}  // namespace sfjsp

#endif  // SFJSP_GENERATE_HPP_
