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

#include "sfjsp/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sfjsp/rng.hpp"

namespace sfjsp {

GeneratorConfig GeneratorConfig::defaults(TimeScheme scheme, int n_jobs, int n_machines,
                                          std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.n_jobs = n_jobs;
  cfg.n_machines = n_machines;
  cfg.scheme = scheme;
  cfg.seed = seed;
  const int lo = std::max(1, static_cast<int>(std::ceil(0.8 * n_machines)));
  const int hi = std::max(lo, static_cast<int>(std::floor(1.2 * n_machines)));
  cfg.ops_per_job = {lo, hi};
  cfg.machines_per_op = {1, std::max(1, n_machines)};
  return cfg;
}

void GeneratorConfig::validate() const {
  if (n_jobs < 1 || n_machines < 1)
    throw std::invalid_argument("generator: job and machine counts must be >= 1");
  if (ops_per_job.lo < 1 || ops_per_job.hi < ops_per_job.lo)
    throw std::invalid_argument("generator: invalid ops-per-job range");
  if (machines_per_op.lo < 1 || machines_per_op.hi < machines_per_op.lo ||
      machines_per_op.hi > n_machines)
    throw std::invalid_argument("generator: invalid machines-per-op range");
}

namespace {

const char* scheme_tag(TimeScheme s) { return s == TimeScheme::SD1 ? "sd1" : "sd3"; }

// Job structure and machine sets come from child stream 0, times from child 1,
// so changing the time scheme leaves the structure untouched.
template <class TimeFn>
Instance build(const GeneratorConfig& cfg, TimeFn&& draw_times) {
  cfg.validate();
  const Stream root(cfg.seed);
  Stream structure = root.child(0);
  Stream times = root.child(1);

  std::vector<int> machines(cfg.n_machines);
  std::vector<Job> jobs(cfg.n_jobs);
  for (auto& job : jobs) {
    const int n_ops = static_cast<int>(structure.uniform_int(cfg.ops_per_job.lo, cfg.ops_per_job.hi));
    job.operations.resize(n_ops);
    for (auto& op : job.operations) {
      const int k = static_cast<int>(
          structure.uniform_int(cfg.machines_per_op.lo, cfg.machines_per_op.hi));
      std::iota(machines.begin(), machines.end(), 0);
      for (int a = 0; a < k; ++a) {
        const auto pick = a + static_cast<int>(structure.uniform_index(cfg.n_machines - a));
        std::swap(machines[a], machines[pick]);
      }
      std::sort(machines.begin(), machines.begin() + k);
      for (int a = 0; a < k; ++a) op.alternatives.push_back({machines[a], 0.0});
      draw_times(times, op);
    }
  }
  const std::string name = std::string(scheme_tag(cfg.scheme)) + "_" +
                           std::to_string(cfg.n_jobs) + "x" + std::to_string(cfg.n_machines) +
                           "_s" + std::to_string(cfg.seed);
  return Instance(name, cfg.n_machines, std::move(jobs));
}

}  // namespace

Sd3Draw generate_sd3_detailed(const GeneratorConfig& cfg) {
  if (cfg.scheme != TimeScheme::SD3) throw std::invalid_argument("generate_sd3: scheme is not SD3");
  std::vector<double> base;
  Instance inst = build(cfg, [&](Stream& rng, Operation& op) {
    const double mean = rng.uniform(1.0, 99.0);
    base.push_back(mean);
    for (auto& alt : op.alternatives)
      alt.time = std::max(1.0, std::round(rng.uniform(0.85 * mean, 1.15 * mean)));
  });
  return {std::move(inst), std::move(base)};
}

Instance generate_sd3(const GeneratorConfig& cfg) { return generate_sd3_detailed(cfg).instance; }

Instance generate_sd1(const GeneratorConfig& cfg) {
  if (cfg.scheme != TimeScheme::SD1) throw std::invalid_argument("generate_sd1: scheme is not SD1");
  return build(cfg, [](Stream& rng, Operation& op) {
    for (auto& alt : op.alternatives) alt.time = static_cast<double>(rng.uniform_int(1, 20));
  });
}

Instance generate(const GeneratorConfig& cfg) {
  return cfg.scheme == TimeScheme::SD1 ? generate_sd1(cfg) : generate_sd3(cfg);
}

}  // namespace sfjsp
