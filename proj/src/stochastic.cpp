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

#include "sfjsp/stochastic.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sfjsp {

using nlohmann::json;

StochasticInstance::StochasticInstance(Instance base, std::vector<DistributionSpec> dists)
    : base_(std::move(base)), dists_(std::move(dists)) {
  if (static_cast<int>(dists_.size()) != base_.num_pairs())
    throw std::invalid_argument("stochastic instance: need one distribution per compatible pair");
  for (int p = 0; p < base_.num_pairs(); ++p) {
    if (dists_[p].median != base_.times()[p])
      throw std::invalid_argument("stochastic instance: pair " + std::to_string(p) +
                                  " median differs from deterministic time");
    if (!(dists_[p].std >= 0.0))
      throw std::invalid_argument("stochastic instance: negative std at pair " +
                                  std::to_string(p));
  }
}

StochasticInstance StochasticInstance::deterministic(Instance base) {
  std::vector<DistributionSpec> dists;
  dists.reserve(base.num_pairs());
  for (double t : base.times()) dists.push_back(degenerate(t));
  return StochasticInstance(std::move(base), std::move(dists));
}

StochasticInstance annotate_stochastic(const Instance& inst, double cv_lo, double cv_hi,
                                       const FamilyMix& mix, std::uint64_t seed) {
  if (!(cv_lo >= 0.0) || !(cv_hi >= cv_lo))
    throw std::invalid_argument("annotate_stochastic: need 0 <= cv_lo <= cv_hi");
  if (mix.empty()) throw std::invalid_argument("annotate_stochastic: empty family mix");
  double total = 0.0;
  for (const auto& [family, weight] : mix) {
    if (!(weight >= 0.0)) throw std::invalid_argument("annotate_stochastic: negative weight");
    total += weight;
  }
  if (std::fabs(total - 1.0) > 1e-9)
    throw std::invalid_argument("annotate_stochastic: family weights must sum to 1");

  const Stream root(seed);
  std::vector<DistributionSpec> dists;
  dists.reserve(inst.num_pairs());
  for (int p = 0; p < inst.num_pairs(); ++p) {
    Stream rng = root.child(static_cast<std::uint64_t>(p));
    const double cv = rng.uniform(cv_lo, cv_hi);
    const double u = rng.uniform() * total;
    Family family = mix.back().first;
    double acc = 0.0;
    for (const auto& [f, w] : mix) {
      acc += w;
      if (u < acc) {
        family = f;
        break;
      }
    }
    const double median = inst.times()[p];
    try {
      dists.push_back(fit_distribution(family, median, cv * median));
    } catch (const FitError& e) {
      const int op = inst.pair_op(p);
      throw FitError("pair (job " + std::to_string(inst.job_of(op)) + ", op " +
                     std::to_string(inst.index_in_job(op)) + ", machine " +
                     std::to_string(inst.pair_machine(p)) + "): " + e.what());
    }
  }
  return StochasticInstance(inst, std::move(dists));
}

FamilyMix parse_family_mix(const std::string& text) {
  FamilyMix mix;
  std::stringstream in(text);
  std::string item;
  int bare = 0;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      mix.emplace_back(parse_family(item), 1.0);
      ++bare;
      continue;
    }
    std::size_t used = 0;
    double w = -1.0;
    try {
      w = std::stod(item.substr(colon + 1), &used);
    } catch (const std::exception&) {
    }
    if (used != item.size() - colon - 1 || !(w >= 0.0))
      throw std::invalid_argument("bad weight in family mix '" + text + "'");
    mix.emplace_back(parse_family(item.substr(0, colon)), w);
  }
  if (mix.empty()) throw std::invalid_argument("empty family mix '" + text + "'");
  if (bare != 0 && bare != static_cast<int>(mix.size()))
    throw std::invalid_argument("family mix '" + text + "' mixes weighted and bare names");
  double total = 0.0;
  for (auto& [family, w] : mix) total += bare ? (w = 1.0 / bare) : w;
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("family mix '" + text + "': weights must sum to 1");
  return mix;
}

std::string serialize_json(const StochasticInstance& si) {
  const Instance& inst = si.base();
  json jobs = json::array();
  for (int j = 0; j < inst.num_jobs(); ++j) {
    json ops = json::array();
    for (int i = 0; i < inst.job_size(j); ++i) {
      const int op = inst.op_id(j, i);
      json alts = json::array();
      for (int p = inst.pair_begin(op); p < inst.pair_end(op); ++p) {
        const auto& d = si.dist(p);
        json params = json::object();
        const auto names = param_names(d.family);
        for (int k = 0; k < param_count(d.family); ++k) params[std::string(names[k])] = d.params[k];
        alts.push_back({{"machine", inst.pair_machine(p)},
                        {"time", inst.times()[p]},
                        {"distribution",
                         {{"family", std::string(family_name(d.family))},
                          {"median", d.median},
                          {"std", d.std},
                          {"params", params}}}});
      }
      ops.push_back({{"alternatives", alts}});
    }
    jobs.push_back(ops);
  }
  json doc = {{"format_version", kInstanceFormatVersion},
              {"name", inst.name()},
              {"num_machines", inst.num_machines()},
              {"jobs", jobs}};
  return doc.dump(1) + "\n";
}

StochasticInstance parse_json_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const int version = doc.at("format_version").get<int>();
    if (version != kInstanceFormatVersion)
      throw ParseError("unsupported format_version " + std::to_string(version));
    const int num_machines = doc.at("num_machines").get<int>();
    std::vector<Job> jobs;
    std::vector<DistributionSpec> dists;
    const auto& jobs_json = doc.at("jobs");
    for (std::size_t j = 0; j < jobs_json.size(); ++j) {
      Job job;
      for (std::size_t i = 0; i < jobs_json[j].size(); ++i) {
        const std::string where = "jobs[" + std::to_string(j) + "][" + std::to_string(i) + "]";
        Operation op;
        for (const auto& alt : jobs_json[j][i].at("alternatives")) {
          const int machine = alt.at("machine").get<int>();
          const double time = alt.at("time").get<double>();
          op.alternatives.push_back({machine, time});
          if (!alt.contains("distribution")) {
            dists.push_back(degenerate(time));
            continue;
          }
          const auto& d = alt.at("distribution");
          const Family family = parse_family(d.at("family").get<std::string>());
          const double median = d.value("median", time);
          const double std = d.value("std", 0.0);
          if (median != time)
            throw ParseError(where + ": distribution median " + std::to_string(median) +
                             " differs from time " + std::to_string(time));
          if (!(std >= 0.0)) throw ParseError(where + ": negative std");
          if (!(time > 0.0)) throw ParseError(where + ": nonpositive time");
          try {
            dists.push_back(fit_distribution(family, median, std));
          } catch (const FitError& e) {
            throw ParseError(where + ": " + e.what());
          }
        }
        job.operations.push_back(std::move(op));
      }
      jobs.push_back(std::move(job));
    }
    try {
      return StochasticInstance(Instance(doc.value("name", ""), num_machines, std::move(jobs)),
                                std::move(dists));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("invalid instance: ") + e.what());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

StochasticInstance read_stochastic_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_instance(text);
  return StochasticInstance::deterministic(
      parse_standard_fjsp(text, std::filesystem::path(path).stem().string()));
}

}  // namespace sfjsp
