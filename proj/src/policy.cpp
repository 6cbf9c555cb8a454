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

#include "sfjsp/policy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sfjsp {

std::vector<double> softmax(std::span<const double> scores) {
  if (scores.empty()) throw std::invalid_argument("softmax: no scores");
  const double top = *std::max_element(scores.begin(), scores.end());
  if (!std::isfinite(top)) throw std::invalid_argument("softmax: no finite score");
  std::vector<double> p(scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    p[i] = std::exp(scores[i] - top);
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

PolicyScores with_probabilities(PolicyScores s) {
  if (!s.probabilities) s.probabilities = softmax(s.scores);
  return s;
}

Action greedy_select(const PolicyScores& s) {
  if (s.actions.empty() || s.actions.size() != s.scores.size())
    throw std::invalid_argument("greedy_select: need one score per action");
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.scores.size(); ++i)
    if (s.scores[i] > s.scores[best]) best = i;
  return s.actions[best];
}

Action sample_select(const PolicyScores& s, Stream& rng) {
  if (!s.probabilities) throw std::invalid_argument("sample_select: no probability vector");
  const auto& p = *s.probabilities;
  if (p.empty() || p.size() != s.actions.size())
    throw std::invalid_argument("sample_select: need one probability per action");
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw std::invalid_argument("sample_select: negative probability");
    total += x;
  }
  if (std::fabs(total - 1.0) > 1e-9)
    throw std::invalid_argument("sample_select: probabilities do not sum to 1");
  const double u = rng.uniform() * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) last_positive = i;
    acc += p[i];
    if (u < acc && p[i] > 0.0) return s.actions[i];
  }
  return s.actions[last_positive];
}

std::string_view rule_name(DispatchRule r) {
  switch (r) {
    case DispatchRule::FIFO: return "fifo";
    case DispatchRule::MOR: return "mor";
    case DispatchRule::MWKR: return "mwkr";
    case DispatchRule::SPT: return "spt";
  }
  return "unknown";
}

PolicyScores pdr_score(DispatchRule rule, const SchedulingState& state) {
  const Instance& inst = state.instance();
  const ScheduleView& det = state.det();
  PolicyScores out;
  out.actions = eligible_actions(state);
  if (out.actions.empty()) throw std::invalid_argument("pdr_score: no eligible actions");
  out.scores.assign(out.actions.size(), -std::numeric_limits<double>::infinity());

  // Actions are grouped by op (one op per job), machines ascending.
  std::size_t i = 0;
  while (i < out.actions.size()) {
    const int op = out.actions[i].op;
    std::size_t end = i;
    std::size_t best = i;
    double best_completion = std::numeric_limits<double>::infinity();
    const int job = inst.job_of(op);
    for (; end < out.actions.size() && out.actions[end].op == op; ++end) {
      const int m = out.actions[end].machine;
      const double c = std::max(det.job_ready[job], det.machine_ready[m]) +
                       det.times[inst.pair_id(op, m)];
      if (c < best_completion) {
        best_completion = c;
        best = end;
      }
    }
    double priority = 0.0;
    switch (rule) {
      case DispatchRule::FIFO: priority = -det.job_ready[job]; break;
      case DispatchRule::MOR:
        priority = static_cast<double>(inst.job_size(job) - state.next_index(job));
        break;
      case DispatchRule::MWKR:
        for (int k = state.next_index(job); k < inst.job_size(job); ++k)
          priority += det.mean_time(inst, inst.op_id(job, k));
        break;
      case DispatchRule::SPT:
        priority = -det.times[inst.pair_id(op, out.actions[best].machine)];
        break;
    }
    out.scores[best] = priority;
    i = end;
  }
  return out;
}

PolicyScores UniformPolicy::score(const SchedulingState& state) const {
  PolicyScores out;
  out.actions = eligible_actions(state);
  out.scores.assign(out.actions.size(), 0.0);
  return out;
}

std::unique_ptr<Policy> make_builtin_policy(std::string_view name) {
  if (name == "fifo") return std::make_unique<PdrPolicy>(DispatchRule::FIFO);
  if (name == "mor") return std::make_unique<PdrPolicy>(DispatchRule::MOR);
  if (name == "mwkr") return std::make_unique<PdrPolicy>(DispatchRule::MWKR);
  if (name == "spt") return std::make_unique<PdrPolicy>(DispatchRule::SPT);
  if (name == "random") return std::make_unique<UniformPolicy>();
  throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

}  // namespace sfjsp
