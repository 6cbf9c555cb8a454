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

#include <cmath>

#include "doctest.h"
#include "sfjsp/environment.hpp"
#include "sfjsp/generate.hpp"
#include "sfjsp/oracle.hpp"
#include "sfjsp/policy.hpp"
#include "sfjsp/rollout.hpp"
#include "sfjsp/stochastic.hpp"
#include "support.hpp"

using namespace sfjsp;

namespace {

SchedulingState det_state(const Instance& inst) {
  return reset(StochasticInstance::deterministic(inst), ScenarioConfig{1, 1, 1, 0});
}

const DispatchRule kRules[] = {DispatchRule::FIFO, DispatchRule::MOR, DispatchRule::MWKR,
                               DispatchRule::SPT};

}  // namespace

TEST_SUITE("policies") {

TEST_CASE("spt picks the shortest pair") {
  const Instance inst = parse_standard_fjsp("3 1\n1 1 1 4\n1 1 1 3\n1 1 1 5\n");
  const auto st = det_state(inst);
  CHECK(greedy_select(pdr_score(DispatchRule::SPT, st)) == Action{1, 0});
}

TEST_CASE("mor picks the job with most remaining ops") {
  const Instance inst = parse_standard_fjsp("2 1\n1 1 1 4\n3 1 1 3 1 1 3 1 1 3\n");
  CHECK(greedy_select(pdr_score(DispatchRule::MOR, det_state(inst))).op == 1);
}

TEST_CASE("fifo prefers the job ready earliest") {
  const Instance inst = parse_standard_fjsp("2 2\n2 1 1 5 1 2 1\n2 1 2 1 1 2 1\n");
  auto st = det_state(inst);
  apply_action(st, {0, 0});  // job 0 ready at 5
  apply_action(st, {2, 1});  // job 1 ready at 1
  CHECK(greedy_select(pdr_score(DispatchRule::FIFO, st)).op == 3);
}

TEST_CASE("pdr machine choice minimizes completion") {
  const Instance inst = parse_standard_fjsp("2 2\n1 2 1 6 2 2\n1 1 1 9\n");
  auto st = det_state(inst);
  apply_action(st, {1, 0});
  // op 0: m0 completes at 15, m1 at 2
  for (DispatchRule r : kRules) CHECK(greedy_select(pdr_score(r, st)) == Action{0, 1});
}

TEST_CASE("mwkr equals mor when every op has the same mean time") {
  Stream rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Job> jobs(2 + rng.uniform_index(4));
    const int m = 2 + static_cast<int>(rng.uniform_index(3));
    for (auto& j : jobs) {
      j.operations.resize(1 + rng.uniform_index(4));
      for (auto& op : j.operations) {
        // one or two machines, times symmetric around 6
        const int a = static_cast<int>(rng.uniform_index(m));
        const int b = (a + 1) % m;
        const double d = static_cast<double>(rng.uniform_index(5));
        if (rng.uniform() < 0.5) op.alternatives = {{a, 6.0}};
        else op.alternatives = {{std::min(a, b), 6.0 - d}, {std::max(a, b), 6.0 + d}};
      }
    }
    const Instance inst("eq", m, jobs);
    auto st1 = det_state(inst), st2 = det_state(inst);
    while (!st1.done()) {
      const Action a1 = greedy_select(pdr_score(DispatchRule::MWKR, st1));
      const Action a2 = greedy_select(pdr_score(DispatchRule::MOR, st2));
      REQUIRE(a1 == a2);
      apply_action(st1, a1);
      apply_action(st2, a2);
    }
  }
}

TEST_CASE("spt on one machine sorts jobs by processing time") {
  Stream rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Job> jobs(2 + rng.uniform_index(6));
    std::vector<std::pair<double, int>> expected;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      const double p = static_cast<double>(rng.uniform_int(1, 30));
      jobs[j].operations = {Operation{{{0, p}}}};
      expected.push_back({p, static_cast<int>(j)});
    }
    std::sort(expected.begin(), expected.end());
    const Instance inst("one", 1, jobs);
    const auto res = rollout(StochasticInstance::deterministic(inst), ScenarioConfig{1, 1, 1, 0},
                             PdrPolicy(DispatchRule::SPT), RolloutMode::greedy());
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(res.schedule.machine_order[0][i] == expected[i].second);
  }
}

TEST_CASE("greedy selection") {
  PolicyScores s{{{0, 0}, {1, 0}}, {1.0, 2.0}, std::nullopt};
  CHECK(greedy_select(s) == Action{1, 0});
  PolicyScores tie{{{0, 1}, {2, 0}, {3, 0}}, {0.5, 0.5, 0.5}, std::nullopt};
  CHECK(greedy_select(tie) == Action{0, 1});
  Stream rng(6);
  for (int t = 0; t < 100; ++t) {
    PolicyScores r;
    for (int i = 0; i < 6; ++i) {
      r.actions.push_back({i, 0});
      r.scores.push_back(rng.uniform(-3, 3));
    }
    const Action best = greedy_select(r);
    PolicyScores shifted = r, scaled = r;
    for (auto& x : shifted.scores) x += 17.5;
    for (auto& x : scaled.scores) x *= 3.25;
    CHECK(greedy_select(shifted) == best);
    CHECK(greedy_select(scaled) == best);
    const auto p = softmax(r.scores), q = softmax(shifted.scores);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p[i] - q[i]) <= 1e-12);
  }
  CHECK_THROWS(greedy_select(PolicyScores{}));
}

TEST_CASE("sampled selection") {
  Stream rng(1);
  const PolicyScores one = with_probabilities({{{4, 2}}, {0.3}, std::nullopt});
  CHECK(sample_select(one, rng) == Action{4, 2});
  const PolicyScores half = with_probabilities({{{0, 0}, {1, 0}}, {0.0, 0.0}, std::nullopt});
  int first = 0;
  for (int i = 0; i < 10000; ++i) first += sample_select(half, rng) == Action{0, 0};
  CHECK(std::abs(first - 5000) <= 3 * 50);
  Stream a(9), b(9);
  CHECK(sample_select(half, a) == sample_select(half, b));
  PolicyScores bad{{{0, 0}, {1, 0}}, {0, 0}, std::vector<double>{0.7, 0.7}};
  CHECK_THROWS(sample_select(bad, rng));
  CHECK_THROWS(sample_select(PolicyScores{{{0, 0}}, {0}, std::nullopt}, rng));
  const auto p = softmax(std::vector<double>{-INFINITY, 0.0});
  CHECK(p[0] == 0.0);
  CHECK(p[1] == 1.0);
}

TEST_CASE("builtin policies by name") {
  for (const char* n : {"fifo", "mor", "mwkr", "spt", "random"}) CHECK(make_builtin_policy(n)->name() == n);
  CHECK_THROWS(make_builtin_policy("lpt"));
}

TEST_CASE("every pdr yields a feasible schedule") {
  Stream rng(71);
  for (int trial = 0; trial < 1000; ++trial) {
    const Instance inst = testing::random_instance(rng, 1 + static_cast<int>(rng.uniform_index(6)), 4,
                                                   1 + static_cast<int>(rng.uniform_index(4)), 30);
    const auto si = StochasticInstance::deterministic(inst);
    for (DispatchRule r : kRules) {
      const auto res = rollout(si, ScenarioConfig{1, 1, 1, 0}, PdrPolicy(r), RolloutMode::greedy());
      REQUIRE(res.trajectory.size() == static_cast<std::size_t>(inst.num_ops()));
      REQUIRE_NOTHROW(simulate_schedule(inst, res.schedule, inst.times()));
      REQUIRE(testing::reference_makespan(inst, res.schedule, inst.times()) == res.det_makespan);
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("inference") {

TEST_CASE("rollouts are reproducible") {
  const Instance inst = generate(GeneratorConfig::defaults(TimeScheme::SD3, 5, 3, 2));
  const auto si = annotate_stochastic(inst, 0.1, 0.5, {{Family::LogNormal, 1.0}}, 2);
  const ScenarioConfig cfg{5, 50, 1, 9};
  const PdrPolicy spt(DispatchRule::SPT);
  const auto g1 = rollout(si, cfg, spt, RolloutMode::greedy());
  const auto g2 = rollout(si, cfg, spt, RolloutMode::greedy());
  CHECK(g1.schedule == g2.schedule);
  CHECK(g1.final_objective == g2.final_objective);
  UniformPolicy random;
  const auto s1 = rollout(si, cfg, random, RolloutMode::sample(4));
  const auto s2 = rollout(si, cfg, random, RolloutMode::sample(4));
  CHECK(s1.schedule == s2.schedule);
  CHECK(s1.schedule.provenance.size() == static_cast<std::size_t>(inst.num_ops()));
  CHECK(schedule_from_actions(inst, s1.schedule.provenance) == s1.schedule);
}

TEST_CASE("spt rollout on one machine schedules the short job first") {
  const Instance inst = parse_standard_fjsp("2 1\n1 1 1 4\n1 1 1 3\n");
  const auto res = rollout(StochasticInstance::deterministic(inst), ScenarioConfig{1, 1, 1, 0},
                           PdrPolicy(DispatchRule::SPT), RolloutMode::greedy());
  CHECK(res.schedule.machine_order[0] == std::vector<int>{1, 0});
}

TEST_CASE("illegal policy output is reported") {
  struct Broken final : Policy {
    std::string name() const override { return "broken"; }
    PolicyScores score(const SchedulingState&) const override {
      return {{{0, 7}}, {1.0}, std::nullopt};
    }
  };
  const Instance inst = parse_standard_fjsp("1 1\n1 1 1 3\n");
  CHECK_THROWS_AS(rollout(StochasticInstance::deterministic(inst), ScenarioConfig{1, 1, 1, 0}, Broken{},
                          RolloutMode::greedy()),
                  IllegalActionError);
}

TEST_CASE("sample inference k = 1 with a deterministic scorer equals greedy") {
  const Instance inst = generate(GeneratorConfig::defaults(TimeScheme::SD3, 6, 3, 5));
  const auto si = annotate_stochastic(inst, 0.1, 0.5, {{Family::LogNormal, 1.0}}, 5);
  // near-hard scores: softmax puts all mass on the argmax
  struct Sharp final : Policy {
    std::string name() const override { return "sharp"; }
    PolicyScores score(const SchedulingState& st) const override {
      PolicyScores s = pdr_score(DispatchRule::MWKR, st);
      for (auto& x : s.scores) x *= 1e6;
      return s;
    }
  };
  InferenceConfig greedy;
  InferenceConfig sample;
  sample.mode = RolloutMode::Kind::Sample;
  sample.k = 1;
  sample.seed = 3;
  const ScenarioConfig cfg{3, 40, 1, 2};
  const auto g = infer(si, cfg, Sharp{}, greedy);
  const auto s = infer(si, cfg, Sharp{}, sample);
  CHECK(g.best.assignment == s.best.assignment);
  CHECK(g.best.machine_order == s.best.machine_order);
  CHECK(g.objective == s.objective);
}

TEST_CASE("best of k is nonincreasing in k and reproducible") {
  const Instance inst = generate(GeneratorConfig::defaults(TimeScheme::SD3, 5, 3, 8));
  const auto si = annotate_stochastic(inst, 0.1, 0.5, {{Family::Gamma, 1.0}}, 8);
  const ScenarioConfig cfg{3, 50, 1, 4};
  InferenceConfig icfg;
  icfg.mode = RolloutMode::Kind::Sample;
  icfg.seed = 17;
  double prev = INFINITY;
  std::vector<double> all;
  for (int k : {1, 2, 5, 10, 20}) {
    icfg.k = k;
    const auto r = infer(si, cfg, UniformPolicy{}, icfg);
    CHECK(r.objective <= prev);
    CHECK(r.all_objectives.size() == static_cast<std::size_t>(k));
    CHECK(std::equal(all.begin(), all.end(), r.all_objectives.begin()));
    all = r.all_objectives;
    prev = r.objective;
  }
  icfg.threads = 3;
  const auto threaded = infer(si, cfg, UniformPolicy{}, icfg);
  CHECK(threaded.all_objectives == all);
  icfg.k = 0;
  CHECK_THROWS(icfg.validate());
}

TEST_CASE("exhaustive sampling reaches the brute-force optimum") {
  const Instance inst = parse_standard_fjsp("2 2\n2 2 1 3 2 4 1 2 2\n1 2 1 2 2 5\n");
  const auto si = annotate_stochastic(inst, 0.2, 0.4, {{Family::LogNormal, 1.0}}, 1);
  auto sets = std::make_shared<ScenarioSets>(sample_sets(si, {2, 10, 1, 3}));
  const auto opt = brute_force_stoch(si, sets->reward, ObjectiveSpec::var(0.95));
  InferenceConfig icfg;
  icfg.mode = RolloutMode::Kind::Sample;
  icfg.k = 400;  // far more than the 8 distinct action sequences' schedules
  icfg.seed = 2;
  const auto r = infer(si, sets, UniformPolicy{}, icfg);
  CHECK(r.objective == opt.objective);
}

}  // TEST_SUITE
