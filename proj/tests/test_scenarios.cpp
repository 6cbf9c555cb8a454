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

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "sfjsp/generate.hpp"
#include "sfjsp/scenario.hpp"
#include "sfjsp/stochastic.hpp"
#include "support.hpp"

using namespace sfjsp;

namespace {

StochasticInstance small_stochastic(std::uint64_t seed) {
  const Instance inst = generate(GeneratorConfig::defaults(TimeScheme::SD3, 4, 3, seed));
  return annotate_stochastic(inst, 0.1, 0.5, parse_family_mix("lognormal,gamma"), seed);
}

}  // namespace

TEST_SUITE("scenarios") {

TEST_CASE("degenerate scenario equals the deterministic times") {
  const Instance inst = generate(GeneratorConfig::defaults(TimeScheme::SD3, 4, 3, 2));
  const auto si = StochasticInstance::deterministic(inst);
  Stream rng(1);
  CHECK(sample_scenario(si, rng).times == inst.times());
  const auto sets = sample_sets(si, {3, 4, 5, 9});
  for (const auto* set : {&sets.state, &sets.reward, &sets.eval})
    for (const auto& s : *set) CHECK(s.times == inst.times());
}

TEST_CASE("substreams replay and differ") {
  const auto si = small_stochastic(3);
  const Stream root(5);
  Stream a = root.child(0), a2 = root.child(0), b = root.child(1);
  const Scenario sa = sample_scenario(si, a);
  CHECK(sa == sample_scenario(si, a2));
  const Scenario sb = sample_scenario(si, b);
  for (std::size_t p = 0; p < sa.times.size(); ++p) CHECK(sa.times[p] != sb.times[p]);
}

TEST_CASE("set sizes, reruns and isolation") {
  const auto si = small_stochastic(4);
  const auto sets = sample_sets(si, {100, 1000, 1000, 7});
  CHECK(sets.state.size() == 100);
  CHECK(sets.reward.size() == 1000);
  CHECK(sets.eval.size() == 1000);
  const auto again = sample_sets(si, {100, 1000, 1000, 7});
  CHECK(again.state == sets.state);
  CHECK(again.reward == sets.reward);
  CHECK(again.eval == sets.eval);
  const auto other = sample_sets(si, {37, 1000, 1000, 7});
  CHECK(other.reward == sets.reward);
  CHECK(other.eval == sets.eval);
  CHECK(std::equal(other.state.begin(), other.state.end(), sets.state.begin()));
  for (const auto& s : sets.state)
    for (const auto& r : sets.reward) REQUIRE(s.times != r.times);
}

TEST_CASE("scenario set JSON round-trip") {
  const auto si = small_stochastic(6);
  const auto sets = sample_sets(si, {3, 4, 5, 1});
  const auto back = scenario_sets_from_json(scenario_sets_to_json(sets));
  CHECK(back.state == sets.state);
  CHECK(back.reward == sets.reward);
  CHECK(back.eval == sets.eval);
}

TEST_CASE("config and objective validation") {
  CHECK_THROWS(ScenarioConfig{0, 1, 1, 0}.validate());
  CHECK_THROWS(ObjectiveSpec::var(0.0).validate());
  CHECK_THROWS(ObjectiveSpec::var(1.5).validate());
  CHECK_NOTHROW(ObjectiveSpec::var(1.0).validate());
  CHECK(ObjectiveSpec::var(0.95).label() == "var0.95");
  CHECK(ObjectiveSpec::mean().label() == "mean");
}

TEST_CASE("empirical VaR convention") {
  std::vector<double> v(100);
  std::iota(v.begin(), v.end(), 1.0);
  CHECK(quantile_var(v, 0.95) == 95.0);
  CHECK(testing::reference_quantile(v, 0.95) == 95.0);
  CHECK(quantile_var(v, 1.0) == 100.0);
  CHECK(quantile_var(v, 0.001) == 1.0);
  std::vector<double> seven(13, 7.0);
  for (double a : {0.1, 0.5, 0.95, 1.0}) CHECK(quantile_var(seven, a) == 7.0);
  CHECK_THROWS(quantile_var(std::vector<double>{}, 0.5));
  CHECK_THROWS(evaluate_objective(std::vector<double>{}, ObjectiveSpec::mean()));
}

TEST_CASE("objectives") {
  CHECK(evaluate_objective(std::vector<double>{2, 4}, ObjectiveSpec::mean()) == 3.0);
  std::vector<double> v(100);
  std::iota(v.begin(), v.end(), 1.0);
  CHECK(evaluate_objective(v, ObjectiveSpec::var(0.95)) == 95.0);
  std::vector<double> c(10, 4.5);
  CHECK(evaluate_objective(c, ObjectiveSpec::mean()) == evaluate_objective(c, ObjectiveSpec::var(0.95)));

  Stream rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(1 + rng.uniform_index(60));
    for (auto& e : x) e = rng.uniform(0, 50);
    auto shuffled = x;
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.uniform_index(i)]);
    for (const auto& spec : {ObjectiveSpec::mean(), ObjectiveSpec::var(0.9)})
      CHECK(evaluate_objective(x, spec) == evaluate_objective(shuffled, spec));
    auto bigger = x;
    for (auto& e : bigger) e += rng.uniform(0, 1);
    const double a = rng.uniform(0.01, 1.0);
    CHECK(quantile_var(bigger, a) >= quantile_var(x, a));
    CHECK(quantile_var(x, a) == testing::reference_quantile(x, a));
  }
}

}  // TEST_SUITE
