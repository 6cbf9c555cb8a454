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
#include <filesystem>
#include <numeric>

#include "doctest.h"
#include "json.hpp"
#include "sfjsp/environment.hpp"
#include "sfjsp/generate.hpp"
#include "sfjsp/nn/network.hpp"
#include "sfjsp/nn/params_io.hpp"
#include "sfjsp/rollout.hpp"
#include "sfjsp/spm_policy.hpp"
#include "sfjsp/stochastic.hpp"

using namespace sfjsp;
using namespace sfjsp::nn;

namespace {

Mat<double> random_mat(Stream& rng, int r, int c, double scale = 1.0) {
  Mat<double> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rng.uniform(-scale, scale);
  return m;
}

// --- element-wise reference evaluation ------------------------------------

using Grid = std::vector<std::vector<double>>;

Grid grid(const Mat<double>& m) {
  Grid g(m.rows(), std::vector<double>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return g;
}

Grid matmul(const Grid& a, const Grid& b) {
  Grid c(a.size(), std::vector<double>(b[0].size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Grid cols(const Grid& a, std::size_t from, std::size_t n) {
  Grid c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i].assign(a[i].begin() + from, a[i].begin() + from + n);
  return c;
}

Grid ref_attention(const Grid& q, const Grid& k, const Grid& v) {
  Grid out(q.size(), std::vector<double>(v[0].size(), 0.0));
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::vector<double> w(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) {
      double dot = 0.0;
      for (std::size_t c = 0; c < q[i].size(); ++c) dot += q[i][c] * k[j][c];
      w[j] = dot / std::sqrt(static_cast<double>(q[i].size()));
    }
    const double mx = *std::max_element(w.begin(), w.end());
    double z = 0.0;
    for (auto& x : w) z += (x = std::exp(x - mx));
    for (std::size_t j = 0; j < k.size(); ++j)
      for (std::size_t c = 0; c < v[0].size(); ++c) out[i][c] += w[j] / z * v[j][c];
  }
  return out;
}

Grid ref_mha(const Grid& x, const Grid& y, const MHAParams<double>& p, int heads) {
  const std::size_t d = x[0].size(), dh = d / heads;
  const Grid q = matmul(x, grid(p.w_q)), k = matmul(y, grid(p.w_k)), v = matmul(y, grid(p.w_v));
  Grid cat(x.size());
  for (int h = 0; h < heads; ++h) {
    const Grid head = ref_attention(cols(q, h * dh, dh), cols(k, h * dh, dh), cols(v, h * dh, dh));
    for (std::size_t i = 0; i < x.size(); ++i) cat[i].insert(cat[i].end(), head[i].begin(), head[i].end());
  }
  return matmul(cat, grid(p.w_o));
}

Grid ref_layer_norm(Grid x, const LayerNormParams<double>& p, double eps) {
  for (auto& row : x) {
    const double n = static_cast<double>(row.size());
    double mean = 0.0, var = 0.0;
    for (double v : row) mean += v / n;
    for (double v : row) var += (v - mean) * (v - mean) / n;
    for (std::size_t c = 0; c < row.size(); ++c)
      row[c] = (row[c] - mean) / std::sqrt(var + eps) * p.gain(0, c) + p.bias(0, c);
  }
  return x;
}

Grid ref_linear(const Grid& x, const Linear<double>& l) {
  Grid y = matmul(x, grid(l.weight));
  for (auto& row : y)
    for (std::size_t c = 0; c < row.size(); ++c) row[c] += l.bias(0, c);
  return y;
}

Grid add(Grid a, const Grid& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

Grid ref_mhab(const Grid& x, const Grid& y, const MHABParams<double>& p, const MHAConfig& cfg) {
  const Grid z = ref_layer_norm(add(x, ref_mha(x, y, p.attn, cfg.heads)), p.norm1, cfg.layer_norm_eps);
  Grid hidden = ref_linear(z, p.ff_hidden);
  for (auto& row : hidden)
    for (auto& v : row) v = std::max(0.0, v);
  return ref_layer_norm(add(z, ref_linear(hidden, p.ff_out)), p.norm2, cfg.layer_norm_eps);
}

std::vector<double> ref_spm(const Grid& raw, const SPMParams<double>& p, const MHAConfig& cfg) {
  const Grid h = ref_linear(raw, p.input);
  const Grid j = ref_mhab(grid(p.inducing), h, p.induce, cfg);
  const Grid hp = ref_mhab(h, j, p.broadcast, cfg);
  std::vector<double> mean(hp[0].size(), 0.0);
  for (const auto& row : hp)
    for (std::size_t c = 0; c < row.size(); ++c) mean[c] += row[c] / hp.size();
  return mean;
}

double max_diff(const Mat<double>& a, const Grid& b) {
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b[i][j]));
  return d;
}

MHABParams<double> random_mhab(Stream& rng, int d) {
  MHABParams<double> p = MHABParams<double>::zeros(d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  p.attn = {random_mat(rng, d, d, s), random_mat(rng, d, d, s), random_mat(rng, d, d, s), random_mat(rng, d, d, s)};
  p.ff_hidden = {random_mat(rng, d, d, s), random_mat(rng, 1, d, s)};
  p.ff_out = {random_mat(rng, d, d, s), random_mat(rng, 1, d, s)};
  p.norm1 = {random_mat(rng, 1, d).array() + 1.5, random_mat(rng, 1, d, 0.2)};
  p.norm2 = {random_mat(rng, 1, d).array() + 1.5, random_mat(rng, 1, d, 0.2)};
  return p;
}

SPMParams<double> random_spm(Stream& rng, int raw, int d, int m) {
  SPMParams<double> p = SPMParams<double>::zeros(raw, d, m);
  p.input = {random_mat(rng, raw, d, 1.0 / std::sqrt(raw)), random_mat(rng, 1, d, 0.1)};
  p.inducing = random_mat(rng, m, d);
  p.induce = random_mhab(rng, d);
  p.broadcast = random_mhab(rng, d);
  return p;
}

Mat<double> permute_rows(const Mat<double>& m, const std::vector<int>& perm) {
  Mat<double> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) out.row(i) = m.row(perm[i]);
  return out;
}

std::vector<int> random_perm(Stream& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n; i > 1; --i) std::swap(p[i - 1], p[rng.uniform_index(i)]);
  return p;
}

}  // namespace

TEST_SUITE("spm_net") {

TEST_CASE("attention basics") {
  Stream rng(1);
  const Mat<double> q = random_mat(rng, 3, 4), k1 = random_mat(rng, 1, 4), v1 = random_mat(rng, 1, 2);
  const Mat<double> out1 = attention(q, k1, v1);
  for (int i = 0; i < 3; ++i) CHECK((out1.row(i) - v1.row(0)).cwiseAbs().maxCoeff() <= 1e-15);

  Mat<double> k2(2, 4);
  k2.row(0) = k1.row(0);
  k2.row(1) = k1.row(0);
  const Mat<double> v2 = random_mat(rng, 2, 2);
  const Mat<double> out2 = attention(q, k2, v2);
  const RowVec<double> mean = v2.colwise().mean();
  for (int i = 0; i < 3; ++i) CHECK((out2.row(i) - mean).cwiseAbs().maxCoeff() <= 1e-15);

  const Mat<double> k = random_mat(rng, 5, 4), v = random_mat(rng, 5, 2);
  CHECK(max_diff(attention(q, k, v), ref_attention(grid(q), grid(k), grid(v))) <= 1e-12);
  const Mat<double> w = attention_weights(q, k);
  CHECK((w.array() >= 0).all());
  for (int i = 0; i < w.rows(); ++i) CHECK(std::abs(w.row(i).sum() - 1.0) <= 1e-12);
  CHECK_THROWS(attention(q, random_mat(rng, 5, 3), v));
  CHECK_THROWS(attention(q, k, random_mat(rng, 4, 2)));
}

TEST_CASE("multi-head attention") {
  Stream rng(2);
  const int d = 8;
  MHAConfig one{1, d};
  MHAParams<double> ident{Mat<double>::Identity(d, d), Mat<double>::Identity(d, d),
                          Mat<double>::Identity(d, d), Mat<double>::Identity(d, d)};
  const Mat<double> x = random_mat(rng, 4, d), y = random_mat(rng, 6, d);
  CHECK((mha(x, y, ident, one) - attention(x, y, y)).cwiseAbs().maxCoeff() <= 1e-12);
  MHAParams<double> zero_out = ident;
  zero_out.w_o.setZero();
  CHECK(mha(x, y, zero_out, one).isZero(0.0));

  MHAConfig four{4, d};
  const auto p = random_mhab(rng, d).attn;
  CHECK(max_diff(mha(x, y, p, four), ref_mha(grid(x), grid(y), p, 4)) <= 1e-12);
  CHECK_THROWS(mha(random_mat(rng, 3, d + 1), y, p, four));
  CHECK_THROWS((MHAConfig{3, 8}.validate()));
}

TEST_CASE("attention block") {
  Stream rng(3);
  const int d = 16;
  const MHAConfig cfg{4, d};
  const Mat<double> x = random_mat(rng, 5, d), y = random_mat(rng, 7, d);
  auto p = random_mhab(rng, d);
  CHECK(max_diff(mhab(x, y, p, cfg), ref_mhab(grid(x), grid(y), p, cfg)) <= 1e-10);

  const auto perm = random_perm(rng, 5);
  const Mat<double> a = mhab(x, y, p, cfg), b = mhab(permute_rows(x, perm), y, p, cfg);
  CHECK((permute_rows(a, perm) - b).cwiseAbs().maxCoeff() <= 1e-12);

  // identity gain and zero bias leave normalized rows
  p.norm2 = LayerNormParams<double>::identity(d);
  const MHAConfig exact{4, d, 0.0};
  const Mat<double> out = mhab(x, y, p, exact);
  const Mat<double> pre = mhab(x, y, p, cfg);
  for (int i = 0; i < out.rows(); ++i) {
    const double mean = out.row(i).mean();
    const double var = (out.row(i).array() - mean).square().mean();
    CHECK(std::abs(mean) <= 1e-9);
    CHECK(std::abs(var - 1.0) <= 1e-9);
    const double m2 = pre.row(i).mean();
    CHECK(std::abs(m2) <= 1e-9);
    CHECK((pre.row(i).array() - m2).square().mean() < 1.0);
  }
}

TEST_CASE("layer norm with the default epsilon") {
  Stream rng(4);
  const Mat<double> x = random_mat(rng, 6, 12, 3.0);
  const Mat<double> y = layer_norm(x, LayerNormParams<double>::identity(12), 1e-5);
  for (int i = 0; i < 6; ++i) {
    const double mean = x.row(i).mean();
    const double var = (x.row(i).array() - mean).square().mean();
    const double out_var = (y.row(i).array() - y.row(i).mean()).square().mean();
    CHECK(std::abs(y.row(i).mean()) <= 1e-12);
    CHECK(out_var == doctest::Approx(var / (var + 1e-5)).epsilon(1e-12));
  }
}

TEST_CASE("spm reference, permutation and duplication") {
  Stream rng(5);
  const MHAConfig cfg{4, 32};
  const auto p = random_spm(rng, 10, 32, 16);
  const Mat<double> raw = random_mat(rng, 30, 10, 2.0);
  const RowVec<double> out = spm(raw, p, cfg);
  CHECK(out.size() == 32);
  const auto ref = ref_spm(grid(raw), p, cfg);
  for (int c = 0; c < 32; ++c) CHECK(std::abs(out(c) - ref[c]) <= 1e-9);
  for (int t = 0; t < 10; ++t)
    CHECK((spm(permute_rows(raw, random_perm(rng, 30)), p, cfg) - out).cwiseAbs().maxCoeff() <= 1e-9);
  const Mat<double> single = raw.topRows(1);
  const RowVec<double> base = spm(single, p, cfg);
  for (int r : {2, 5, 17}) {
    const Mat<double> dup = single.replicate(r, 1);
    CHECK((spm(dup, p, cfg) - base).cwiseAbs().maxCoeff() <= 1e-12);
  }
  CHECK_THROWS(spm(Mat<double>(0, 10), p, cfg));
}

TEST_CASE("policy inputs concatenate deterministic features and embeddings") {
  const Instance inst = generate(GeneratorConfig::defaults(TimeScheme::SD3, 4, 3, 3));
  const auto si = annotate_stochastic(inst, 0.1, 0.5, {{Family::LogNormal, 1.0}}, 3);
  NetworkConfig cfg;
  const auto params = init_params<double>(cfg, 1);
  const auto st = reset(si, ScenarioConfig{6, 2, 1, 0});
  const auto f = extract_features(st);
  const auto in = build_policy_inputs(f.det, f.scenarios, params.spm_op, params.spm_machine, params.spm_pair,
                                      cfg.attention);
  CHECK(in.op_inputs.cols() == kOpFeatureDim + 32);
  CHECK(in.machine_inputs.cols() == kMachineFeatureDim + 32);
  CHECK(in.pair_inputs.cols() == kPairFeatureDim + 32);

  std::vector<FeatureSet> reversed(f.scenarios.rbegin(), f.scenarios.rend());
  const auto rin = build_policy_inputs(f.det, reversed, params.spm_op, params.spm_machine, params.spm_pair,
                                       cfg.attention);
  CHECK((rin.pair_inputs - in.pair_inputs).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK((rin.op_inputs - in.op_inputs).cwiseAbs().maxCoeff() <= 1e-9);

  auto broken = f.scenarios;
  broken[0].ops.push_back(99);
  CHECK_THROWS(build_policy_inputs(f.det, broken, params.spm_op, params.spm_machine, params.spm_pair,
                                   cfg.attention));

  // degenerate: the number of identical scenario rows does not matter
  const auto det_si = StochasticInstance::deterministic(inst);
  const auto a = extract_features(reset(det_si, ScenarioConfig{2, 1, 1, 0}));
  const auto b = extract_features(reset(det_si, ScenarioConfig{9, 1, 1, 0}));
  const auto ia = build_policy_inputs(a.det, a.scenarios, params.spm_op, params.spm_machine, params.spm_pair,
                                      cfg.attention);
  const auto ib = build_policy_inputs(b.det, b.scenarios, params.spm_op, params.spm_machine, params.spm_pair,
                                      cfg.attention);
  CHECK((ia.pair_inputs - ib.pair_inputs).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("actor critic outputs") {
  const Instance inst = generate(GeneratorConfig::defaults(TimeScheme::SD3, 5, 3, 4));
  const auto si = annotate_stochastic(inst, 0.1, 0.5, {{Family::LogNormal, 1.0}}, 4);
  NetworkConfig cfg;
  auto params = init_params<double>(cfg, 2);
  auto st = reset(si, ScenarioConfig{4, 2, 1, 0});
  const auto out = network_forward(extract_features(st), params, cfg);
  CHECK(out.actions == eligible_actions(st));
  CHECK(std::abs(std::accumulate(out.probabilities.begin(), out.probabilities.end(), 0.0) - 1.0) <= 1e-9);
  CHECK(std::isfinite(out.value));

  params.ac.actor_out.weight.setZero();
  const auto flat = network_forward(extract_features(st), params, cfg);
  for (double p : flat.probabilities) CHECK(p == doctest::Approx(1.0 / flat.probabilities.size()).epsilon(1e-12));

  // last step: one operation left, one action per capable machine
  while (st.step() + 1 < inst.num_ops()) apply_action(st, eligible_actions(st).front());
  const auto last = network_forward(extract_features(st), init_params<double>(cfg, 2), cfg);
  REQUIRE(!last.actions.empty());
  for (const auto& a : last.actions) CHECK(a.op == last.actions.front().op);
  CHECK(last.actions.size() == inst.alternatives(last.actions.front().op).size());
  CHECK(std::abs(std::accumulate(last.probabilities.begin(), last.probabilities.end(), 0.0) - 1.0) <= 1e-9);
}

TEST_CASE("initialization and weight files") {
  NetworkConfig cfg;
  CHECK(cfg.attention.dim == 32);
  CHECK(cfg.attention.heads == 4);
  CHECK(cfg.inducing_points == 16);
  CHECK(cfg.attention.head_dim() == 8);
  const auto a = init_params<double>(cfg, 5), b = init_params<double>(cfg, 5), c = init_params<double>(cfg, 6);
  CHECK(params_to_json(cfg, a) == params_to_json(cfg, b));
  CHECK(params_to_json(cfg, a) != params_to_json(cfg, c));

  auto copy = a;
  for_each_tensor(copy, [](const std::string& name, Mat<double>& t, TensorRole role, int fan_in) {
    if (role == TensorRole::Gain) {
      CHECK(t.isOnes(0.0));
    } else if (role == TensorRole::NormBias) {
      CHECK(t.isZero(0.0));
    } else {
      INFO(name);
      CHECK(t.cwiseAbs().maxCoeff() <= 1.0 / std::sqrt(static_cast<double>(fan_in)));
    }
  });

  const auto path = (std::filesystem::temp_directory_path() / "sfjsp_weights_test.json").string();
  save_params(path, cfg, a);
  const auto loaded = load_params(path);
  CHECK(loaded.config == cfg);
  CHECK(params_to_json(loaded.config, loaded.params) == params_to_json(cfg, a));
  bool exact = true;
  auto lp = loaded.params;
  auto ap = a;
  std::vector<Mat<double>> left;
  for_each_tensor(lp, [&](const std::string&, Mat<double>& t, TensorRole, int) { left.push_back(t); });
  std::size_t i = 0;
  for_each_tensor(ap, [&](const std::string&, Mat<double>& t, TensorRole, int) { exact &= (left[i++] == t); });
  CHECK(exact);

  auto doc = nlohmann::json::parse(params_to_json(cfg, a));
  doc["tensors"]["actor.hidden.weight"]["shape"] = {3, 3};
  try {
    params_from_json(doc.dump());
    FAIL("expected shape error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("actor.hidden.weight") != std::string::npos);
  }
  doc = nlohmann::json::parse(params_to_json(cfg, a));
  doc["tensors"].erase("spm_op.inducing");
  CHECK_THROWS_WITH_AS(params_from_json(doc.dump()), doctest::Contains("spm_op.inducing"), std::invalid_argument);
  std::filesystem::remove(path);
}

TEST_CASE("spm policy is deterministic across runs and threads") {
  const Instance inst = generate(GeneratorConfig::defaults(TimeScheme::SD3, 5, 3, 6));
  const auto si = annotate_stochastic(inst, 0.1, 0.5, {{Family::LogNormal, 1.0}}, 6);
  NetworkConfig cfg;
  cfg.actor_hidden = cfg.critic_hidden = 32;
  const SpmPolicy policy = SpmPolicy::random(cfg, 3);
  const ScenarioConfig scfg{8, 20, 1, 2};
  const auto st = reset(si, scfg);
  const auto s1 = policy.score(st), s2 = policy.score(st);
  CHECK(s1.scores == s2.scores);
  InferenceConfig icfg;
  icfg.mode = RolloutMode::Kind::Sample;
  icfg.k = 4;
  icfg.seed = 8;
  const auto r1 = infer(si, scfg, policy, icfg);
  icfg.threads = 2;
  const auto r2 = infer(si, scfg, policy, icfg);
  CHECK(r1.all_objectives == r2.all_objectives);
  CHECK(r1.best == r2.best);
}

}  // TEST_SUITE
