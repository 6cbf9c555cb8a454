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

#include "sfjsp/nn/params_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sfjsp::nn {

using nlohmann::json;

namespace {

json config_to_json(const NetworkConfig& cfg) {
  return {{"heads", cfg.attention.heads},
          {"dim", cfg.attention.dim},
          {"layer_norm_eps", cfg.attention.layer_norm_eps},
          {"inducing_points", cfg.inducing_points},
          {"op_dim", cfg.op_dim},
          {"machine_dim", cfg.machine_dim},
          {"pair_dim", cfg.pair_dim},
          {"embed_dim", cfg.embed_dim},
          {"actor_hidden", cfg.actor_hidden},
          {"critic_hidden", cfg.critic_hidden},
          {"feed_forward", "relu, width dim"},
          {"projection_layout", "per-head column blocks"}};
}

NetworkConfig config_from_json(const json& j) {
  NetworkConfig cfg;
  cfg.attention.heads = j.at("heads").get<int>();
  cfg.attention.dim = j.at("dim").get<int>();
  cfg.attention.layer_norm_eps = j.at("layer_norm_eps").get<double>();
  cfg.inducing_points = j.at("inducing_points").get<int>();
  cfg.op_dim = j.at("op_dim").get<int>();
  cfg.machine_dim = j.at("machine_dim").get<int>();
  cfg.pair_dim = j.at("pair_dim").get<int>();
  cfg.embed_dim = j.at("embed_dim").get<int>();
  cfg.actor_hidden = j.at("actor_hidden").get<int>();
  cfg.critic_hidden = j.at("critic_hidden").get<int>();
  cfg.validate();
  return cfg;
}

}  // namespace

std::string params_to_json(const NetworkConfig& cfg, const NetworkParams<double>& p) {
  json tensors = json::object();
  auto copy = p;
  for_each_tensor(copy, [&](const std::string& name, Mat<double>& t, TensorRole, int) {
    std::vector<double> data(t.data(), t.data() + t.size());
    tensors[name] = {{"shape", {t.rows(), t.cols()}}, {"data", std::move(data)}};
  });
  json doc = {{"format_version", kWeightFormatVersion},
              {"config", config_to_json(cfg)},
              {"tensors", std::move(tensors)}};
  return doc.dump() + "\n";
}

LoadedNetwork params_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("weight file: invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("format_version").get<int>() != kWeightFormatVersion)
      throw std::invalid_argument("weight file: unsupported format_version");
    LoadedNetwork out{config_from_json(doc.at("config")), {}};
    out.params = NetworkParams<double>::zeros(out.config);
    const auto& tensors = doc.at("tensors");
    std::set<std::string> expected;
    for_each_tensor(out.params, [&](const std::string& name, Mat<double>& t, TensorRole, int) {
      expected.insert(name);
      if (!tensors.contains(name)) throw std::invalid_argument("weight file: missing tensor '" + name + "'");
      const auto& entry = tensors.at(name);
      const auto shape = entry.at("shape").get<std::vector<long>>();
      if (shape.size() != 2 || shape[0] != t.rows() || shape[1] != t.cols())
        throw std::invalid_argument("weight file: tensor '" + name + "' has shape mismatch (expected [" +
                                    std::to_string(t.rows()) + ", " + std::to_string(t.cols()) + "])");
      const auto data = entry.at("data").get<std::vector<double>>();
      if (static_cast<Eigen::Index>(data.size()) != t.size())
        throw std::invalid_argument("weight file: tensor '" + name + "' has " +
                                    std::to_string(data.size()) + " values, shape needs " +
                                    std::to_string(t.size()));
      std::copy(data.begin(), data.end(), t.data());
    });
    for (const auto& [name, _] : tensors.items())
      if (!expected.count(name)) throw std::invalid_argument("weight file: unknown tensor '" + name + "'");
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("weight file: malformed: ") + e.what());
  }
}

void save_params(const std::string& path, const NetworkConfig& cfg, const NetworkParams<double>& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write weight file '" + path + "'");
  out << params_to_json(cfg, p);
}

LoadedNetwork load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weight file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return params_from_json(buf.str());
}

}  // namespace sfjsp::nn
