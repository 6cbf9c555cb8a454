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

#include "sfjsp/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

#include "sfjsp/instance.hpp"

namespace sfjsp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double x) {
  if (std::isnan(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_num(const std::string& s, int line) {
  if (s.empty()) return kNaN;
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size())
    throw ParseError("line " + std::to_string(line) + ": bad number '" + s + "'");
  return x;
}

std::string text_cell(const std::string& s) {
  if (s.find_first_of(",\"\n\r") != std::string::npos)
    throw std::invalid_argument("result field contains a separator: '" + s + "'");
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

nlohmann::json json_num(double x) { return std::isnan(x) ? nlohmann::json() : nlohmann::json(x); }

}  // namespace

ResultRow::ResultRow() : baseline(kNaN), gap(kNaN) {}

bool ResultRow::operator==(const ResultRow& o) const {
  auto same = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
  return instance == o.instance && instance_class == o.instance_class && policy == o.policy &&
         mode == o.mode && k == o.k && seed == o.seed && stage == o.stage &&
         objective == o.objective && same(value, o.value) && same(baseline, o.baseline) &&
         same(gap, o.gap) && same(time_s, o.time_s);
}

double relative_gap(double value, double baseline) {
  if (baseline == 0.0) throw std::invalid_argument("relative_gap: zero baseline");
  return (value - baseline) / baseline;
}

int apply_baseline(std::vector<ResultRow>& rows, const std::vector<ResultRow>& baseline) {
  std::map<std::tuple<std::string, std::string, std::string>, double> lookup;
  for (const auto& b : baseline) lookup.emplace(std::tuple{b.instance, b.stage, b.objective}, b.value);
  int matched = 0;
  for (auto& r : rows) {
    const auto it = lookup.find({r.instance, r.stage, r.objective});
    if (it == lookup.end()) continue;
    r.baseline = it->second;
    r.gap = relative_gap(r.value, r.baseline);
    ++matched;
  }
  return matched;
}

const std::vector<std::string>& result_columns() {
  static const std::vector<std::string> cols = {
      "instance", "class", "policy", "mode",     "k",   "seed",
      "stage",    "objective", "value", "baseline", "gap", "time_s"};
  return cols;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::string out;
  for (std::size_t c = 0; c < result_columns().size(); ++c)
    out += (c ? "," : "") + result_columns()[c];
  out += '\n';
  for (const auto& r : rows) {
    out += text_cell(r.instance) + ',' + text_cell(r.instance_class) + ',' + text_cell(r.policy) +
           ',' + text_cell(r.mode) + ',' + std::to_string(r.k) + ',' + std::to_string(r.seed) +
           ',' + text_cell(r.stage) + ',' + text_cell(r.objective) + ',' + num(r.value) + ',' +
           num(r.baseline) + ',' + num(r.gap) + ',' + num(r.time_s) + '\n';
  }
  return out;
}

std::vector<ResultRow> rows_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty results file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (split(line) != result_columns()) throw ParseError("line 1: unexpected results header");
  std::vector<ResultRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != result_columns().size())
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(result_columns().size()) + " fields, got " +
                       std::to_string(f.size()));
    ResultRow r;
    r.instance = f[0];
    r.instance_class = f[1];
    r.policy = f[2];
    r.mode = f[3];
    r.k = static_cast<int>(parse_num(f[4], lineno));
    r.seed = static_cast<unsigned long long>(std::stoull(f[5]));
    r.stage = f[6];
    r.objective = f[7];
    r.value = parse_num(f[8], lineno);
    r.baseline = parse_num(f[9], lineno);
    r.gap = parse_num(f[10], lineno);
    r.time_s = parse_num(f[11], lineno);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string rows_to_json(const std::vector<ResultRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"instance", r.instance},
                   {"class", r.instance_class},
                   {"policy", r.policy},
                   {"mode", r.mode},
                   {"k", r.k},
                   {"seed", r.seed},
                   {"stage", r.stage},
                   {"objective", r.objective},
                   {"value", json_num(r.value)},
                   {"baseline", json_num(r.baseline)},
                   {"gap", json_num(r.gap)},
                   {"time_s", json_num(r.time_s)}});
  }
  return out.dump(2) + "\n";
}

std::vector<AggregateRow> aggregate_report(const std::vector<ResultRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("aggregate_report: no rows");
  struct Acc {
    AggregateRow row;
    double value = 0.0, gap = 0.0, time = 0.0;
    int gaps = 0;
  };
  std::vector<Acc> groups;
  std::map<std::tuple<std::string, std::string, std::string, std::string>, std::size_t> index;
  for (const auto& r : rows) {
    const auto key = std::tuple{r.stage, r.objective, r.policy, r.instance_class};
    auto [it, fresh] = index.emplace(key, groups.size());
    if (fresh) {
      Acc a;
      a.row.stage = r.stage;
      a.row.objective = r.objective;
      a.row.policy = r.policy;
      a.row.instance_class = r.instance_class;
      groups.push_back(a);
    }
    Acc& a = groups[it->second];
    ++a.row.count;
    a.value += r.value;
    a.time += std::isnan(r.time_s) ? 0.0 : r.time_s;
    if (!std::isnan(r.gap)) {
      a.gap += r.gap;
      ++a.gaps;
    }
  }
  std::vector<AggregateRow> out;
  for (auto& a : groups) {
    a.row.mean_value = a.value / a.row.count;
    a.row.mean_time_s = a.time / a.row.count;
    a.row.mean_gap = a.gaps ? a.gap / a.gaps : kNaN;
    out.push_back(a.row);
  }
  return out;
}

std::string aggregate_to_csv(const std::vector<AggregateRow>& rows) {
  std::string out = "stage,objective,policy,class,count,mean_value,mean_gap,mean_time_s\n";
  for (const auto& r : rows)
    out += text_cell(r.stage) + ',' + text_cell(r.objective) + ',' + text_cell(r.policy) + ',' +
           text_cell(r.instance_class) + ',' + std::to_string(r.count) + ',' + num(r.mean_value) +
           ',' + num(r.mean_gap) + ',' + num(r.mean_time_s) + '\n';
  return out;
}

std::string aggregate_to_json(const std::vector<AggregateRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"stage", r.stage},
                   {"objective", r.objective},
                   {"policy", r.policy},
                   {"class", r.instance_class},
                   {"count", r.count},
                   {"mean_value", json_num(r.mean_value)},
                   {"mean_gap", json_num(r.mean_gap)},
                   {"mean_time_s", json_num(r.mean_time_s)}});
  return out.dump(2) + "\n";
}

}  // namespace sfjsp
