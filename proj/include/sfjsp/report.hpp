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

#ifndef SFJSP_REPORT_HPP_
#define SFJSP_REPORT_HPP_

#include <string>
#include <vector>

namespace sfjsp {

/// One result line. Missing baseline/gap are NaN and print as empty cells.
struct ResultRow {
  std::string instance;
  std::string instance_class;
  std::string policy;
  std::string mode;  // greedy | sample | exact
  int k = 1;
  unsigned long long seed = 0;
  std::string stage;      // solve | eval
  std::string objective;  // mean | var0.95
  double value = 0.0;
  double baseline = 0.0;
  double gap = 0.0;
  double time_s = 0.0;

  ResultRow();
  bool operator==(const ResultRow&) const;
};

double relative_gap(double value, double baseline);

/// Fills baseline and gap from rows matching on (instance, stage, objective).
/// Rows without a match keep NaN. Returns the number matched.
int apply_baseline(std::vector<ResultRow>& rows, const std::vector<ResultRow>& baseline);

const std::vector<std::string>& result_columns();
std::string rows_to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> rows_from_csv(const std::string& text);
std::string rows_to_json(const std::vector<ResultRow>& rows);

struct AggregateRow {
  std::string stage;
  std::string objective;
  std::string policy;
  std::string instance_class;
  int count = 0;
  double mean_value = 0.0;
  double mean_gap = 0.0;  // NaN when no row had a baseline
  double mean_time_s = 0.0;
};

/// Averages per (stage, objective, policy, instance class), groups in order
/// of first appearance.
std::vector<AggregateRow> aggregate_report(const std::vector<ResultRow>& rows);
std::string aggregate_to_csv(const std::vector<AggregateRow>& rows);
std::string aggregate_to_json(const std::vector<AggregateRow>& rows);

}  // namespace sfjsp

#endif  // SFJSP_REPORT_HPP_
