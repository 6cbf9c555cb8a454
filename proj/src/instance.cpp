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

#include "sfjsp/instance.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sfjsp {

Instance::Instance(std::string name, int num_machines, std::vector<Job> jobs)
    : name_(std::move(name)), num_machines_(num_machines), jobs_(std::move(jobs)) {
  if (num_machines_ < 1) throw std::invalid_argument("instance needs at least one machine");
  if (jobs_.empty()) throw std::invalid_argument("instance needs at least one job");
  op_pair_begin_.push_back(0);
  for (int j = 0; j < num_jobs(); ++j) {
    const auto& ops = jobs_[j].operations;
    if (ops.empty())
      throw std::invalid_argument("job " + std::to_string(j) + " has no operations");
    job_first_op_.push_back(static_cast<int>(op_job_.size()));
    for (int i = 0; i < static_cast<int>(ops.size()); ++i) {
      const int op = static_cast<int>(op_job_.size());
      op_job_.push_back(j);
      op_index_.push_back(i);
      const auto& alts = ops[i].alternatives;
      if (alts.empty())
        throw std::invalid_argument("operation (" + std::to_string(j) + "," +
                                    std::to_string(i) + ") has no compatible machine");
      std::vector<bool> seen(num_machines_, false);
      for (const auto& alt : alts) {
        if (alt.machine < 0 || alt.machine >= num_machines_)
          throw std::invalid_argument("machine index out of range in operation (" +
                                      std::to_string(j) + "," + std::to_string(i) + ")");
        if (seen[alt.machine])
          throw std::invalid_argument("duplicate machine in operation (" + std::to_string(j) +
                                      "," + std::to_string(i) + ")");
        seen[alt.machine] = true;
        if (!(alt.time > 0.0) || !std::isfinite(alt.time))
          throw std::invalid_argument("nonpositive processing time in operation (" +
                                      std::to_string(j) + "," + std::to_string(i) + ")");
        pair_op_.push_back(op);
        pair_machine_.push_back(alt.machine);
        times_.push_back(alt.time);
      }
      op_pair_begin_.push_back(static_cast<int>(pair_op_.size()));
    }
  }
}

int Instance::pair_id(int op, int machine) const {
  for (int p = op_pair_begin_[op]; p < op_pair_begin_[op + 1]; ++p)
    if (pair_machine_[p] == machine) return p;
  return -1;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long parse_integer(const std::string& tok, int line_no, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected integer " + what +
                     ", got '" + tok + "'");
  return value;
}

double parse_real(const std::string& tok, int line_no, const char* what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected number " + what +
                     ", got '" + tok + "'");
  return value;
}

std::string format_number(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Instance parse_standard_fjsp(const std::string& text, std::string name) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    header = tokenize(line);
  }
  if (header.size() < 2 || header.size() > 3)
    throw ParseError("line " + std::to_string(std::max(line_no, 1)) +
                     ": malformed header, expected 'jobs machines [avg]'");
  const long n = parse_integer(header[0], line_no, "job count");
  const long m = parse_integer(header[1], line_no, "machine count");
  if (header.size() == 3) parse_real(header[2], line_no, "average flexibility");
  if (n < 1 || m < 1)
    throw ParseError("line " + std::to_string(line_no) +
                     ": malformed header, counts must be positive");

  std::vector<Job> jobs;
  while (static_cast<long>(jobs.size()) < n) {
    if (!std::getline(in, line))
      throw ParseError("line " + std::to_string(line_no + 1) + ": expected " +
                       std::to_string(n) + " job lines, found " + std::to_string(jobs.size()));
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const std::string& {
      if (pos >= toks.size())
        throw ParseError("line " + std::to_string(line_no) + ": truncated line, missing " +
                         what);
      return toks[pos++];
    };
    Job job;
    const long num_ops = parse_integer(next("operation count"), line_no, "operation count");
    if (num_ops < 1)
      throw ParseError("line " + std::to_string(line_no) + ": job needs at least one operation");
    for (long o = 0; o < num_ops; ++o) {
      Operation op;
      const long k = parse_integer(next("machine count"), line_no, "machine count");
      if (k < 1 || k > m)
        throw ParseError("line " + std::to_string(line_no) + ": invalid compatible-machine count " +
                         std::to_string(k));
      for (long a = 0; a < k; ++a) {
        const long machine = parse_integer(next("machine index"), line_no, "machine index");
        if (machine < 1 || machine > m)
          throw ParseError("line " + std::to_string(line_no) + ": machine index " +
                           std::to_string(machine) + " out of range 1.." + std::to_string(m));
        const double t = parse_real(next("processing time"), line_no, "processing time");
        if (!(t > 0.0))
          throw ParseError("line " + std::to_string(line_no) + ": nonpositive processing time");
        for (const auto& prev : op.alternatives)
          if (prev.machine == machine - 1)
            throw ParseError("line " + std::to_string(line_no) + ": machine " +
                             std::to_string(machine) + " listed twice for one operation");
        op.alternatives.push_back({static_cast<int>(machine - 1), t});
      }
      job.operations.push_back(std::move(op));
    }
    if (pos != toks.size())
      throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after job");
    jobs.push_back(std::move(job));
  }
  return Instance(std::move(name), static_cast<int>(m), std::move(jobs));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  const double avg = static_cast<double>(inst.num_pairs()) / inst.num_ops();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", avg);
  out << inst.num_jobs() << ' ' << inst.num_machines() << ' ' << buf << '\n';
  for (const auto& job : inst.jobs()) {
    out << job.operations.size();
    for (const auto& op : job.operations) {
      out << "  " << op.alternatives.size();
      for (const auto& alt : op.alternatives)
        out << ' ' << (alt.machine + 1) << ' ' << format_number(alt.time);
    }
    out << '\n';
  }
  return out.str();
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_standard_fjsp(buf.str(), std::filesystem::path(path).stem().string());
}

std::string instance_class(const std::string& name) {
  const auto pos = name.find_last_of('_');
  if (pos == std::string::npos || pos + 1 == name.size()) return name;
  for (std::size_t i = pos + 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return name;
  return name.substr(0, pos);
}

}  // namespace sfjsp
