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

#include "sfjsp/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "sfjsp/generate.hpp"
#include "sfjsp/nn/params_io.hpp"
#include "sfjsp/oracle.hpp"
#include "sfjsp/parallel.hpp"
#include "sfjsp/report.hpp"
#include "sfjsp/rollout.hpp"
#include "sfjsp/spm_policy.hpp"
#include "sfjsp/stats.hpp"
#include "sfjsp/stochastic.hpp"

namespace sfjsp {

namespace fs = std::filesystem;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct ObjectiveOptions {
  std::string kind = "var";
  double alpha = 0.95;

  ObjectiveSpec spec() const {
    ObjectiveSpec s = kind == "mean" ? ObjectiveSpec::mean() : ObjectiveSpec::var(alpha);
    s.validate();
    return s;
  }
};

void add_objective(CLI::App* cmd, ObjectiveOptions& o) {
  cmd->add_option("--objective", o.kind, "mean or var")
      ->check(CLI::IsMember({"mean", "var"}))
      ->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "VaR level")->capture_default_str();
}

void add_threads(CLI::App* cmd, int& threads) {
  cmd->add_option("--threads", threads, "worker threads")
      ->envname("SFJSP_THREADS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

struct PolicyOptions {
  std::string name = "spt";
  std::string weights;
  std::string encoder = "linear";
  std::string mode = "greedy";
  int k = 100;

  std::string label() const { return mode == "sample" ? name + "-s" + std::to_string(k) : name; }
  std::unique_ptr<Policy> make() const {
    if (name == "spm") {
      if (weights.empty()) throw std::invalid_argument("policy spm needs --weights");
      return std::make_unique<SpmPolicy>(SpmPolicy::from_file(weights));
    }
    return make_builtin_policy(name);
  }
};

void add_policy(CLI::App* cmd, PolicyOptions& p) {
  cmd->add_option("--policy", p.name, "fifo, mor, mwkr, spt, random or spm")
      ->capture_default_str();
  cmd->add_option("--weights", p.weights, "weight file for the spm policy");
  cmd->add_option("--encoder", p.encoder, "base encoder of the spm policy")
      ->check(CLI::IsMember({"linear"}))
      ->capture_default_str();
  cmd->add_option("--mode", p.mode, "greedy or sample")
      ->check(CLI::IsMember({"greedy", "sample"}))
      ->capture_default_str();
  cmd->add_option("--k", p.k, "rollouts in sample mode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::string schedule_file(const std::string& name, const std::string& label) {
  return name + "." + label + ".schedule.json";
}

ResultRow make_row(const Instance& inst, const std::string& label, const std::string& mode, int k,
                   std::uint64_t seed, const std::string& stage, const ObjectiveSpec& obj) {
  ResultRow r;
  r.instance = inst.name();
  r.instance_class = instance_class(inst.name());
  r.policy = label;
  r.mode = mode;
  r.k = k;
  r.seed = seed;
  r.stage = stage;
  r.objective = obj.label();
  return r;
}

void finish_rows(std::vector<ResultRow>& rows, const std::string& baseline,
                 const fs::path& results, bool json, std::ostream& out) {
  if (!baseline.empty()) apply_baseline(rows, rows_from_csv(read_text(baseline)));
  write_text(results, rows_to_csv(rows));
  if (json) {
    fs::path j = results;
    write_text(j.replace_extension(".json"), rows_to_json(rows));
  }
  out << "wrote " << rows.size() << " rows to " << results.string() << "\n";
}

// --- gen -----------------------------------------------------------------

struct GenOptions {
  std::string scheme = "sd3";
  int jobs = 10;
  int machines = 5;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out_dir;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const TimeScheme scheme = o.scheme == "sd1" ? TimeScheme::SD1 : TimeScheme::SD3;
  const Stream root(o.seed);
  for (int i = 0; i < o.count; ++i) {
    const auto cfg = GeneratorConfig::defaults(scheme, o.jobs, o.machines, root.child(i).key());
    const Instance g = generate(cfg);
    const std::string name =
        o.scheme + "_" + std::to_string(o.jobs) + "x" + std::to_string(o.machines) + "_" +
        std::to_string(i);
    const Instance inst(name, g.num_machines(), g.jobs());
    const fs::path path = fs::path(o.out_dir) / (name + ".fjs");
    write_text(path, serialize_instance(inst));
    out << path.string() << "\n";
  }
  return 0;
}

// --- annotate ------------------------------------------------------------

struct AnnotateOptions {
  std::vector<std::string> inputs;
  double cv_lo = 0.1;
  double cv_hi = 0.5;
  std::string families = "lognormal";
  std::uint64_t seed = 0;
  std::string out_dir;
};

int cmd_annotate(const AnnotateOptions& o, std::ostream& out) {
  const FamilyMix mix = parse_family_mix(o.families);
  for (const auto& in : o.inputs) {
    const Instance inst = read_stochastic_file(in).base();
    const auto si = annotate_stochastic(inst, o.cv_lo, o.cv_hi, mix, instance_seed(o.seed, inst.name()));
    const fs::path path = fs::path(o.out_dir) / (inst.name() + ".json");
    write_text(path, serialize_json(si));
    out << path.string() << "\n";
  }
  return 0;
}

// --- solve ---------------------------------------------------------------

struct SolveOptions {
  std::vector<std::string> inputs;
  PolicyOptions policy;
  ObjectiveOptions objective;
  int n_scn = 100;
  int n_rew = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out_dir = ".";
  std::string results;
  std::string baseline;
  bool gantt = false;
  bool json = false;
  bool no_timing = false;
};

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  const ObjectiveSpec obj = o.objective.spec();
  const auto policy = o.policy.make();
  const std::string label = o.policy.label();
  std::vector<ResultRow> rows(o.inputs.size());
  parallel_for(static_cast<int>(o.inputs.size()), o.threads, [&](int i) {
    const StochasticInstance si = read_stochastic_file(o.inputs[i]);
    const Instance& inst = si.base();
    const std::uint64_t iseed = instance_seed(o.seed, inst.name());
    ScenarioConfig scfg;
    scfg.n_scn = o.n_scn;
    scfg.n_rew = o.n_rew;
    scfg.seed = iseed;
    InferenceConfig icfg;
    icfg.mode = o.policy.mode == "sample" ? RolloutMode::Kind::Sample : RolloutMode::Kind::Greedy;
    icfg.k = o.policy.k;
    icfg.objective = obj;
    icfg.seed = Stream(iseed).child(3).key();

    const auto t0 = std::chrono::steady_clock::now();
    const InferenceResult res = infer(si, scfg, *policy, icfg);
    const double elapsed = seconds_since(t0);

    const fs::path dir(o.out_dir);
    write_text(dir / schedule_file(inst.name(), label), schedule_to_json(inst, res.best));
    if (o.gantt)
      write_text(dir / (inst.name() + "." + label + ".gantt.csv"),
                 schedule_to_gantt_csv(inst, res.best, inst.times()));
    ResultRow r = make_row(inst, label, o.policy.mode, icfg.mode == RolloutMode::Kind::Sample ? o.policy.k : 1,
                           o.seed, "solve", obj);
    r.value = res.objective;
    r.time_s = o.no_timing ? 0.0 : elapsed;
    rows[i] = std::move(r);
  });
  const fs::path results = o.results.empty() ? fs::path(o.out_dir) / ("solve." + label + ".csv")
                                             : fs::path(o.results);
  finish_rows(rows, o.baseline, results, o.json, out);
  return 0;
}

// --- eval ----------------------------------------------------------------

struct EvalOptions {
  std::vector<std::string> inputs;
  PolicyOptions policy;
  ObjectiveOptions objective;
  int n_eval = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string schedule_dir = ".";
  std::string results;
  std::string baseline;
  bool json = false;
  bool no_timing = false;
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const ObjectiveSpec obj = o.objective.spec();
  const std::string label = o.policy.label();
  std::vector<ResultRow> rows(o.inputs.size());
  parallel_for(static_cast<int>(o.inputs.size()), o.threads, [&](int i) {
    const StochasticInstance si = read_stochastic_file(o.inputs[i]);
    const Instance& inst = si.base();
    const fs::path path = fs::path(o.schedule_dir) / schedule_file(inst.name(), label);
    const Schedule sched = schedule_from_json(inst, read_text(path.string()));
    const auto t0 = std::chrono::steady_clock::now();
    const auto scenarios =
        sample_set(si, instance_seed(o.seed, inst.name()), ScenarioStream::Eval, o.n_eval);
    const double value = schedule_objective(inst, sched, scenarios, obj);
    const double elapsed = seconds_since(t0);
    const bool sampled = o.policy.mode == "sample";
    ResultRow r = make_row(inst, label, label == "oracle" ? "exact" : o.policy.mode,
                           sampled ? o.policy.k : 1, o.seed, "eval", obj);
    r.value = value;
    r.time_s = o.no_timing ? 0.0 : elapsed;
    rows[i] = std::move(r);
  });
  const fs::path results = o.results.empty()
                               ? fs::path(o.schedule_dir) / ("eval." + label + ".csv")
                               : fs::path(o.results);
  finish_rows(rows, o.baseline, results, o.json, out);
  return 0;
}

// --- oracle --------------------------------------------------------------

struct OracleOptions {
  std::vector<std::string> inputs;
  ObjectiveOptions objective;
  bool deterministic = false;
  int n_rew = 1000;
  std::uint64_t seed = 0;
  double budget = kDefaultOracleBudget;
  int threads = 1;
  std::string out_dir;
  bool no_timing = false;
};

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  const ObjectiveSpec obj = o.objective.spec();
  std::vector<ResultRow> rows;
  for (const auto& in : o.inputs) {
    const StochasticInstance si = read_stochastic_file(in);
    const Instance& inst = si.base();
    const auto t0 = std::chrono::steady_clock::now();
    OracleResult res;
    if (o.deterministic) {
      res = brute_force_det(inst, o.budget, o.threads);
    } else {
      const auto scenarios = sample_set(si, instance_seed(o.seed, inst.name()),
                                        ScenarioStream::Reward, o.n_rew);
      res = brute_force_stoch(si, scenarios, obj, o.budget, o.threads);
    }
    const double elapsed = seconds_since(t0);
    const std::string json = schedule_to_json(inst, res.schedule);
    out << inst.name() << " objective " << res.objective << "\n" << json;
    if (json.empty() || json.back() != '\n') out << "\n";
    ResultRow r = make_row(inst, "oracle", "exact", 1, o.seed, "solve",
                           o.deterministic ? ObjectiveSpec::mean() : obj);
    if (o.deterministic) r.objective = "makespan";
    r.value = res.objective;
    r.time_s = o.no_timing ? 0.0 : elapsed;
    rows.push_back(std::move(r));
    if (!o.out_dir.empty()) write_text(fs::path(o.out_dir) / schedule_file(inst.name(), "oracle"), json);
  }
  if (!o.out_dir.empty()) write_text(fs::path(o.out_dir) / "solve.oracle.csv", rows_to_csv(rows));
  return 0;
}

// --- report / ttest ------------------------------------------------------

struct ReportOptions {
  std::vector<std::string> inputs;
  std::string baseline;
  std::string format = "csv";
  std::string out_path;
};

int cmd_report(const ReportOptions& o, std::ostream& out) {
  std::vector<ResultRow> rows;
  for (const auto& in : o.inputs) {
    auto part = rows_from_csv(read_text(in));
    rows.insert(rows.end(), part.begin(), part.end());
  }
  if (!o.baseline.empty()) apply_baseline(rows, rows_from_csv(read_text(o.baseline)));
  const auto table = aggregate_report(rows);
  const std::string text = o.format == "json" ? aggregate_to_json(table) : aggregate_to_csv(table);
  if (o.out_path.empty())
    out << text;
  else
    write_text(o.out_path, text);
  return 0;
}

struct TTestOptions {
  std::string a, b;
};

int cmd_ttest(const TTestOptions& o, std::ostream& out) {
  const auto ra = rows_from_csv(read_text(o.a));
  const auto rb = rows_from_csv(read_text(o.b));
  std::map<std::tuple<std::string, std::string, std::string>, double> lookup;
  for (const auto& r : rb) lookup.emplace(std::tuple{r.instance, r.stage, r.objective}, r.value);
  std::vector<double> xa, xb;
  for (const auto& r : ra) {
    const auto it = lookup.find({r.instance, r.stage, r.objective});
    if (it == lookup.end()) continue;
    xa.push_back(r.value);
    xb.push_back(it->second);
  }
  const TTestResult t = paired_t_test(xa, xb);
  char buf[160];
  std::snprintf(buf, sizeof buf, "n,t,p\n%zu,%.17g,%.17g\n", xa.size(), t.t, t.p);
  out << buf;
  return 0;
}

// --- init-weights --------------------------------------------------------

struct InitOptions {
  nn::NetworkConfig config;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_init_weights(const InitOptions& o, std::ostream& out) {
  o.config.validate();
  nn::save_params(o.out_path, o.config, nn::init_params<double>(o.config, o.seed));
  out << o.out_path << "\n";
  return 0;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return Stream(seed).child(h).key();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic flexible job shop scheduling toolkit", "sfjsp"};
  app.set_config("--config", "", "read options from a TOML file");
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "generate random instances");
  g->add_option("--scheme", gen.scheme)->check(CLI::IsMember({"sd1", "sd3"}))->capture_default_str();
  g->add_option("--jobs", gen.jobs)->check(CLI::PositiveNumber)->capture_default_str();
  g->add_option("--machines", gen.machines)->check(CLI::PositiveNumber)->capture_default_str();
  g->add_option("--count", gen.count)->check(CLI::PositiveNumber)->capture_default_str();
  g->add_option("--seed", gen.seed)->capture_default_str();
  g->add_option("--out-dir", gen.out_dir)->required();

  AnnotateOptions ann;
  auto* a = app.add_subcommand("annotate", "attach processing-time distributions");
  a->add_option("inputs", ann.inputs)->required()->check(CLI::ExistingFile);
  a->add_option("--cv-lo", ann.cv_lo)->capture_default_str();
  a->add_option("--cv-hi", ann.cv_hi)->capture_default_str();
  a->add_option("--families", ann.families, "e.g. lognormal:0.5,gamma:0.5")->capture_default_str();
  a->add_option("--seed", ann.seed)->capture_default_str();
  a->add_option("--out-dir", ann.out_dir)->required();

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "construct schedules with a policy");
  s->add_option("inputs", solve.inputs)->required()->check(CLI::ExistingFile);
  add_policy(s, solve.policy);
  add_objective(s, solve.objective);
  s->add_option("--n-scn", solve.n_scn)->check(CLI::PositiveNumber)->capture_default_str();
  s->add_option("--n-rew", solve.n_rew)->check(CLI::PositiveNumber)->capture_default_str();
  s->add_option("--seed", solve.seed)->capture_default_str();
  add_threads(s, solve.threads);
  s->add_option("--out-dir", solve.out_dir)->capture_default_str();
  s->add_option("--results", solve.results, "results CSV path");
  s->add_option("--baseline", solve.baseline, "results CSV used for gaps")->check(CLI::ExistingFile);
  s->add_flag("--gantt", solve.gantt, "also write Gantt CSVs");
  s->add_flag("--json", solve.json, "also write results as JSON");
  s->add_flag("--no-timing", solve.no_timing, "write zero wall times");

  EvalOptions ev;
  auto* e = app.add_subcommand("eval", "evaluate stored schedules on fresh scenarios");
  e->add_option("inputs", ev.inputs)->required()->check(CLI::ExistingFile);
  add_policy(e, ev.policy);
  add_objective(e, ev.objective);
  e->add_option("--n-eval", ev.n_eval)->check(CLI::PositiveNumber)->capture_default_str();
  e->add_option("--seed", ev.seed)->capture_default_str();
  add_threads(e, ev.threads);
  e->add_option("--schedule-dir", ev.schedule_dir)->capture_default_str();
  e->add_option("--results", ev.results, "results CSV path");
  e->add_option("--baseline", ev.baseline, "results CSV used for gaps")->check(CLI::ExistingFile);
  e->add_flag("--json", ev.json, "also write results as JSON");
  e->add_flag("--no-timing", ev.no_timing, "write zero wall times");

  OracleOptions orc;
  auto* o = app.add_subcommand("oracle", "exact solution by enumeration");
  o->add_option("inputs", orc.inputs)->required()->check(CLI::ExistingFile);
  add_objective(o, orc.objective);
  o->add_flag("--det", orc.deterministic, "minimize the deterministic makespan");
  o->add_option("--n-rew", orc.n_rew)->check(CLI::PositiveNumber)->capture_default_str();
  o->add_option("--seed", orc.seed)->capture_default_str();
  o->add_option("--budget", orc.budget)->capture_default_str();
  add_threads(o, orc.threads);
  o->add_option("--out-dir", orc.out_dir, "write schedules and solve.oracle.csv here");
  o->add_flag("--no-timing", orc.no_timing, "write zero wall times");

  ReportOptions rep;
  auto* r = app.add_subcommand("report", "average result rows per policy and class");
  r->add_option("inputs", rep.inputs)->required()->check(CLI::ExistingFile);
  r->add_option("--baseline", rep.baseline)->check(CLI::ExistingFile);
  r->add_option("--format", rep.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  r->add_option("--out", rep.out_path);

  TTestOptions tt;
  auto* t = app.add_subcommand("ttest", "paired t-test between two result files");
  t->add_option("a", tt.a)->required()->check(CLI::ExistingFile);
  t->add_option("b", tt.b)->required()->check(CLI::ExistingFile);

  InitOptions init;
  auto* w = app.add_subcommand("init-weights", "write randomly initialized network weights");
  w->add_option("--heads", init.config.attention.heads)->capture_default_str();
  w->add_option("--dim", init.config.attention.dim)->capture_default_str();
  w->add_option("--inducing", init.config.inducing_points)->capture_default_str();
  w->add_option("--embed", init.config.embed_dim)->capture_default_str();
  w->add_option("--hidden", init.config.actor_hidden)->capture_default_str();
  w->add_option("--seed", init.seed)->capture_default_str();
  w->add_option("--out", init.out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex, out, err);
  }

  try {
    if (*g) return cmd_gen(gen, out);
    if (*a) return cmd_annotate(ann, out);
    if (*s) return cmd_solve(solve, out);
    if (*e) return cmd_eval(ev, out);
    if (*o) return cmd_oracle(orc, out);
    if (*r) return cmd_report(rep, out);
    if (*t) return cmd_ttest(tt, out);
    if (*w) {
      init.config.critic_hidden = init.config.actor_hidden;
      return cmd_init_weights(init, out);
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace sfjsp
