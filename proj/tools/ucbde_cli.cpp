// Command-line front end: run, sweep-m, timing, list-functions, list-policies.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ucbde/benchmarks.hpp"
#include "ucbde/harness.hpp"
#include "ucbde/policies.hpp"

namespace {

using ucbde::ExperimentConfig;

// Experiment flags are collected as text and applied through the same
// key=value path as config files, so both spellings behave identically.
struct ExperimentFlags {
  std::string config_path;
  std::vector<std::pair<std::string, std::unique_ptr<std::string>>> values;
  std::vector<CLI::Option*> options;

  void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    values.emplace_back(key, std::make_unique<std::string>());
    options.push_back(app->add_option(flag, *values.back().second, help));
  }

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "flat key=value config file (flags override it)");
    add(app, "--function", "function", "benchmark function (see list-functions)");
    add(app, "--dim", "dim", "dimension (required for alpine2 / gsobol)");
    add(app, "--policy", "policy", "batch policy (see list-policies)");
    add(app, "--T", "T", "iterations (default 10*dim)");
    add(app, "--n-init", "n_init", "initial design size (default 3*dim)");
    add(app, "--B", "B", "batch size (default 10)");
    add(app, "--M", "M", "Sobol candidate pool size (default 10*T*B)");
    add(app, "--repeats", "repeats", "seeded repeats (default 20)");
    add(app, "--seed", "seed", "base seed (default 0)");
    add(app, "--noise-var", "noise_var", "GP noise variance on standardized outputs (default 1e-4)");
    add(app, "--delta", "delta", "UCB confidence parameter (default 0.1)");
    add(app, "--beta", "beta", "fixed UCB beta, overriding the schedule");
    add(app, "--n-starts", "n_starts", "pattern-search starts (default 5)");
    add(app, "--max-evals", "max_evals", "evaluations per start (default 50*dim)");
    add(app, "--step-init", "step_init", "initial pattern-search step (default 0.05)");
    add(app, "--step-min", "step_min", "final pattern-search step (default 1e-4)");
    add(app, "--latency-ms", "latency_ms", "simulated latency per evaluation in ms (default 0)");
    add(app, "--parallel-eval", "parallel_eval", "evaluate each batch concurrently (default true)");
    add(app, "--sobol-table", "sobol_table", "direction-number file (default built-in)");
    add(app, "--out", "out", "output path (default stdout)");
    add(app, "--format", "format", "csv or json (default csv)");
  }

  ExperimentConfig build() const {
    ExperimentConfig cfg;
    if (!config_path.empty()) ucbde::apply_config_file(cfg, config_path);
    for (std::size_t i = 0; i < values.size(); ++i)
      if (options[i]->count() > 0) ucbde::apply_setting(cfg, values[i].first, *values[i].second);
    return cfg;
  }
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw ucbde::Error("cannot write '" + path + "'");
  return file;
}

void print_summary(const ucbde::Summary& s, const std::string& label) {
  std::cerr << label << ": final mean " << s.final_mean << " +/- " << s.final_std_error << " over "
            << s.completed_repeats << " repeats";
  if (s.final_regret_mean) std::cerr << ", mean regret " << *s.final_regret_mean;
  std::cerr << ", mean selection " << s.selection_seconds_mean << " s/batch\n";
}

int run_command(const ExperimentFlags& flags) {
  const ExperimentConfig cfg = flags.build();
  const auto format = ucbde::parse_format(cfg.format);
  ucbde::resolve(cfg);  // fail before opening any output
  std::ofstream file;
  std::ostream& out = open_output(cfg.output_path, file);
  ucbde::RowSink sink;
  if (format == ucbde::OutputFormat::Csv) {
    out << ucbde::kRunCsvHeader << '\n' << std::flush;
    sink = [&out](const ucbde::RunRow& row) { out << ucbde::csv_row(row) << '\n' << std::flush; };
  }
  const ucbde::RunRecord record = ucbde::run_experiment(cfg, sink);
  if (format == ucbde::OutputFormat::Json) out << ucbde::to_json(record).dump(2) << '\n';
  if (!out) throw ucbde::Error("failed writing output");
  print_summary(ucbde::summarize(record), cfg.policy);
  for (const auto& info : record.repeats)
    if (info.failed) return 3;
  return 0;
}

int sweep_command(const ExperimentFlags& flags, const std::vector<long long>& m_values,
                  const std::vector<double>& m_factors, bool continuous) {
  const ExperimentConfig cfg = flags.build();
  const auto format = ucbde::parse_format(cfg.format);
  const ucbde::ResolvedConfig rc = ucbde::resolve(cfg);
  std::vector<long long> ms = m_values;
  if (ms.empty())
    for (double f : m_factors) ms.push_back(static_cast<long long>(f * rc.T * rc.B));
  const ucbde::SweepResult result = ucbde::sweep_m(cfg, ms, continuous);
  std::ofstream file;
  std::ostream& out = open_output(cfg.output_path, file);
  if (format == ucbde::OutputFormat::Csv)
    ucbde::write_sweep_csv(out, result);
  else
    out << ucbde::to_json(result).dump(2) << '\n';
  for (const auto& arm : result.arms) print_summary(arm.summary, arm.label);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batch Bayesian optimization with UCB and distance exploration"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run one experiment and write per-iteration records");
  ExperimentFlags run_flags;
  run_flags.attach(run);

  auto* sweep = app.add_subcommand("sweep-m", "compare Sobol pool sizes against continuous DE");
  ExperimentFlags sweep_flags;
  sweep_flags.attach(sweep);
  std::vector<long long> m_values;
  std::vector<double> m_factors{1, 10, 20};
  bool no_continuous = false;
  sweep->add_option("--m-values", m_values, "explicit pool sizes")->delimiter(',');
  sweep->add_option("--m-factors", m_factors, "pool sizes as multiples of T*B (default 1,10,20)")->delimiter(',');
  sweep->add_flag("--no-continuous", no_continuous, "skip the continuous-DE arm");

  auto* timing = app.add_subcommand("timing", "batch-selection time per policy, batch size and dimension");
  ucbde::TimingConfig tcfg;
  std::string timing_out, timing_format = "csv";
  timing->add_option("--dims", tcfg.dims, "dimensions (default 3,6)")->delimiter(',');
  timing->add_option("--batch-sizes", tcfg.batch_sizes, "batch sizes (default 5,10,20)")->delimiter(',');
  timing->add_option("--policies", tcfg.policies, "policies (default ucb-de,ucb-rand,bucb,cl)")->delimiter(',');
  timing->add_option("--function", tcfg.function, "benchmark, or auto (default)");
  timing->add_option("--n-obs", tcfg.n_obs, "fixed observation count (default 10*dim)");
  timing->add_option("--T", tcfg.T, "iterations used to size M = 10*T*B (default 3)");
  timing->add_option("--reps", tcfg.reps, "timed repetitions per cell (default 5)");
  timing->add_option("--seed", tcfg.seed, "seed (default 0)");
  timing->add_option("--out", timing_out, "output path (default stdout)");
  timing->add_option("--format", timing_format, "csv or json (default csv)");

  auto* list_functions = app.add_subcommand("list-functions", "list registered benchmark functions");
  auto* list_policies = app.add_subcommand("list-policies", "list registered batch policies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run) return run_command(run_flags);
    if (*sweep) return sweep_command(sweep_flags, m_values, m_factors, !no_continuous);
    if (*timing) {
      const auto format = ucbde::parse_format(timing_format);
      const auto rows = ucbde::timing_study(tcfg);
      std::ofstream file;
      std::ostream& out = open_output(timing_out, file);
      if (format == ucbde::OutputFormat::Csv)
        ucbde::write_timing_csv(out, rows);
      else
        out << ucbde::to_json(rows).dump(2) << '\n';
      return 0;
    }
    if (*list_functions) {
      for (const auto& name : ucbde::benchmark_names()) {
        const bool needs_dim = name == "alpine2" || name == "gsobol";
        const auto f = ucbde::make_benchmark(name, needs_dim ? std::optional<int>(2) : std::nullopt);
        std::cout << name << '\t' << (needs_dim ? std::string("any") : std::to_string(f.dim)) << '\t'
                  << f.notes << '\n';
      }
      return 0;
    }
    if (*list_policies) {
      for (const auto& name : ucbde::policy_names()) std::cout << name << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
