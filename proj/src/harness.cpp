#include "ucbde/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "ucbde/benchmarks.hpp"
#include "ucbde/optimizer.hpp"
#include "ucbde/sobol.hpp"

namespace ucbde {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ConfigError("invalid value '" + text + "' for '" + key + "'");
  return value;
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid value '" + text + "' for '" + key + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError("invalid boolean '" + text + "' for '" + key + "'");
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = normalize_key(trim(raw_key));
  const std::string value = trim(raw_value);
  if (key == "function") cfg.function = value;
  else if (key == "dim") cfg.dim = parse_number<int>(key, value);
  else if (key == "policy") cfg.policy = value;
  else if (key == "T") cfg.T = parse_number<int>(key, value);
  else if (key == "n_init") cfg.n_init = parse_number<int>(key, value);
  else if (key == "B") cfg.B = parse_number<int>(key, value);
  else if (key == "M") cfg.M = parse_number<long long>(key, value);
  else if (key == "repeats") cfg.repeats = parse_number<int>(key, value);
  else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
  else if (key == "noise_var") cfg.noise_var = parse_double(key, value);
  else if (key == "delta") cfg.delta = parse_double(key, value);
  else if (key == "beta") cfg.beta_override = parse_double(key, value);
  else if (key == "n_starts") cfg.refine.n_starts = parse_number<int>(key, value);
  else if (key == "max_evals") cfg.refine.max_evals_per_start = parse_number<int>(key, value);
  else if (key == "step_init") cfg.refine.step_init = parse_double(key, value);
  else if (key == "step_min") cfg.refine.step_min = parse_double(key, value);
  else if (key == "latency_ms") cfg.latency_ms = parse_double(key, value);
  else if (key == "parallel_eval") cfg.parallel_eval = parse_bool(key, value);
  else if (key == "sobol_table") cfg.sobol_table = value;
  else if (key == "out") cfg.output_path = value;
  else if (key == "format") cfg.format = value;
  else throw ConfigError("unknown configuration key '" + raw_key + "'");
}

void apply_config_text(ExperimentConfig& cfg, std::istream& in) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
}

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  apply_config_text(cfg, in);
}

ResolvedConfig resolve(const ExperimentConfig& cfg) {
  ResolvedConfig r;
  r.raw = cfg;
  const BenchmarkFunction f = make_benchmark(cfg.function, cfg.dim);
  r.dim = f.dim;
  if (!cfg.dim) {
    r.raw.dim = f.dim;
    r.applied_defaults.push_back("dim");
  }
  if (cfg.B < 1) throw ConfigError("B must be >= 1");
  r.B = cfg.B;
  r.T = cfg.T.value_or(10 * r.dim);
  if (!cfg.T) r.applied_defaults.push_back("T");
  if (r.T < 0) throw ConfigError("T must be >= 0");
  r.n_init = cfg.n_init.value_or(3 * r.dim);
  if (!cfg.n_init) r.applied_defaults.push_back("n_init");
  if (r.n_init < 1) throw ConfigError("n_init must be >= 1");
  const long long m = cfg.M.value_or(10LL * r.T * r.B);
  if (!cfg.M) r.applied_defaults.push_back("M");
  if (m < static_cast<long long>(r.B) * r.T)
    throw ConfigError("M=" + std::to_string(m) + " is smaller than B*T=" + std::to_string(r.B * r.T) +
                      "; the candidate pool would exhaust");
  r.M = static_cast<std::size_t>(std::max(m, 1LL));
  if (cfg.repeats < 1) throw ConfigError("repeats must be >= 1");
  if (!(cfg.noise_var >= 0.0)) throw ConfigError("noise_var must be >= 0");
  if (!(cfg.latency_ms >= 0.0)) throw ConfigError("latency_ms must be >= 0");
  if (cfg.refine.n_starts < 1 || cfg.refine.step_init <= 0.0 || cfg.refine.step_min <= 0.0)
    throw ConfigError("refine budget values must be positive");
  make_policy(cfg.policy);
  parse_format(cfg.format);
  r.raw.T = r.T;
  r.raw.n_init = r.n_init;
  r.raw.M = static_cast<long long>(r.M);
  return r;
}

namespace {

nlohmann::json config_echo(const ResolvedConfig& rc, const BenchmarkFunction& f) {
  const auto& c = rc.raw;
  nlohmann::json j;
  j["function"] = c.function;
  j["function_notes"] = f.notes;
  j["dim"] = rc.dim;
  j["policy"] = c.policy;
  j["T"] = rc.T;
  j["n_init"] = rc.n_init;
  j["B"] = rc.B;
  j["M"] = rc.M;
  j["repeats"] = c.repeats;
  j["seed"] = c.seed;
  j["noise_var"] = c.noise_var;
  j["delta"] = c.delta;
  j["beta"] = c.beta_override ? nlohmann::json(*c.beta_override) : nlohmann::json(nullptr);
  j["n_starts"] = c.refine.n_starts;
  j["max_evals"] = c.refine.evals_per_start(rc.dim);
  j["step_init"] = c.refine.step_init;
  j["step_min"] = c.refine.step_min;
  j["acquisition_candidates"] = 100 * rc.dim;
  j["latency_ms"] = c.latency_ms;
  j["parallel_eval"] = c.parallel_eval;
  j["sobol_table"] = c.sobol_table.empty() ? std::string("built-in") : c.sobol_table;
  j["sobol_skip"] = 1;
  j["lengthscale_grid"] = "40 log-spaced values in [0.01, 10]";
  j["kernel"] = "exp(-|a-b|^2 / (2 l^2))";
  j["initial_design"] = "seeded uniform random";
  j["cl_lie"] = "max(std_outputs)";
  j["recommendation"] = "posterior-mean maximizer, one extra oracle call per t >= 1";
  j["applied_defaults"] = rc.applied_defaults;
  if (f.known_best_value) j["known_best_value"] = *f.known_best_value;
  return j;
}

}  // namespace

RunRecord run_experiment(const ExperimentConfig& cfg, const RowSink& sink) {
  const ResolvedConfig rc = resolve(cfg);
  BenchmarkFunction f = make_benchmark(cfg.function, rc.dim);
  f.sim_latency = std::chrono::duration<double>(cfg.latency_ms / 1000.0);
  std::optional<DirectionTable> table;
  if (!cfg.sobol_table.empty()) table = load_direction_table(cfg.sobol_table);

  PolicySettings settings;
  settings.ucb.delta = cfg.delta;
  settings.ucb.beta_override = cfg.beta_override;
  settings.refine = cfg.refine;

  OptimizerOptions options;
  options.batch_size = rc.B;
  options.pool_size = rc.M;
  options.noise_var = cfg.noise_var;
  options.sobol_table = table ? &*table : nullptr;

  RunRecord record;
  record.config = config_echo(rc, f);

  for (int r = 0; r < cfg.repeats; ++r) {
    RepeatInfo info;
    info.repeat_id = r;
    info.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(r));
    try {
      long long budget_evals = 0;
      BatchObjective objective = [&](const PointList& pts) {
        budget_evals += static_cast<long long>(pts.size());
        return evaluate_batch(f, pts, cfg.parallel_eval);
      };
      BatchOptimizer opt(rc.dim, objective, make_policy(cfg.policy, settings), options, info.seed);

      std::mt19937_64 rng(derive_seed(info.seed, 0x1417ull));
      PointList x0;
      for (int i = 0; i < rc.n_init; ++i) x0.push_back(uniform_point(rng, rc.dim));
      const auto eval_start = Clock::now();
      const std::vector<double> y0 = objective(x0);
      const double eval0 = seconds_since(eval_start);
      opt.initialize(x0, y0);

      RunRow row;
      row.repeat_id = r;
      row.t = 0;
      row.cumulative_evals = rc.n_init;
      row.best_observed_value = opt.observations().best_raw();
      row.recommended_value = row.best_observed_value;
      row.gp_fit_seconds = opt.last_fit_seconds();
      row.eval_seconds = eval0;
      row.cumulative_wall_seconds = eval0 + row.gp_fit_seconds;
      record.rows.push_back(row);
      if (sink) sink(row);

      for (int t = 1; t <= rc.T; ++t) {
        IterationResult it = opt.step();
        info.inner_optimizer_calls += it.proposal.counters.inner_optimizer_calls;
        const Point rec = opt.recommend();
        const double rec_value = f.eval_unit(rec);
        ++info.recommendation_evals;

        row.t = t;
        row.cumulative_evals = rc.n_init + static_cast<long long>(t) * rc.B;
        row.recommended_value = rec_value;
        row.best_observed_value = opt.observations().best_raw();
        row.batch_selection_seconds = it.proposal.selection_time.count();
        row.gp_fit_seconds = it.gp_fit_seconds;
        row.eval_seconds = it.eval_seconds;
        row.cumulative_wall_seconds += row.batch_selection_seconds + row.gp_fit_seconds + row.eval_seconds;
        record.rows.push_back(row);
        if (sink) sink(row);
      }
      info.budget_evals = budget_evals;
    } catch (const std::exception& e) {
      info.failed = true;
      info.failure = e.what();
      std::cerr << "warning: repeat " << r << " aborted: " << e.what() << '\n';
    }
    record.repeats.push_back(info);
  }
  return record;
}

std::pair<double, double> mean_and_std_error(const std::vector<double>& v) {
  if (v.empty()) return {0.0, 0.0};
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(v.size());
  if (v.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
  return {mean, sd / std::sqrt(static_cast<double>(v.size()))};
}

Summary summarize(const RunRecord& record, std::optional<double> known_best) {
  std::set<int> failed;
  for (const auto& info : record.repeats)
    if (info.failed) failed.insert(info.repeat_id);
  if (!known_best && record.config.contains("known_best_value"))
    known_best = record.config["known_best_value"].get<double>();

  std::map<int, std::vector<const RunRow*>> by_t;
  std::map<int, const RunRow*> last;
  std::vector<double> selection, fit;
  for (const auto& row : record.rows) {
    if (failed.count(row.repeat_id)) continue;
    by_t[row.t].push_back(&row);
    auto& l = last[row.repeat_id];
    if (!l || row.t > l->t) l = &row;
    if (row.t > 0) selection.push_back(row.batch_selection_seconds);
    fit.push_back(row.gp_fit_seconds);
  }

  Summary s;
  for (const auto& [t, rows] : by_t) {
    std::vector<double> rec, best, wall;
    for (const RunRow* r : rows) {
      rec.push_back(r->recommended_value);
      best.push_back(r->best_observed_value);
      wall.push_back(r->cumulative_wall_seconds);
    }
    SummaryPoint p;
    p.t = t;
    std::tie(p.mean, p.std_error) = mean_and_std_error(rec);
    p.best_observed_mean = mean_and_std_error(best).first;
    p.wall_seconds_mean = mean_and_std_error(wall).first;
    s.per_t.push_back(p);
  }
  std::vector<double> walls;
  for (const auto& [id, row] : last) {
    s.final_values.push_back(row->recommended_value);
    walls.push_back(row->cumulative_wall_seconds);
  }
  s.completed_repeats = static_cast<int>(last.size());
  std::tie(s.final_mean, s.final_std_error) = mean_and_std_error(s.final_values);
  if (known_best && !s.final_values.empty()) s.final_regret_mean = *known_best - s.final_mean;
  s.selection_seconds_mean = mean_and_std_error(selection).first;
  s.fit_seconds_mean = mean_and_std_error(fit).first;
  s.wall_seconds_mean = mean_and_std_error(walls).first;
  return s;
}

SweepResult sweep_m(const ExperimentConfig& base, const std::vector<long long>& m_values,
                    bool include_continuous) {
  SweepResult result;
  std::vector<long long> distinct;
  for (long long m : m_values) {
    if (std::find(distinct.begin(), distinct.end(), m) != distinct.end()) {
      result.warnings.push_back("duplicate M=" + std::to_string(m) + " ignored");
      std::cerr << "warning: " << result.warnings.back() << '\n';
      continue;
    }
    distinct.push_back(m);
  }
  for (long long m : distinct) {
    ExperimentConfig cfg = base;
    cfg.policy = "ucb-de";
    cfg.M = m;
    SweepArm arm;
    arm.label = "M=" + std::to_string(m);
    arm.M = static_cast<std::size_t>(m);
    arm.summary = summarize(run_experiment(cfg));
    result.arms.push_back(std::move(arm));
  }
  if (include_continuous) {
    ExperimentConfig cfg = base;
    cfg.policy = "ucb-de-continuous";
    SweepArm arm;
    arm.label = "continuous";
    arm.summary = summarize(run_experiment(cfg));
    result.arms.push_back(std::move(arm));
  }
  return result;
}

std::vector<TimingRow> timing_study(const TimingConfig& cfg) {
  if (cfg.reps < 1) throw ConfigError("timing: reps must be >= 1");
  std::vector<TimingRow> rows;
  for (int d : cfg.dims) {
    std::string fname = cfg.function;
    if (fname == "auto") fname = d == 3 ? "hartmann3" : d == 6 ? "hartmann6" : d == 2 ? "branin" : "gsobol";
    const BenchmarkFunction f = make_benchmark(fname, d);
    const int n_obs = cfg.n_obs > 0 ? cfg.n_obs : 10 * d;

    std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(d)));
    PointList xs;
    for (int i = 0; i < n_obs; ++i) xs.push_back(uniform_point(rng, d));
    ObservationSet obs(d);
    obs.add(xs, evaluate_batch(f, xs, false));
    const GpModel model = GpModel::fit(obs, cfg.noise_var);

    for (int b : cfg.batch_sizes) {
      const std::size_t m = static_cast<std::size_t>(10) * cfg.T * b;
      const PointList pool_points = sobol_points(d, m);
      for (const auto& name : cfg.policies) {
        auto policy = make_policy(name, cfg.settings);
        std::vector<double> times;
        TimingRow row;
        row.policy = name;
        row.dim = d;
        row.B = b;
        row.n_obs = n_obs;
        row.M = m;
        for (int rep = 0; rep < cfg.reps; ++rep) {
          CandidatePool pool(pool_points);
          pool.update(xs);
          PolicyContext ctx{model, obs, &pool, b, 1, derive_seed(cfg.seed, 1000u + rep)};
          const BatchProposal p = policy->propose(ctx);
          times.push_back(p.selection_time.count());
          row.inner_optimizer_calls = p.counters.inner_optimizer_calls;
          row.score_evaluations = p.counters.score_evaluations;
          row.distance_evaluations = p.counters.distance_evaluations;
        }
        std::vector<double> sorted = times;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t n = sorted.size();
        row.median_seconds = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
        row.min_seconds = sorted.front();
        row.mean_seconds = mean_and_std_error(times).first;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

// --- persistence -------------------------------------------------------------

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string csv_row(const RunRow& r) {
  std::string s;
  s += std::to_string(r.repeat_id) + ',' + std::to_string(r.t) + ',' + std::to_string(r.cumulative_evals);
  for (double v : {r.recommended_value, r.best_observed_value, r.batch_selection_seconds, r.gp_fit_seconds,
                   r.eval_seconds, r.cumulative_wall_seconds})
    s += ',' + fmt_double(v);
  return s;
}

void write_csv(std::ostream& out, const std::vector<RunRow>& rows) {
  out << kRunCsvHeader << '\n';
  for (const auto& r : rows) out << csv_row(r) << '\n';
}

nlohmann::json to_json(const RunRecord& record) {
  nlohmann::json j;
  j["config"] = record.config;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : record.rows)
    j["rows"].push_back({{"repeat_id", r.repeat_id},
                         {"t", r.t},
                         {"cumulative_evals", r.cumulative_evals},
                         {"recommended_value", r.recommended_value},
                         {"best_observed_value", r.best_observed_value},
                         {"batch_selection_seconds", r.batch_selection_seconds},
                         {"gp_fit_seconds", r.gp_fit_seconds},
                         {"eval_seconds", r.eval_seconds},
                         {"cumulative_wall_seconds", r.cumulative_wall_seconds}});
  j["repeats"] = nlohmann::json::array();
  for (const auto& info : record.repeats)
    j["repeats"].push_back({{"repeat_id", info.repeat_id},
                            {"seed", info.seed},
                            {"budget_evals", info.budget_evals},
                            {"recommendation_evals", info.recommendation_evals},
                            {"inner_optimizer_calls", info.inner_optimizer_calls},
                            {"failed", info.failed},
                            {"failure", info.failure}});
  return j;
}

RunRecord run_record_from_json(const nlohmann::json& j) {
  RunRecord record;
  record.config = j.at("config");
  for (const auto& r : j.at("rows")) {
    RunRow row;
    row.repeat_id = r.at("repeat_id").get<int>();
    row.t = r.at("t").get<int>();
    row.cumulative_evals = r.at("cumulative_evals").get<long long>();
    row.recommended_value = r.at("recommended_value").get<double>();
    row.best_observed_value = r.at("best_observed_value").get<double>();
    row.batch_selection_seconds = r.at("batch_selection_seconds").get<double>();
    row.gp_fit_seconds = r.at("gp_fit_seconds").get<double>();
    row.eval_seconds = r.at("eval_seconds").get<double>();
    row.cumulative_wall_seconds = r.at("cumulative_wall_seconds").get<double>();
    record.rows.push_back(row);
  }
  if (j.contains("repeats"))
    for (const auto& r : j.at("repeats")) {
      RepeatInfo info;
      info.repeat_id = r.at("repeat_id").get<int>();
      info.seed = r.at("seed").get<std::uint64_t>();
      info.budget_evals = r.at("budget_evals").get<long long>();
      info.recommendation_evals = r.at("recommendation_evals").get<long long>();
      info.inner_optimizer_calls = r.at("inner_optimizer_calls").get<std::size_t>();
      info.failed = r.at("failed").get<bool>();
      info.failure = r.at("failure").get<std::string>();
      record.repeats.push_back(info);
    }
  return record;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + name + "' (known: csv, json)");
}

void emit(const RunRecord& record, OutputFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  if (format == OutputFormat::Csv)
    write_csv(out, record.rows);
  else
    out << to_json(record).dump(2) << '\n';
  if (!out) throw Error("failed writing '" + path + "'");
}

RunRecord read_json_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return run_record_from_json(nlohmann::json::parse(in));
}

nlohmann::json to_json(const Summary& s) {
  nlohmann::json j;
  j["per_t"] = nlohmann::json::array();
  for (const auto& p : s.per_t)
    j["per_t"].push_back({{"t", p.t},
                          {"mean", p.mean},
                          {"std_error", p.std_error},
                          {"best_observed_mean", p.best_observed_mean},
                          {"wall_seconds_mean", p.wall_seconds_mean}});
  j["final_values"] = s.final_values;
  j["final_mean"] = s.final_mean;
  j["final_std_error"] = s.final_std_error;
  j["final_regret_mean"] = s.final_regret_mean ? nlohmann::json(*s.final_regret_mean) : nlohmann::json(nullptr);
  j["selection_seconds_mean"] = s.selection_seconds_mean;
  j["fit_seconds_mean"] = s.fit_seconds_mean;
  j["wall_seconds_mean"] = s.wall_seconds_mean;
  j["completed_repeats"] = s.completed_repeats;
  return j;
}

nlohmann::json to_json(const SweepResult& s) {
  nlohmann::json j;
  j["arms"] = nlohmann::json::array();
  for (const auto& arm : s.arms)
    j["arms"].push_back({{"label", arm.label}, {"M", arm.M}, {"summary", to_json(arm.summary)}});
  j["warnings"] = s.warnings;
  return j;
}

nlohmann::json to_json(const std::vector<TimingRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"policy", r.policy},
                 {"dim", r.dim},
                 {"B", r.B},
                 {"n_obs", r.n_obs},
                 {"M", r.M},
                 {"median_seconds", r.median_seconds},
                 {"mean_seconds", r.mean_seconds},
                 {"min_seconds", r.min_seconds},
                 {"inner_optimizer_calls", r.inner_optimizer_calls},
                 {"score_evaluations", r.score_evaluations},
                 {"distance_evaluations", r.distance_evaluations}});
  return j;
}

void write_sweep_csv(std::ostream& out, const SweepResult& s) {
  out << "arm,M,completed_repeats,final_mean,final_std_error,final_regret_mean,selection_seconds_mean\n";
  for (const auto& arm : s.arms) {
    out << arm.label << ',' << arm.M << ',' << arm.summary.completed_repeats << ','
        << fmt_double(arm.summary.final_mean) << ',' << fmt_double(arm.summary.final_std_error) << ','
        << (arm.summary.final_regret_mean ? fmt_double(*arm.summary.final_regret_mean) : std::string()) << ','
        << fmt_double(arm.summary.selection_seconds_mean) << '\n';
  }
}

void write_timing_csv(std::ostream& out, const std::vector<TimingRow>& rows) {
  out << "policy,dim,B,n_obs,M,median_seconds,mean_seconds,min_seconds,inner_optimizer_calls,"
         "score_evaluations,distance_evaluations\n";
  for (const auto& r : rows)
    out << r.policy << ',' << r.dim << ',' << r.B << ',' << r.n_obs << ',' << r.M << ','
        << fmt_double(r.median_seconds) << ',' << fmt_double(r.mean_seconds) << ',' << fmt_double(r.min_seconds)
        << ',' << r.inner_optimizer_calls << ',' << r.score_evaluations << ',' << r.distance_evaluations << '\n';
}

}  // namespace ucbde
