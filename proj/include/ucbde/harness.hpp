#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ucbde/acquisition.hpp"
#include "ucbde/policies.hpp"

namespace ucbde {

/// User-facing experiment settings. Unset optionals take the protocol
/// defaults: T = 10 d, n_init = 3 d, M = 10 T B.
struct ExperimentConfig {
  std::string function = "branin";
  std::optional<int> dim;
  std::string policy = "ucb-de";
  std::optional<int> T;
  std::optional<int> n_init;
  int B = 10;
  std::optional<long long> M;
  int repeats = 20;
  std::uint64_t seed = 0;
  double noise_var = 1e-4;
  double delta = 0.1;
  std::optional<double> beta_override;
  RefineBudget refine;
  double latency_ms = 0.0;
  bool parallel_eval = true;
  std::string sobol_table;  // empty: built-in table
  std::string output_path;
  std::string format = "csv";
};

/// Applies one key=value setting; keys match the CLI flag names.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);
/// Flat key=value text; '#' starts a comment.
void apply_config_text(ExperimentConfig& cfg, std::istream& in);
void apply_config_file(ExperimentConfig& cfg, const std::string& path);

struct ResolvedConfig {
  ExperimentConfig raw;
  int dim = 0;
  int T = 0;
  int n_init = 0;
  int B = 0;
  std::size_t M = 0;
  std::vector<std::string> applied_defaults;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

ResolvedConfig resolve(const ExperimentConfig& cfg);

struct RunRow {
  int repeat_id = 0;
  int t = 0;
  long long cumulative_evals = 0;
  double recommended_value = 0.0;
  double best_observed_value = 0.0;
  double batch_selection_seconds = 0.0;
  double gp_fit_seconds = 0.0;
  double eval_seconds = 0.0;
  double cumulative_wall_seconds = 0.0;

  bool operator==(const RunRow&) const = default;
};

struct RepeatInfo {
  int repeat_id = 0;
  std::uint64_t seed = 0;
  long long budget_evals = 0;          // fed to the GP
  long long recommendation_evals = 0;  // scoring only
  std::size_t inner_optimizer_calls = 0;
  bool failed = false;
  std::string failure;

  bool operator==(const RepeatInfo&) const = default;
};

struct RunRecord {
  nlohmann::json config;  // echo of the resolved configuration
  std::vector<RunRow> rows;
  std::vector<RepeatInfo> repeats;
};

using RowSink = std::function<void(const RunRow&)>;

RunRecord run_experiment(const ExperimentConfig& cfg, const RowSink& sink = {});

struct SummaryPoint {
  int t = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double best_observed_mean = 0.0;
  double wall_seconds_mean = 0.0;
};

struct Summary {
  std::vector<SummaryPoint> per_t;
  std::vector<double> final_values;
  double final_mean = 0.0;
  double final_std_error = 0.0;
  std::optional<double> final_regret_mean;
  double selection_seconds_mean = 0.0;  // per batch
  double fit_seconds_mean = 0.0;        // per refit
  double wall_seconds_mean = 0.0;       // per repeat
  int completed_repeats = 0;
};

/// Mean and sample-std / sqrt(n) standard error.
std::pair<double, double> mean_and_std_error(const std::vector<double>& v);

Summary summarize(const RunRecord& record, std::optional<double> known_best = std::nullopt);

struct SweepArm {
  std::string label;
  std::size_t M = 0;  // 0 for the continuous arm
  Summary summary;
};

struct SweepResult {
  std::vector<SweepArm> arms;
  std::vector<std::string> warnings;
};

/// One run per distinct M (order preserved) plus a continuous-DE arm.
SweepResult sweep_m(const ExperimentConfig& base, const std::vector<long long>& m_values,
                    bool include_continuous = true);

struct TimingConfig {
  std::vector<int> dims{3, 6};
  std::vector<int> batch_sizes{5, 10, 20};
  std::vector<std::string> policies{"ucb-de", "ucb-rand", "bucb", "cl"};
  std::string function = "auto";  // auto: hartmann3 / hartmann6 / gsobol by dim
  int n_obs = 0;                  // 0: 10 d
  int T = 3;                      // sizes the pool, M = 10 T B
  int reps = 5;
  std::uint64_t seed = 0;
  PolicySettings settings;
  double noise_var = 1e-4;
};

struct TimingRow {
  std::string policy;
  int dim = 0;
  int B = 0;
  int n_obs = 0;
  std::size_t M = 0;
  double median_seconds = 0.0;
  double mean_seconds = 0.0;
  double min_seconds = 0.0;
  std::size_t inner_optimizer_calls = 0;
  std::size_t score_evaluations = 0;
  std::size_t distance_evaluations = 0;
};

/// Batch-selection cost at a fixed observation count N.
std::vector<TimingRow> timing_study(const TimingConfig& cfg);

// --- persistence ---------------------------------------------------------

inline constexpr const char* kRunCsvHeader =
    "repeat_id,t,cumulative_evals,recommended_value,best_observed_value,batch_selection_seconds,"
    "gp_fit_seconds,eval_seconds,cumulative_wall_seconds";

std::string csv_row(const RunRow& row);
void write_csv(std::ostream& out, const std::vector<RunRow>& rows);
nlohmann::json to_json(const RunRecord& record);
RunRecord run_record_from_json(const nlohmann::json& j);

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(const std::string& name);

/// Writes `record` to `path` in the chosen format.
void emit(const RunRecord& record, OutputFormat format, const std::string& path);
RunRecord read_json_record(const std::string& path);

nlohmann::json to_json(const Summary& s);
nlohmann::json to_json(const SweepResult& s);
nlohmann::json to_json(const std::vector<TimingRow>& rows);
void write_sweep_csv(std::ostream& out, const SweepResult& s);
void write_timing_csv(std::ostream& out, const std::vector<TimingRow>& rows);

}  // namespace ucbde
