#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ucbde/acquisition.hpp"
#include "ucbde/benchmarks.hpp"
#include "ucbde/distance_exploration.hpp"
#include "ucbde/gp.hpp"
#include "ucbde/harness.hpp"
#include "ucbde/policies.hpp"
#include "ucbde/sobol.hpp"

namespace py = pybind11;
using namespace ucbde;

namespace {

// Settings dicts go through the same key=value path as config files.
ExperimentConfig config_from_dict(const py::dict& settings) {
  ExperimentConfig cfg;
  for (auto item : settings) {
    const std::string key = py::str(item.first);
    py::handle value = item.second;
    std::string text = py::isinstance<py::bool_>(value) ? (value.cast<bool>() ? "true" : "false")
                                                        : std::string(py::str(value));
    apply_setting(cfg, key, text);
  }
  return cfg;
}

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict proposal_dict(const BatchProposal& p) {
  py::dict d;
  d["points"] = p.points;
  std::vector<std::string> roles;
  for (auto r : p.roles) roles.push_back(to_string(r));
  d["roles"] = roles;
  d["selection_seconds"] = p.selection_time.count();
  d["inner_optimizer_calls"] = p.counters.inner_optimizer_calls;
  d["score_evaluations"] = p.counters.score_evaluations;
  d["distance_evaluations"] = p.counters.distance_evaluations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Batch Bayesian optimization with UCB and Sobol distance exploration";

  py::register_exception<Error>(m, "UcbdeError");

  // --- gp ---
  m.def("se_kernel", &se_kernel, py::arg("a"), py::arg("b"), py::arg("lengthscale"));
  m.def(
      "standardize",
      [](const std::vector<double>& raw) {
        auto s = standardize(raw);
        return py::make_tuple(s.values, s.mean, s.std_dev);
      },
      py::arg("raw"));
  m.def("default_lengthscale_grid", &default_lengthscale_grid);

  py::class_<ObservationSet>(m, "ObservationSet")
      .def(py::init<int>(), py::arg("dim"))
      .def("add", py::overload_cast<const Point&, double>(&ObservationSet::add), py::arg("x"), py::arg("y"))
      .def(
          "extend",
          [](ObservationSet& o, const PointList& xs, const std::vector<double>& ys) { o.add(xs, ys); },
          py::arg("xs"), py::arg("ys"))
      .def_property_readonly("dim", &ObservationSet::dim)
      .def_property_readonly("inputs", &ObservationSet::inputs)
      .def_property_readonly("raw_outputs", &ObservationSet::raw_outputs)
      .def_property_readonly("std_outputs", &ObservationSet::std_outputs)
      .def_property_readonly("out_mean", &ObservationSet::out_mean)
      .def_property_readonly("out_std", &ObservationSet::out_std)
      .def("__len__", &ObservationSet::size);

  py::class_<GpModel>(m, "GpModel")
      .def_static(
          "fit",
          [](const ObservationSet& obs, double noise_var, std::optional<std::vector<double>> grid) {
            const auto g = grid.value_or(default_lengthscale_grid());
            return GpModel::fit(obs, noise_var, g);
          },
          py::arg("obs"), py::arg("noise_var") = 1e-4, py::arg("grid") = py::none())
      .def_static(
          "condition",
          [](const PointList& xs, const std::vector<double>& y, double l, double noise) {
            return GpModel::condition(xs, y, l, noise);
          },
          py::arg("inputs"), py::arg("targets"), py::arg("lengthscale"), py::arg("noise_var") = 1e-4)
      .def(
          "posterior",
          [](const GpModel& g, const Point& x) {
            auto p = g.posterior(x);
            return py::make_tuple(p.mean, p.variance);
          },
          py::arg("x"))
      .def("mean", &GpModel::mean, py::arg("x"))
      .def_property_readonly("lengthscale", &GpModel::lengthscale)
      .def_property_readonly("noise_var", &GpModel::noise_var)
      .def_property_readonly("log_marginal_likelihood", &GpModel::log_marginal_likelihood)
      .def_property_readonly("chol_factor", &GpModel::chol_factor)
      .def_property_readonly("weights", &GpModel::weights)
      .def("__len__", &GpModel::size);

  // --- sobol ---
  m.def(
      "sobol_points",
      [](int dim, std::size_t count, std::uint64_t skip) { return sobol_points(dim, count, skip); },
      py::arg("dim"), py::arg("count"), py::arg("skip") = 1);
  m.def(
      "direction_table_max_dim",
      [](const std::string& text) { return parse_direction_table(std::string_view(text)).max_dim(); },
      py::arg("text"), "Parses direction-number text and returns the highest supported dimension.");
  py::class_<SobolEngine>(m, "SobolEngine")
      .def(py::init([](int dim) { return SobolEngine(dim); }), py::arg("dim"))
      .def("next", &SobolEngine::next)
      .def("seek", &SobolEngine::seek, py::arg("index"))
      .def_property_readonly("index", &SobolEngine::index)
      .def_property_readonly("dim", &SobolEngine::dim);

  // --- acquisition ---
  py::class_<RefineBudget>(m, "RefineBudget")
      .def(py::init<>())
      .def_readwrite("n_starts", &RefineBudget::n_starts)
      .def_readwrite("max_evals_per_start", &RefineBudget::max_evals_per_start)
      .def_readwrite("step_init", &RefineBudget::step_init)
      .def_readwrite("step_min", &RefineBudget::step_min);
  m.def(
      "ucb_beta",
      [](std::size_t n, double delta) {
        UcbParams p;
        p.delta = delta;
        return ucb_beta(n, p);
      },
      py::arg("n_obs"), py::arg("delta") = 0.1);
  m.def(
      "ucb_value",
      [](const GpModel& g, const Point& x, int t, double delta, std::optional<double> beta) {
        return ucb_value(g, x, t, UcbParams{delta, beta});
      },
      py::arg("model"), py::arg("x"), py::arg("t") = 1, py::arg("delta") = 0.1, py::arg("beta") = py::none());
  m.def(
      "maximize_acquisition",
      [](const std::function<double(const Point&)>& score, int dim, const PointList& candidates,
         const RefineBudget& budget, std::uint64_t seed) {
        auto r = maximize_acquisition(score, dim, candidates, budget, seed);
        return py::make_tuple(r.point, r.score);
      },
      py::arg("score"), py::arg("dim"), py::arg("candidates"), py::arg("budget") = RefineBudget{},
      py::arg("seed") = 0);

  // --- distance exploration ---
  py::class_<CandidatePool>(m, "CandidatePool")
      .def(py::init<const PointList&, std::vector<double>>(), py::arg("points"),
           py::arg("weights") = std::vector<double>{})
      .def_static("sobol", &CandidatePool::sobol, py::arg("dim"), py::arg("m"),
                  py::arg("weights") = std::vector<double>{})
      .def("update", py::overload_cast<const PointList&>(&CandidatePool::update), py::arg("new_obs"))
      .def("farthest_point", &CandidatePool::farthest_point)
      .def("min_sq_dist", &CandidatePool::min_sq_dist, py::arg("m"))
      .def("alive", &CandidatePool::alive, py::arg("m"))
      .def("point", &CandidatePool::point, py::arg("m"))
      .def_property_readonly("alive_count", &CandidatePool::alive_count)
      .def("__len__", &CandidatePool::size);
  m.def(
      "fill_batch_de",
      [](CandidatePool& pool, const Point& first, int b) { return proposal_dict(fill_batch_de(pool, first, b)); },
      py::arg("pool"), py::arg("first_point"), py::arg("batch_size"));
  m.def(
      "farthest_point_continuous",
      [](const PointList& obs, int dim, const RefineBudget& budget, std::uint64_t seed) {
        return farthest_point_continuous(obs, dim, budget, seed);
      },
      py::arg("obs"), py::arg("dim"), py::arg("budget") = RefineBudget{}, py::arg("seed") = 0);

  // --- policies ---
  m.def("policy_names", &policy_names);
  m.def(
      "propose_batch",
      [](const std::string& name, const GpModel& model, const ObservationSet& obs, int b, int t,
         std::uint64_t seed, CandidatePool* pool, std::optional<double> beta) {
        PolicySettings settings;
        settings.ucb.beta_override = beta;
        auto policy = make_policy(name, settings);
        return proposal_dict(policy->propose(PolicyContext{model, obs, pool, b, t, seed}));
      },
      py::arg("policy"), py::arg("model"), py::arg("obs"), py::arg("batch_size"), py::arg("t") = 1,
      py::arg("seed") = 0, py::arg("pool") = nullptr, py::arg("beta") = py::none());

  // --- benchmarks ---
  py::class_<BenchmarkFunction>(m, "BenchmarkFunction")
      .def_readonly("name", &BenchmarkFunction::name)
      .def_readonly("dim", &BenchmarkFunction::dim)
      .def_readonly("bounds", &BenchmarkFunction::bounds)
      .def_readonly("known_best_value", &BenchmarkFunction::known_best_value)
      .def_readonly("known_best_point", &BenchmarkFunction::known_best_point)
      .def("__call__", [](const BenchmarkFunction& f, const Point& x) { return f.eval(x); }, py::arg("x"))
      .def("eval_unit", &BenchmarkFunction::eval_unit, py::arg("u"));
  m.def("benchmark_names", &benchmark_names);
  m.def("make_benchmark", &make_benchmark, py::arg("name"), py::arg("dim") = py::none());
  m.def(
      "evaluate_batch",
      [](const BenchmarkFunction& f, const PointList& pts, bool parallel) {
        py::gil_scoped_release release;
        return evaluate_batch(f, pts, parallel);
      },
      py::arg("f"), py::arg("points"), py::arg("parallel") = false);

  // --- harness ---
  m.def(
      "run_experiment",
      [](const py::dict& settings) {
        const ExperimentConfig cfg = config_from_dict(settings);
        RunRecord record;
        {
          py::gil_scoped_release release;
          record = run_experiment(cfg);
        }
        py::dict out = to_python(to_json(record));
        out["summary"] = to_python(to_json(summarize(record)));
        return out;
      },
      py::arg("settings"), "Runs one experiment; keys match the CLI flag names (e.g. function, T, B, policy).");
  m.def(
      "sweep_m",
      [](const py::dict& settings, const std::vector<long long>& m_values, bool continuous) {
        const ExperimentConfig cfg = config_from_dict(settings);
        SweepResult r;
        {
          py::gil_scoped_release release;
          r = sweep_m(cfg, m_values, continuous);
        }
        return to_python(to_json(r));
      },
      py::arg("settings"), py::arg("m_values"), py::arg("continuous") = true);
  m.def(
      "timing_study",
      [](const std::vector<int>& dims, const std::vector<int>& batch_sizes, const std::vector<std::string>& policies,
         int reps, int n_obs) {
        TimingConfig cfg;
        cfg.dims = dims;
        cfg.batch_sizes = batch_sizes;
        cfg.policies = policies;
        cfg.reps = reps;
        cfg.n_obs = n_obs;
        std::vector<TimingRow> rows;
        {
          py::gil_scoped_release release;
          rows = timing_study(cfg);
        }
        return to_python(to_json(rows));
      },
      py::arg("dims"), py::arg("batch_sizes"), py::arg("policies"), py::arg("reps") = 3, py::arg("n_obs") = 0);
  m.def(
      "runs_to_csv",
      [](const py::dict& settings) {
        const ExperimentConfig cfg = config_from_dict(settings);
        RunRecord record;
        {
          py::gil_scoped_release release;
          record = run_experiment(cfg);
        }
        std::ostringstream out;
        write_csv(out, record.rows);
        return out.str();
      },
      py::arg("settings"));
}
