#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mvmr/cli.hpp"
#include "mvmr/diagnostics.hpp"
#include "mvmr/errors.hpp"
#include "mvmr/estimators.hpp"
#include "mvmr/simulate.hpp"
#include "mvmr/strength.hpp"
#include "mvmr/summary_data.hpp"
#include "mvmr/tuning.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace mvmr;

namespace {

TuningMode parse_mode(const std::string& s) {
  if (s == "plain") return TuningMode::plain;
  if (s == "pleiotropy") return TuningMode::pleiotropy;
  if (s == "overlap") return TuningMode::overlap;
  throw ValidationError("mode must be 'plain', 'pleiotropy' or 'overlap'");
}

Dataset from_arrays(const Matrix& gamma_hat, const Matrix& se_x, const Vector& gamma_y_hat,
                    const Vector& se_y, const Matrix& correlation,
                    std::optional<std::vector<std::string>> ids, std::optional<Matrix> cov_xy) {
  const Index p = gamma_hat.rows();
  if (se_x.rows() != p || gamma_y_hat.size() != p || se_y.size() != p ||
      se_x.cols() != gamma_hat.cols() || (ids && static_cast<Index>(ids->size()) != p) ||
      (cov_xy && (cov_xy->rows() != p || cov_xy->cols() != gamma_hat.cols()))) {
    throw ValidationError("array shapes do not agree");
  }
  std::vector<SnpSummary> snps(static_cast<std::size_t>(p));
  for (Index j = 0; j < p; ++j) {
    auto& s = snps[static_cast<std::size_t>(j)];
    s.id = ids ? (*ids)[static_cast<std::size_t>(j)] : "snp" + std::to_string(j + 1);
    s.gamma_hat = gamma_hat.row(j).transpose();
    s.se_x = se_x.row(j).transpose();
    s.gamma_y_hat = gamma_y_hat(j);
    s.se_y = se_y(j);
    if (cov_xy) s.cov_xy = cov_xy->row(j).transpose();
  }
  return Dataset(std::move(snps), correlation);
}

py::dict metrics_dict(const MetricsTable& t) {
  py::list rows;
  for (const auto& r : t.rows) {
    rows.append(py::dict("method"_a = std::string(to_string(r.method)), "exposure"_a = r.exposure + 1,
                         "beta0"_a = r.beta0, "mean_est"_a = r.mean_est, "sd"_a = r.sd,
                         "mean_se"_a = r.mean_se, "coverage"_a = r.coverage));
  }
  py::dict estimates;
  for (const auto& [m, e] : t.estimates) estimates[py::str(std::string(to_string(m)))] = e;
  return py::dict("rows"_a = rows, "reps"_a = t.reps, "reps_used"_a = t.reps_used,
                  "failures"_a = t.failures,
                  "mean_lambda_min_over_sqrt_p"_a = t.mean_lambda_min_over_sqrt_p,
                  "mean_true_lambda_min_over_sqrt_p"_a = t.mean_true_lambda_min_over_sqrt_p,
                  "mean_conditional_f"_a = t.mean_conditional_f, "mean_selected"_a = t.mean_selected,
                  "mean_phi_star"_a = t.mean_phi_star, "mean_tau2"_a = t.mean_tau2,
                  "estimates"_a = estimates, "table"_a = format_metrics(t));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Summary-data multivariable Mendelian randomization";
  m.attr("__version__") = kVersion;

  auto base = py::register_exception<Error>(m, "MvmrError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());

  py::class_<Dataset>(m, "Dataset")
      .def_static("from_arrays", &from_arrays, "gamma_hat"_a, "se_x"_a, "gamma_y_hat"_a, "se_y"_a,
                  "correlation"_a, "ids"_a = py::none(), "cov_xy"_a = py::none())
      .def_property_readonly("p", &Dataset::p)
      .def_property_readonly("k", &Dataset::k)
      .def_property_readonly("ids", [](const Dataset& d) {
        std::vector<std::string> out;
        for (const auto& s : d.snps()) out.push_back(s.id);
        return out;
      })
      .def_property_readonly("correlation", &Dataset::shared_correlation)
      .def_property_readonly("has_cov_xy", &Dataset::has_cov_xy)
      .def("gamma_hat", [](const Dataset& d) { return to_instruments(d).gamma_hat; })
      .def("gamma_y_hat", [](const Dataset& d) { return to_instruments(d).gamma_y_hat; })
      .def("__len__", &Dataset::p);

  m.def("load_dataset", [](const std::filesystem::path& path, Index k,
                           std::optional<std::filesystem::path> correlation) {
    return load_dataset(path, k, correlation);
  }, "path"_a, "k"_a, "correlation"_a = py::none());
  m.def("write_dataset", &write_dataset, "data"_a, "path"_a);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("beta", &Estimate::beta)
      .def_readonly("covariance", &Estimate::covariance)
      .def_readonly("se", &Estimate::se)
      .def_readonly("phi", &Estimate::phi)
      .def_readonly("tau2", &Estimate::tau2)
      .def_readonly("p_used", &Estimate::p_used)
      .def_property_readonly("method", [](const Estimate& e) { return std::string(to_string(e.method)); })
      .def("ci95", &Estimate::ci95)
      .def("__repr__", [](const Estimate& e) {
        return "<Estimate " + std::string(to_string(e.method)) + " p=" + std::to_string(e.p_used) + ">";
      });

  m.def("mv_ivw", py::overload_cast<const Dataset&>(&mv_ivw), "data"_a);
  m.def("srivw", py::overload_cast<const Dataset&, double>(&srivw), "data"_a, "phi"_a = 0.0);
  m.def("srivw_pleiotropy", py::overload_cast<const Dataset&, double>(&srivw_pleiotropy), "data"_a,
        "phi"_a = 0.0);
  m.def("srivw_overlap", py::overload_cast<const Dataset&, double>(&srivw_overlap), "data"_a,
        "phi"_a = 0.0);
  m.def("spectral_regularize", &spectral_regularize, "a"_a, "phi"_a);

  py::class_<TuningResult>(m, "TuningResult")
      .def_readonly("phi_star", &TuningResult::phi_star)
      .def_readonly("q_values", &TuningResult::q_values)
      .def_readonly("skipped", &TuningResult::skipped)
      .def_readonly("lambda_min_over_sqrt_p", &TuningResult::lambda_min_over_sqrt_p)
      .def_readonly("estimate", &TuningResult::selected_estimate);

  m.def("grid_b", &grid_b, "lambda_min_over_sqrt_p"_a, "c"_a = 17.0, "step"_a = 0.5);
  m.def("q_statistic", [](const Dataset& d, const Vector& beta, bool overlap) {
    return q_statistic(d, beta, overlap ? QMode::overlap : QMode::plain);
  }, "data"_a, "beta"_a, "overlap"_a = false);
  m.def("select_phi", [](const Dataset& d, const std::string& mode, double c, double step) {
    TuningOptions o;
    o.c = c;
    o.step = step;
    return select_phi(d, parse_mode(mode), o);
  }, "data"_a, "mode"_a = "plain", "c"_a = 17.0, "step"_a = 0.5);

  py::class_<StrengthReport>(m, "StrengthReport")
      .def_readonly("strength_matrix", &StrengthReport::strength_matrix)
      .def_readonly("lambda_min", &StrengthReport::lambda_min)
      .def_readonly("lambda_min_over_sqrt_p", &StrengthReport::lambda_min_over_sqrt_p)
      .def_readonly("conditional_f", &StrengthReport::conditional_f)
      .def_readonly("p", &StrengthReport::p);
  m.def("strength", &sample_strength, "data"_a);

  py::class_<OutlierReport>(m, "OutlierReport")
      .def_readonly("contributions", &OutlierReport::contributions)
      .def_readonly("excluded_ids", &OutlierReport::excluded_ids)
      .def_readonly("threshold", &OutlierReport::threshold)
      .def_readonly("iterations", &OutlierReport::iterations)
      .def_readonly("phi_star", &OutlierReport::phi_star)
      .def_readonly("refused", &OutlierReport::refused);
  m.def("remove_outliers", [](const Dataset& d, double alpha, std::size_t max_iter, const std::string& mode) {
    return remove_outliers(d, alpha, max_iter, parse_mode(mode));
  }, "data"_a, "alpha"_a = 0.05, "max_iter"_a = 1, "mode"_a = "plain");

  py::class_<SimConfig>(m, "SimConfig")
      .def_readwrite("reps", &SimConfig::reps)
      .def_readwrite("seed", &SimConfig::seed)
      .def_property_readonly("beta0", [](const SimConfig& c) { return c.truth.beta0; })
      .def("describe", &describe_config);
  m.def("parse_sim_config", [](const std::string& text, std::optional<std::uint64_t> seed) {
    return parse_sim_config(text, {}, seed);
  }, "text"_a, "seed"_a = py::none());
  m.def("load_sim_config", &load_sim_config, "path"_a, "seed"_a = py::none());
  m.def("simulate_dataset", &generate_summary, "config"_a, "rep"_a = 0);
  m.def("monte_carlo", [](const SimConfig& c, unsigned threads) {
    MonteCarloOptions o;
    o.threads = threads;
    MetricsTable t;
    {
      py::gil_scoped_release release;
      t = monte_carlo(c, o);
    }
    return metrics_dict(t);
  }, "config"_a, "threads"_a = 0);
}
