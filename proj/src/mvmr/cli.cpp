#include "mvmr/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvmr/diagnostics.hpp"
#include "mvmr/errors.hpp"
#include "mvmr/estimators.hpp"
#include "mvmr/simulate.hpp"
#include "mvmr/strength.hpp"
#include "mvmr/summary_data.hpp"
#include "mvmr/tuning.hpp"

namespace mvmr {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Vector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (Index i = 0; i < m.rows(); ++i) a.push_back(to_json(Vector(m.row(i).transpose())));
  return a;
}

json estimate_json(const Estimate& e) {
  json j;
  j["method"] = std::string(to_string(e.method));
  j["p"] = e.p_used;
  j["beta"] = to_json(e.beta);
  j["se"] = to_json(e.se);
  j["cov"] = to_json(e.covariance);
  j["phi"] = e.phi;
  j["tau2"] = e.tau2 ? json(*e.tau2) : json(nullptr);
  if (e.tau2_raw) j["tau2_raw"] = *e.tau2_raw;
  j["ci95"] = to_json(e.ci95());
  return j;
}

std::string fixed(double x, int width = 12, int precision = 6) {
  std::ostringstream s;
  s << std::setw(width) << std::setprecision(precision) << x;
  return s.str();
}

std::string estimate_table(const Estimate& e) {
  std::ostringstream out;
  out << "method " << to_string(e.method) << "  p " << e.p_used << "  phi " << e.phi;
  if (e.tau2) out << "  tau2 " << *e.tau2;
  out << "\n";
  out << std::setw(8) << "exposure" << std::setw(12) << "beta"
      << std::setw(12) << "se" << std::setw(12) << "ci95_lo" << std::setw(12) << "ci95_hi" << "\n";
  const Matrix ci = e.ci95();
  for (Index k = 0; k < e.beta.size(); ++k) {
    out << std::setw(8) << (k + 1) << fixed(e.beta(k)) << fixed(e.se(k)) << fixed(ci(k, 0))
        << fixed(ci(k, 1)) << "\n";
  }
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

void write_manifest(const std::string& output, const std::string& command,
                    const std::vector<std::string>& args, json inputs, json extra,
                    double wall_seconds) {
  json m;
  m["command"] = command;
  m["argv"] = args;
  m["inputs"] = std::move(inputs);
  m["tool_version"] = kVersion;
  m["wall_time_seconds"] = wall_seconds;
  for (auto& [k, v] : extra.items()) m[k] = v;
  write_text(output + ".manifest.json", m.dump(2) + "\n");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct DataArgs {
  std::string input;
  int k = 0;
  std::string correlation;

  void add(CLI::App* app) {
    app->add_option("-i,--input", input, "summary-statistics TSV")->required();
    app->add_option("-k,--exposures", k, "number of exposures K")->required()->check(CLI::PositiveNumber);
    app->add_option("-c,--correlation", correlation, "K x K shared correlation matrix file");
  }

  Dataset load() const {
    std::optional<std::filesystem::path> corr;
    if (!correlation.empty()) corr = correlation;
    return load_dataset(input, k, corr);
  }

  json inputs() const {
    json j;
    j["input"] = input;
    j["k"] = k;
    j["correlation"] = correlation.empty() ? json(nullptr) : json(correlation);
    return j;
  }
};

void warn_if_weak(double l, std::ostream& err) {
  if (l < kWeakInstrumentThreshold) {
    err << "warning: lambda_min/sqrt(p) = " << l << " is below " << kWeakInstrumentThreshold
        << "; instruments are too weak for reliable inference\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  CLI::App app{"Summary-data multivariable Mendelian randomization", "mvmr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // estimate
  auto* est = app.add_subcommand("estimate", "estimate causal effects");
  DataArgs est_data;
  est_data.add(est);
  std::string method = "srivw";
  est->add_option("--method", method, "ivw or srivw")->check(CLI::IsMember({"ivw", "srivw"}));
  bool pleiotropy = false;
  bool overlap = false;
  est->add_flag("--pleiotropy", pleiotropy, "balanced-pleiotropy variance (SRIVW)");
  est->add_flag("--overlap", overlap, "sample-overlap correction using cov_xy columns (SRIVW)");
  double phi = 0.0;
  auto* phi_opt = est->add_option("--phi", phi, "fixed regularization parameter")
                      ->check(CLI::NonNegativeNumber);
  bool tune = false;
  auto* tune_opt = est->add_flag("--tune", tune, "choose phi by minimizing Q over the grid (default for srivw)");
  phi_opt->excludes(tune_opt);
  double grid_c = 17.0;
  double grid_step = 0.5;
  est->add_option("--grid-c", grid_c, "upper exponent offset c of the tuning grid");
  est->add_option("--grid-step", grid_step, "exponent step of the tuning grid")
      ->check(CLI::PositiveNumber);
  std::string format = "json";
  est->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  std::string dump_q;
  est->add_option("--dump-q", dump_q, "write the (phi, Q) trace as TSV");
  std::string est_out;
  est->add_option("-o,--out", est_out, "also write the JSON result to this file");

  // strength
  auto* str = app.add_subcommand("strength", "instrument strength diagnostics");
  DataArgs str_data;
  str_data.add(str);
  std::string str_format = "tsv";
  str->add_option("--format", str_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  std::string str_out;
  str->add_option("-o,--out", str_out, "also write the report to this file");

  // outliers
  auto* outl = app.add_subcommand("outliers", "exclude SNPs with large Q contributions");
  DataArgs out_data;
  out_data.add(outl);
  double alpha = 0.05;
  std::size_t max_iter = 1;
  outl->add_option("--alpha", alpha, "family-wise level of the Bonferroni cutoff")
      ->check(CLI::Range(0.0, 1.0));
  outl->add_option("--max-iter", max_iter, "maximum exclusion passes")->check(CLI::PositiveNumber);
  bool out_pleiotropy = false;
  bool out_overlap = false;
  outl->add_flag("--pleiotropy", out_pleiotropy, "fit with the pleiotropy variant");
  outl->add_flag("--overlap", out_overlap, "fit with the overlap-corrected variant");
  std::string pruned_path;
  outl->add_option("-o,--out", pruned_path, "write the pruned dataset TSV here");
  std::string report_path;
  outl->add_option("--report", report_path, "also write the JSON report to this file");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo evaluation of the estimators");
  std::string config_path;
  sim->add_option("--config", config_path, "TOML simulation config")->required();
  std::size_t reps = 0;
  sim->add_option("--reps", reps, "number of replications (overrides the config)")
      ->check(CLI::PositiveNumber);
  std::uint64_t seed = 0;
  sim->add_option("--seed", seed, "64-bit seed; required")->required();
  std::string table_path;
  sim->add_option("-o,--out", table_path, "metrics TSV (default: stdout)");
  unsigned threads = 0;
  sim->add_option("--threads", threads, "worker threads (default: $MVMR_THREADS or all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (est->parsed()) {
      if (method == "ivw" && (pleiotropy || overlap || tune || *phi_opt)) {
        throw ValidationError("--pleiotropy, --overlap, --phi and --tune apply to srivw only");
      }
      if (pleiotropy && overlap) {
        throw ValidationError("--pleiotropy and --overlap cannot be combined");
      }
      const Dataset data = est_data.load();
      const StrengthReport sr = sample_strength_matrix(data);
      warn_if_weak(sr.lambda_min_over_sqrt_p, err);
      const Instruments inst = to_instruments(data);
      Estimate e;
      std::optional<TuningResult> tuned;
      if (method == "ivw") {
        e = mv_ivw(inst);
      } else {
        const TuningMode mode = overlap      ? TuningMode::overlap
                                : pleiotropy ? TuningMode::pleiotropy
                                             : TuningMode::plain;
        if (overlap && !inst.cov_xy) {
          throw ValidationError("--overlap needs cov_xy1..cov_xyK columns for every SNP");
        }
        if (*phi_opt) {
          e = overlap ? srivw_overlap(inst, phi) : pleiotropy ? srivw_pleiotropy(inst, phi) : srivw(inst, phi);
        } else {
          TuningOptions opts;
          opts.c = grid_c;
          opts.step = grid_step;
          tuned = select_phi(inst, sr.lambda_min_over_sqrt_p, mode, opts);
          e = tuned->selected_estimate;
        }
      }
      if (!dump_q.empty()) {
        if (!tuned) throw ValidationError("--dump-q needs a tuned srivw fit");
        std::string q = "phi\tQ\n";
        for (const auto& [f, v] : tuned->q_values) q += format_double(f) + "\t" + format_double(v) + "\n";
        write_text(dump_q, q);
      }
      json j = estimate_json(e);
      j["lambda_min_over_sqrt_p"] = sr.lambda_min_over_sqrt_p;
      if (tuned) {
        j["grid_upper_exponent"] = tuned->grid_upper_exponent;
        j["grid_points_skipped"] = tuned->skipped.size();
      }
      if (format == "json") {
        out << j.dump(2) << "\n";
      } else {
        out << estimate_table(e);
      }
      if (!est_out.empty()) {
        write_text(est_out, j.dump(2) + "\n");
        write_manifest(est_out, "estimate", args, est_data.inputs(), json::object(), elapsed());
      }
      return 0;
    }

    if (str->parsed()) {
      const Dataset data = str_data.load();
      const StrengthReport sr = sample_strength(data);
      warn_if_weak(sr.lambda_min_over_sqrt_p, err);
      std::string text;
      if (str_format == "json") {
        json j;
        j["p"] = sr.p;
        j["lambda_min"] = sr.lambda_min;
        j["lambda_min_over_sqrt_p"] = sr.lambda_min_over_sqrt_p;
        j["conditional_f"] = to_json(sr.conditional_f);
        j["strength_matrix"] = to_json(sr.strength_matrix);
        text = j.dump(2) + "\n";
      } else {
        text = "statistic\tvalue\n";
        text += "p\t" + std::to_string(sr.p) + "\n";
        text += "lambda_min\t" + format_double(sr.lambda_min) + "\n";
        text += "lambda_min_over_sqrt_p\t" + format_double(sr.lambda_min_over_sqrt_p) + "\n";
        for (Index k = 0; k < sr.conditional_f.size(); ++k) {
          text += "conditional_f" + std::to_string(k + 1) + "\t" + format_double(sr.conditional_f(k)) + "\n";
        }
        for (Index r = 0; r < sr.strength_matrix.rows(); ++r) {
          for (Index c = 0; c < sr.strength_matrix.cols(); ++c) {
            text += "strength_matrix[" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "]\t" +
                    format_double(sr.strength_matrix(r, c)) + "\n";
          }
        }
      }
      out << text;
      if (!str_out.empty()) {
        write_text(str_out, text);
        write_manifest(str_out, "strength", args, str_data.inputs(), json::object(), elapsed());
      }
      return 0;
    }

    if (outl->parsed()) {
      if (out_pleiotropy && out_overlap) {
        throw ValidationError("--pleiotropy and --overlap cannot be combined");
      }
      const Dataset data = out_data.load();
      warn_if_weak(sample_strength_matrix(data).lambda_min_over_sqrt_p, err);
      const TuningMode mode = out_overlap      ? TuningMode::overlap
                              : out_pleiotropy ? TuningMode::pleiotropy
                                               : TuningMode::plain;
      const auto [pruned, report] = remove_outliers(data, alpha, max_iter, mode);
      json j;
      j["p_in"] = data.p();
      j["p_out"] = pruned.p();
      j["threshold"] = report.threshold;
      j["alpha"] = alpha;
      j["iterations"] = report.iterations;
      j["phi_star"] = report.phi_star;
      j["q_total"] = report.q_total;
      j["refused"] = report.refused;
      j["excluded_ids"] = report.excluded_ids;
      json contrib = json::array();
      for (std::size_t i = 0; i < data.p(); ++i) {
        contrib.push_back({{"snp", data.snp(i).id}, {"q", report.contributions(static_cast<Index>(i))}});
      }
      j["contributions"] = contrib;
      out << j.dump(2) << "\n";
      if (!report_path.empty()) {
        write_text(report_path, j.dump(2) + "\n");
        write_manifest(report_path, "outliers", args, out_data.inputs(), json::object(), elapsed());
      }
      if (!pruned_path.empty()) {
        write_dataset(pruned, pruned_path);
        write_manifest(pruned_path, "outliers", args, out_data.inputs(), json::object(), elapsed());
      }
      return 0;
    }

    if (sim->parsed()) {
      const std::string config_text = slurp(config_path);
      SimConfig config = parse_sim_config(config_text, std::filesystem::path(config_path).parent_path(), seed);
      if (reps) config.reps = reps;
      MonteCarloOptions opts;
      opts.threads = threads;
      if (!threads) {
        if (const char* env = std::getenv("MVMR_THREADS")) {
          opts.threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        }
      }
      const MetricsTable table = monte_carlo(config, opts);
      const std::string text = format_metrics(table);
      if (table.mean_lambda_min_over_sqrt_p < kWeakInstrumentThreshold) {
        warn_if_weak(table.mean_lambda_min_over_sqrt_p, err);
      }
      if (table_path.empty()) {
        out << text;
      } else {
        write_text(table_path, text);
        json inputs;
        inputs["config"] = config_path;
        json extra;
        extra["config_snapshot"] = config_text;
        extra["resolved_config"] = describe_config(config);
        extra["seed"] = seed;
        extra["reps"] = config.reps;
        write_manifest(table_path, "simulate", args, inputs, extra, elapsed());
      }
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace mvmr
