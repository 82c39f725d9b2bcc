#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvmr/estimators.hpp"
#include "mvmr/summary_data.hpp"
#include "mvmr/types.hpp"

namespace mvmr {

struct TrueModel {
  Matrix gammas;  // p x K, before the strength divisor
  Matrix se_x;    // p x K
  Vector se_y;    // p
  Vector beta0;
  double tau0 = 0.0;
  Matrix shared_correlation;                // K x K
  std::optional<Matrix> overlap_correlation; // (K+1) x (K+1), outcome last
};

enum class CausalPreset { beta_a, beta_b, custom };
enum class StrengthPreset { first_weak, all_similar };
enum class SimMode { summary, individual };

struct IndividualParams {
  std::size_t n = 10000;
  std::size_t p = 2000;
  std::size_t s = 1000;
  double h2 = 0.1;
  double eta_x = 1.0;
  double eta_y = 1.0;
  double intercept_y = 10.0;
  double selection_threshold = 0.0;  // 0 means 0.01 / K
  double null_threshold = 0.5;
};

struct SimConfig {
  TrueModel truth;
  CausalPreset causal_preset = CausalPreset::beta_a;
  StrengthPreset strength_preset = StrengthPreset::first_weak;
  double divisor = 1.0;
  std::size_t reps = 1000;
  std::uint64_t seed = 0;
  SimMode mode = SimMode::summary;
  IndividualParams individual;
  std::vector<Method> estimators{Method::mv_ivw, Method::srivw};
  // Tune phi over the grid for SRIVW-family methods (otherwise phi = 0).
  bool tune = true;
  // Draw Gamma_hat at its mean (noise only in gamma_hat).
  bool outcome_noise = true;
  // Every replication reuses the draws of replication 0.
  bool reuse_first_rep = false;
};

Vector beta_preset(CausalPreset preset);
// Correlation matrices of the paper's three-exposure designs.
Matrix default_shared_correlation();
Matrix default_overlap_correlation();

// True gamma after applying the strength preset and divisor.
Matrix effective_gammas(const SimConfig& config);

// Summary-mode config on the embedded template.
SimConfig summary_config(CausalPreset causal, StrengthPreset strength, double divisor);
// Individual-mode config; the true gamma_jk = phi_jk sqrt(2 h2 / s) are drawn from `seed`.
SimConfig individual_config(const IndividualParams& params, const Vector& beta0, std::uint64_t seed);

// Relative template paths resolve against base_dir. In individual mode the
// seed also fixes the true effects, so an override must be applied here.
SimConfig parse_sim_config(const std::string& toml_text,
                           const std::filesystem::path& base_dir = {},
                           std::optional<std::uint64_t> seed_override = std::nullopt);
SimConfig load_sim_config(const std::filesystem::path& path,
                          std::optional<std::uint64_t> seed_override = std::nullopt);
std::string describe_config(const SimConfig& config);

Dataset generate_summary(const SimConfig& config, std::size_t rep_index);

struct RegressionSummaries {
  Matrix beta;  // p x columns
  Matrix se;
};

struct IndividualDraw {
  RegressionSummaries exposure;   // p x K
  RegressionSummaries outcome;    // p x 1
  RegressionSummaries selection;  // p x K
};

IndividualDraw generate_individual(const SimConfig& config, std::size_t rep_index);

// Two-sided normal p-values of beta / se.
Matrix association_pvalues(const RegressionSummaries& summaries);
// SNPs with a p-value at or below `threshold` for at least one exposure.
std::vector<std::size_t> select_ivs(const RegressionSummaries& selection, Index k,
                                    double threshold);

struct IndividualDataset {
  Dataset data;
  std::vector<std::size_t> selected;
  std::size_t null_snps = 0;
};

// Selection, Sigma-hat estimation from null SNPs and assembly of the
// summary Dataset for one replication.
IndividualDataset assemble_individual(const SimConfig& config, const IndividualDraw& draw);

struct MetricRow {
  Method method = Method::srivw;
  Index exposure = 0;
  double beta0 = 0.0;
  double mean_est = 0.0;
  double sd = 0.0;
  double mean_se = 0.0;
  double coverage = 0.0;
};

struct MetricsTable {
  std::vector<MetricRow> rows;
  std::size_t reps = 0;
  std::size_t reps_used = 0;
  std::size_t failures = 0;
  double mean_lambda_min_over_sqrt_p = 0.0;
  // lambda_min / sqrt(p) of the true strength matrix (NaN when undefined).
  double mean_true_lambda_min_over_sqrt_p = 0.0;
  Vector mean_conditional_f;
  double mean_selected = 0.0;
  double mean_phi_star = 0.0;
  std::optional<double> mean_tau2;
  // Per-method replicate estimates (reps_used x K), kept for property tests.
  std::map<Method, Matrix> estimates;

  const MetricRow& row(Method method, Index exposure) const;
};

struct MonteCarloOptions {
  unsigned threads = 0;  // 0: hardware concurrency
};

MetricsTable monte_carlo(const SimConfig& config, const std::vector<Method>& estimators,
                         const MonteCarloOptions& options = {});
MetricsTable monte_carlo(const SimConfig& config, const MonteCarloOptions& options = {});

std::string format_metrics(const MetricsTable& table);

}  // namespace mvmr
