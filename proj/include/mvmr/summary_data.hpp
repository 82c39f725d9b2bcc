#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvmr/types.hpp"

namespace mvmr {

struct SnpSummary {
  std::string id;
  Vector gamma_hat;
  Vector se_x;
  double gamma_y_hat = 0.0;
  double se_y = 1.0;
  std::optional<Vector> cov_xy;
};

// Throws ValidationError mentioning `where` if an invariant is violated.
void validate_snp(const SnpSummary& snp, Index k, const std::string& where);

// Throws ValidationError unless `sigma` is a symmetric unit-diagonal
// positive definite matrix.
void validate_correlation(const Matrix& sigma, const std::string& what);

class Dataset {
 public:
  Dataset(std::vector<SnpSummary> snps, Matrix shared_correlation);

  const std::vector<SnpSummary>& snps() const { return snps_; }
  const SnpSummary& snp(std::size_t j) const { return snps_[j]; }
  const Matrix& shared_correlation() const { return shared_correlation_; }
  Index k() const { return shared_correlation_.rows(); }
  std::size_t p() const { return snps_.size(); }
  // True when every SNP carries cov_xy.
  bool has_cov_xy() const;

  Dataset subset(std::span<const std::size_t> rows) const;
  Dataset without(std::span<const std::size_t> rows) const;

 private:
  std::vector<SnpSummary> snps_;
  Matrix shared_correlation_;
};

// Dense per-SNP view consumed by the estimators. Separate from Dataset so
// unit tests can feed Sigma_Xj = 0 (no measurement error) directly.
struct Instruments {
  Matrix gamma_hat;             // p x K
  Vector gamma_y_hat;           // p
  Vector se_y;                  // p
  std::vector<Matrix> sigma_x;  // p matrices, K x K
  std::optional<Matrix> cov_xy; // p x K

  Index p() const { return gamma_hat.rows(); }
  Index k() const { return gamma_hat.cols(); }
};

Instruments to_instruments(const Dataset& data);

Matrix build_sigma_xj(const Vector& se_x, const Matrix& shared_correlation);

// Sample correlation of the columns of a T x K matrix of null-SNP
// Z-values, clipped to positive definite at 1e-8 when needed.
Matrix estimate_shared_correlation(const Matrix& z_scores);

Dataset load_dataset(const std::filesystem::path& path, Index k,
                     const std::optional<std::filesystem::path>& correlation_path = std::nullopt);
Dataset parse_dataset(const std::string& text, Index k, const Matrix& shared_correlation);

Matrix load_correlation(const std::filesystem::path& path, Index k);
Matrix parse_correlation(const std::string& text, Index k);

void write_dataset(const Dataset& data, const std::filesystem::path& path);
std::string format_dataset(const Dataset& data);
void write_correlation(const Matrix& sigma, const std::filesystem::path& path);

// Shortest round-trip decimal representation.
std::string format_double(double x);

}  // namespace mvmr
