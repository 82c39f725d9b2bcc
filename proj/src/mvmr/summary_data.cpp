#include "mvmr/summary_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "mvmr/errors.hpp"
#include "mvmr/log.hpp"

namespace mvmr {

namespace {

std::string label(std::size_t row, const std::string& id) {
  return "row " + std::to_string(row) + " (SNP '" + id + "')";
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                    : pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(std::string_view text, double& value) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end && !text.empty();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void validate_snp(const SnpSummary& snp, Index k, const std::string& where) {
  if (snp.gamma_hat.size() != k || snp.se_x.size() != k) {
    throw ValidationError(where + ": expected " + std::to_string(k) + " exposure columns");
  }
  for (Index i = 0; i < k; ++i) {
    if (!std::isfinite(snp.gamma_hat(i))) {
      throw ValidationError(where + ": beta_x" + std::to_string(i + 1) + " is not finite");
    }
    if (!std::isfinite(snp.se_x(i)) || snp.se_x(i) <= 0.0) {
      throw ValidationError(where + ": se_x" + std::to_string(i + 1) +
                            " must be positive and finite");
    }
  }
  if (!std::isfinite(snp.gamma_y_hat)) {
    throw ValidationError(where + ": beta_y is not finite");
  }
  if (!std::isfinite(snp.se_y) || snp.se_y <= 0.0) {
    throw ValidationError(where + ": se_y must be positive and finite");
  }
  if (snp.cov_xy) {
    if (snp.cov_xy->size() != k) {
      throw ValidationError(where + ": cov_xy must have " + std::to_string(k) + " entries");
    }
    for (Index i = 0; i < k; ++i) {
      const double c = (*snp.cov_xy)(i);
      // Small slack so a correlation of exactly +-1 survives a decimal round trip.
      if (!std::isfinite(c) || std::abs(c) > snp.se_x(i) * snp.se_y * (1.0 + 1e-12)) {
        throw ValidationError(where + ": cov_xy" + std::to_string(i + 1) +
                              " implies a correlation outside [-1, 1]");
      }
    }
  }
}

void validate_correlation(const Matrix& sigma, const std::string& what) {
  if (sigma.rows() != sigma.cols() || sigma.rows() == 0) {
    throw ValidationError(what + " must be a non-empty square matrix");
  }
  if (!sigma.allFinite()) {
    throw ValidationError(what + " has non-finite entries");
  }
  for (Index i = 0; i < sigma.rows(); ++i) {
    if (std::abs(sigma(i, i) - 1.0) > 1e-10) {
      throw ValidationError(what + " must have unit diagonal");
    }
    for (Index j = 0; j < i; ++j) {
      if (std::abs(sigma(i, j) - sigma(j, i)) > 1e-10) {
        throw ValidationError(what + " must be symmetric");
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
    throw ValidationError(what + " is not positive definite");
  }
}

Dataset::Dataset(std::vector<SnpSummary> snps, Matrix shared_correlation)
    : snps_(std::move(snps)), shared_correlation_(std::move(shared_correlation)) {
  validate_correlation(shared_correlation_, "shared correlation matrix");
  const Index k = shared_correlation_.rows();
  if (snps_.size() < static_cast<std::size_t>(k)) {
    throw ValidationError("need at least K = " + std::to_string(k) + " SNPs, got " +
                          std::to_string(snps_.size()));
  }
  for (std::size_t j = 0; j < snps_.size(); ++j) {
    validate_snp(snps_[j], k, label(j + 1, snps_[j].id));
  }
}

bool Dataset::has_cov_xy() const {
  return std::all_of(snps_.begin(), snps_.end(),
                     [](const SnpSummary& s) { return s.cov_xy.has_value(); });
}

Dataset Dataset::subset(std::span<const std::size_t> rows) const {
  std::vector<SnpSummary> out;
  out.reserve(rows.size());
  for (const auto j : rows) {
    out.push_back(snps_.at(j));
  }
  return Dataset(std::move(out), shared_correlation_);
}

Dataset Dataset::without(std::span<const std::size_t> rows) const {
  std::vector<bool> drop(snps_.size(), false);
  for (const auto j : rows) {
    drop.at(j) = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < snps_.size(); ++j) {
    if (!drop[j]) {
      keep.push_back(j);
    }
  }
  return subset(keep);
}

Instruments to_instruments(const Dataset& data) {
  const auto p = static_cast<Index>(data.p());
  const Index k = data.k();
  Instruments out;
  out.gamma_hat.resize(p, k);
  out.gamma_y_hat.resize(p);
  out.se_y.resize(p);
  out.sigma_x.reserve(data.p());
  const bool overlap = data.has_cov_xy();
  if (overlap) {
    out.cov_xy = Matrix(p, k);
  }
  for (Index j = 0; j < p; ++j) {
    const auto& s = data.snp(static_cast<std::size_t>(j));
    out.gamma_hat.row(j) = s.gamma_hat.transpose();
    out.gamma_y_hat(j) = s.gamma_y_hat;
    out.se_y(j) = s.se_y;
    out.sigma_x.push_back(build_sigma_xj(s.se_x, data.shared_correlation()));
    if (overlap) {
      out.cov_xy->row(j) = s.cov_xy->transpose();
    }
  }
  return out;
}

Matrix build_sigma_xj(const Vector& se_x, const Matrix& shared_correlation) {
  if (shared_correlation.rows() != se_x.size() || shared_correlation.cols() != se_x.size()) {
    throw ValidationError("build_sigma_xj: se_x has length " + std::to_string(se_x.size()) +
                          " but the correlation matrix is " +
                          std::to_string(shared_correlation.rows()) + "x" +
                          std::to_string(shared_correlation.cols()));
  }
  // Elementwise so the result is exactly symmetric.
  return (se_x * se_x.transpose()).cwiseProduct(shared_correlation);
}

Matrix estimate_shared_correlation(const Matrix& z_scores) {
  const Index t = z_scores.rows();
  const Index k = z_scores.cols();
  if (t < 2) {
    throw InsufficientDataError("need at least 2 null SNPs to estimate the shared correlation, got " +
                                std::to_string(t));
  }
  if (t < 30) {
    logger()->warn("estimating the shared correlation from only {} null SNPs", t);
  }
  const Matrix centered = z_scores.rowwise() - z_scores.colwise().mean();
  const Matrix cov = centered.transpose() * centered;
  Vector sd(k);
  for (Index i = 0; i < k; ++i) {
    if (!(cov(i, i) > 0.0)) {
      throw InsufficientDataError("Z-value column " + std::to_string(i + 1) + " is constant");
    }
    sd(i) = std::sqrt(cov(i, i));
  }
  Matrix corr = sd.cwiseInverse().asDiagonal() * cov * sd.cwiseInverse().asDiagonal();
  corr = 0.5 * (corr + corr.transpose()).eval();
  corr.diagonal().setOnes();

  Eigen::SelfAdjointEigenSolver<Matrix> es(corr);
  if (es.eigenvalues().minCoeff() < 1e-8) {
    logger()->warn("estimated shared correlation is not positive definite (min eigenvalue {:.3g}); "
                   "clipping eigenvalues at 1e-8",
                   es.eigenvalues().minCoeff());
    const Vector w = es.eigenvalues().cwiseMax(1e-8);
    Matrix repaired = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
    const Vector d = repaired.diagonal().cwiseSqrt().cwiseInverse();
    corr = d.asDiagonal() * repaired * d.asDiagonal();
    corr = 0.5 * (corr + corr.transpose()).eval();
    corr.diagonal().setOnes();
  }
  return corr;
}

Dataset parse_dataset(const std::string& text, Index k, const Matrix& shared_correlation) {
  if (k < 1) {
    throw ValidationError("exposure count K must be positive");
  }
  if (shared_correlation.rows() != k) {
    throw ValidationError("correlation matrix is " + std::to_string(shared_correlation.rows()) +
                          "x" + std::to_string(shared_correlation.cols()) + " but K = " +
                          std::to_string(k));
  }
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::unordered_map<std::string, std::size_t> column;
  std::size_t n_columns = 0;
  bool header_seen = false;
  std::vector<SnpSummary> snps;

  std::size_t c_snp = 0, c_by = 0, c_sy = 0;
  std::vector<std::size_t> c_bx, c_sx, c_cov;
  bool with_cov = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (trim(line).empty() || line.front() == '#') {
      continue;
    }
    const auto fields = split(line, '\t');
    if (!header_seen) {
      header_seen = true;
      n_columns = fields.size();
      for (std::size_t i = 0; i < fields.size(); ++i) {
        column.emplace(std::string(trim(fields[i])), i);
      }
      auto need = [&](const std::string& name) {
        const auto it = column.find(name);
        if (it == column.end()) {
          throw ParseError("line " + std::to_string(line_no) + ": header lacks column '" + name +
                           "'");
        }
        return it->second;
      };
      c_snp = need("snp");
      for (Index i = 1; i <= k; ++i) {
        c_bx.push_back(need("beta_x" + std::to_string(i)));
        c_sx.push_back(need("se_x" + std::to_string(i)));
      }
      c_by = need("beta_y");
      c_sy = need("se_y");
      with_cov = column.count("cov_xy1") > 0;
      if (with_cov) {
        for (Index i = 1; i <= k; ++i) {
          c_cov.push_back(need("cov_xy" + std::to_string(i)));
        }
      }
      continue;
    }
    if (fields.size() != n_columns) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(n_columns) + " fields, found " +
                       std::to_string(fields.size()));
    }
    auto number = [&](std::size_t col) {
      double v = 0.0;
      if (!parse_number(fields[col], v)) {
        throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" +
                         std::string(fields[col]) + "' as a number");
      }
      return v;
    };
    SnpSummary s;
    s.id = std::string(trim(fields[c_snp]));
    s.gamma_hat.resize(k);
    s.se_x.resize(k);
    for (Index i = 0; i < k; ++i) {
      s.gamma_hat(i) = number(c_bx[static_cast<std::size_t>(i)]);
      s.se_x(i) = number(c_sx[static_cast<std::size_t>(i)]);
    }
    s.gamma_y_hat = number(c_by);
    s.se_y = number(c_sy);
    if (with_cov) {
      Vector c(k);
      for (Index i = 0; i < k; ++i) {
        c(i) = number(c_cov[static_cast<std::size_t>(i)]);
      }
      s.cov_xy = std::move(c);
    }
    validate_snp(s, k, label(snps.size() + 1, s.id) + " at line " + std::to_string(line_no));
    snps.push_back(std::move(s));
  }
  if (!header_seen) {
    throw ParseError("summary file is empty");
  }
  return Dataset(std::move(snps), shared_correlation);
}

Matrix parse_correlation(const std::string& text, Index k) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') {
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    std::vector<double> row;
    while (ls >> tok) {
      double v = 0.0;
      if (!parse_number(tok, v)) {
        throw ParseError("correlation file line " + std::to_string(line_no) + ": cannot parse '" +
                         tok + "'");
      }
      row.push_back(v);
    }
    if (row.size() != static_cast<std::size_t>(k)) {
      throw ParseError("correlation file line " + std::to_string(line_no) + ": expected " +
                       std::to_string(k) + " values");
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != static_cast<std::size_t>(k)) {
    throw ParseError("correlation file must have " + std::to_string(k) + " rows");
  }
  Matrix m(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  validate_correlation(m, "correlation file");
  return m;
}

Matrix load_correlation(const std::filesystem::path& path, Index k) {
  return parse_correlation(read_file(path), k);
}

Dataset load_dataset(const std::filesystem::path& path, Index k,
                     const std::optional<std::filesystem::path>& correlation_path) {
  Matrix sigma;
  if (correlation_path) {
    sigma = load_correlation(*correlation_path, k);
  } else {
    logger()->warn("no correlation file given; assuming uncorrelated exposure estimates "
                   "(identity shared correlation)");
    sigma = Matrix::Identity(k, k);
  }
  return parse_dataset(read_file(path), k, sigma);
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_dataset(const Dataset& data) {
  const Index k = data.k();
  const bool cov = data.has_cov_xy();
  std::string out = "snp";
  for (Index i = 1; i <= k; ++i) out += "\tbeta_x" + std::to_string(i);
  for (Index i = 1; i <= k; ++i) out += "\tse_x" + std::to_string(i);
  out += "\tbeta_y\tse_y";
  if (cov) {
    for (Index i = 1; i <= k; ++i) out += "\tcov_xy" + std::to_string(i);
  }
  out += '\n';
  for (const auto& s : data.snps()) {
    out += s.id;
    for (Index i = 0; i < k; ++i) out += '\t' + format_double(s.gamma_hat(i));
    for (Index i = 0; i < k; ++i) out += '\t' + format_double(s.se_x(i));
    out += '\t' + format_double(s.gamma_y_hat);
    out += '\t' + format_double(s.se_y);
    if (cov) {
      for (Index i = 0; i < k; ++i) out += '\t' + format_double((*s.cov_xy)(i));
    }
    out += '\n';
  }
  return out;
}

void write_dataset(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  out << format_dataset(data);
}

void write_correlation(const Matrix& sigma, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  for (Index i = 0; i < sigma.rows(); ++i) {
    for (Index j = 0; j < sigma.cols(); ++j) {
      out << (j ? "\t" : "") << format_double(sigma(i, j));
    }
    out << '\n';
  }
}

}  // namespace mvmr
