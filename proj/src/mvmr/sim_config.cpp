#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <toml.hpp>

#include "mvmr/errors.hpp"
#include "mvmr/simulate.hpp"

namespace mvmr {

namespace {

const std::set<std::string> kTopKeys = {
    "mode",        "causal",        "beta0",     "strength",       "divisor",
    "reps",        "seed",          "estimators", "tune",          "tau0",
    "tau0_factor", "overlap",       "overlap_correlation", "template", "correlation",
    "outcome_noise", "reuse_first_rep", "individual"};
const std::set<std::string> kIndividualKeys = {"n",     "p",     "s",           "h2",
                                               "eta_x", "eta_y", "intercept_y", "selection_threshold",
                                               "null_threshold"};

double as_number(const toml::node& node, const std::string& key) {
  if (auto v = node.value<double>()) return *v;
  throw ValidationError("config key '" + key + "' must be a number");
}

Vector as_vector(const toml::node& node, const std::string& key) {
  const auto* arr = node.as_array();
  if (!arr || arr->empty()) {
    throw ValidationError("config key '" + key + "' must be a non-empty array of numbers");
  }
  Vector v(static_cast<Index>(arr->size()));
  for (std::size_t i = 0; i < arr->size(); ++i) {
    v(static_cast<Index>(i)) = as_number((*arr)[i], key);
  }
  return v;
}

Matrix as_matrix(const toml::node& node, const std::string& key) {
  const auto* arr = node.as_array();
  if (!arr || arr->empty()) {
    throw ValidationError("config key '" + key + "' must be an array of rows");
  }
  const auto n = static_cast<Index>(arr->size());
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const Vector row = as_vector((*arr)[static_cast<std::size_t>(i)], key);
    if (row.size() != n) {
      throw ValidationError("config key '" + key + "' must be a square matrix");
    }
    m.row(i) = row.transpose();
  }
  return m;
}

std::size_t as_count(const toml::node& node, const std::string& key) {
  const auto v = node.value<std::int64_t>();
  if (!v || *v < 0) {
    throw ValidationError("config key '" + key + "' must be a nonnegative integer");
  }
  return static_cast<std::size_t>(*v);
}

std::string as_string(const toml::node& node, const std::string& key) {
  if (auto v = node.value<std::string>()) return *v;
  throw ValidationError("config key '" + key + "' must be a string");
}

bool as_bool(const toml::node& node, const std::string& key) {
  if (auto v = node.value<bool>()) return *v;
  throw ValidationError("config key '" + key + "' must be true or false");
}

Index count_exposure_columns(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string f;
    Index k = 0;
    while (std::getline(fields, f, '\t')) {
      if (f.rfind("beta_x", 0) == 0) ++k;
    }
    return k;
  }
  return 0;
}

}  // namespace

SimConfig parse_sim_config(const std::string& toml_text, const std::filesystem::path& base_dir,
                           std::optional<std::uint64_t> seed_override) {
  toml::table tbl;
  try {
    tbl = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << "config parse error at line " << e.source().begin.line << ": " << e.description();
    throw ParseError(msg.str());
  }
  for (const auto& [key, node] : tbl) {
    if (!kTopKeys.count(std::string(key.str()))) {
      throw ValidationError("unknown config key '" + std::string(key.str()) + "'");
    }
  }

  const std::string mode = tbl["mode"] ? as_string(*tbl.get("mode"), "mode") : "summary";
  SimConfig c;
  if (mode == "summary") {
    c = summary_config(CausalPreset::beta_a, StrengthPreset::first_weak, 1.0);
  } else if (mode != "individual") {
    throw ValidationError("mode must be 'summary' or 'individual'");
  }

  CausalPreset causal = mode == "summary" ? CausalPreset::beta_a : CausalPreset::custom;
  if (const auto* n = tbl.get("causal")) {
    const std::string s = as_string(*n, "causal");
    if (s == "beta_a") causal = CausalPreset::beta_a;
    else if (s == "beta_b") causal = CausalPreset::beta_b;
    else if (s == "custom") causal = CausalPreset::custom;
    else throw ValidationError("causal must be beta_a, beta_b or custom");
  }
  Vector beta0;
  if (const auto* n = tbl.get("beta0")) {
    if (causal != CausalPreset::custom) {
      throw ValidationError("beta0 may only be given with causal = \"custom\"");
    }
    beta0 = as_vector(*n, "beta0");
  } else if (causal == CausalPreset::custom) {
    if (mode == "summary") throw ValidationError("causal = \"custom\" requires beta0");
    beta0 = Vector{{1.0, -0.5, 0.5}};
  } else {
    beta0 = beta_preset(causal);
  }

  if (mode == "individual") {
    IndividualParams ip;
    if (const auto* sub = tbl.get("individual")) {
      const auto* t = sub->as_table();
      if (!t) throw ValidationError("[individual] must be a table");
      for (const auto& [key, node] : *t) {
        const std::string k(key.str());
        if (!kIndividualKeys.count(k)) {
          throw ValidationError("unknown config key 'individual." + k + "'");
        }
        if (k == "n") ip.n = as_count(node, k);
        else if (k == "p") ip.p = as_count(node, k);
        else if (k == "s") ip.s = as_count(node, k);
        else if (k == "h2") ip.h2 = as_number(node, k);
        else if (k == "eta_x") ip.eta_x = as_number(node, k);
        else if (k == "eta_y") ip.eta_y = as_number(node, k);
        else if (k == "intercept_y") ip.intercept_y = as_number(node, k);
        else if (k == "selection_threshold") ip.selection_threshold = as_number(node, k);
        else if (k == "null_threshold") ip.null_threshold = as_number(node, k);
      }
    }
    std::uint64_t seed = tbl["seed"] ? as_count(*tbl.get("seed"), "seed") : 0;
    if (seed_override) seed = *seed_override;
    c = individual_config(ip, beta0, seed);
    for (const char* k : {"strength", "divisor", "tau0", "tau0_factor", "overlap",
                          "overlap_correlation", "template", "correlation"}) {
      if (tbl.get(k)) {
        throw ValidationError(std::string("config key '") + k + "' applies to summary mode only");
      }
    }
  } else {
    if (tbl.get("individual")) {
      throw ValidationError("[individual] applies to individual mode only");
    }
    if (const auto* n = tbl.get("template")) {
      std::filesystem::path path = as_string(*n, "template");
      if (path.is_relative()) path = base_dir / path;
      std::ifstream in(path);
      if (!in) throw ParseError("cannot open template '" + path.string() + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      const Index k = count_exposure_columns(ss.str());
      if (k < 1) throw ParseError("template '" + path.string() + "' has no beta_x columns");
      const Dataset d = parse_dataset(ss.str(), k, Matrix::Identity(k, k));
      const auto p = static_cast<Index>(d.p());
      c.truth.gammas.resize(p, k);
      c.truth.se_x.resize(p, k);
      c.truth.se_y.resize(p);
      for (Index j = 0; j < p; ++j) {
        const auto& s = d.snp(static_cast<std::size_t>(j));
        c.truth.gammas.row(j) = s.gamma_hat.transpose();
        c.truth.se_x.row(j) = s.se_x.transpose();
        c.truth.se_y(j) = s.se_y;
      }
      if (k != 3) c.truth.shared_correlation = Matrix::Identity(k, k);
    }
    if (const auto* n = tbl.get("correlation")) {
      c.truth.shared_correlation = as_matrix(*n, "correlation");
    }
    if (const auto* n = tbl.get("strength")) {
      const std::string s = as_string(*n, "strength");
      if (s == "first_weak") c.strength_preset = StrengthPreset::first_weak;
      else if (s == "all_similar") c.strength_preset = StrengthPreset::all_similar;
      else throw ValidationError("strength must be first_weak or all_similar");
    }
    if (const auto* n = tbl.get("divisor")) c.divisor = as_number(*n, "divisor");
    if (tbl.get("tau0") && tbl.get("tau0_factor")) {
      throw ValidationError("give either tau0 or tau0_factor, not both");
    }
    if (const auto* n = tbl.get("tau0")) c.truth.tau0 = as_number(*n, "tau0");
    if (const auto* n = tbl.get("tau0_factor")) {
      c.truth.tau0 = as_number(*n, "tau0_factor") * c.truth.se_y.mean();
    }
    if (const auto* n = tbl.get("overlap_correlation")) {
      c.truth.overlap_correlation = as_matrix(*n, "overlap_correlation");
    } else if (const auto* o = tbl.get("overlap"); o && as_bool(*o, "overlap")) {
      c.truth.overlap_correlation = default_overlap_correlation();
    }
    if (c.truth.overlap_correlation) {
      validate_correlation(*c.truth.overlap_correlation, "overlap_correlation");
      c.truth.shared_correlation =
          c.truth.overlap_correlation->topLeftCorner(c.truth.gammas.cols(), c.truth.gammas.cols());
    }
  }

  c.causal_preset = causal;
  c.truth.beta0 = beta0;
  if (c.truth.beta0.size() != c.truth.gammas.cols()) {
    throw ValidationError("beta0 has " + std::to_string(c.truth.beta0.size()) +
                          " entries but the design has " + std::to_string(c.truth.gammas.cols()) +
                          " exposures");
  }
  validate_correlation(c.truth.shared_correlation, "shared correlation");
  if (c.truth.shared_correlation.rows() != c.truth.gammas.cols()) {
    throw ValidationError("shared correlation does not match the exposure count");
  }
  if (!(c.divisor > 0.0)) throw ValidationError("divisor must be positive");
  if (!(c.truth.tau0 >= 0.0)) throw ValidationError("tau0 must be nonnegative");

  if (const auto* n = tbl.get("reps")) c.reps = as_count(*n, "reps");
  if (c.reps < 1) throw ValidationError("reps must be at least 1");
  if (const auto* n = tbl.get("seed")) c.seed = as_count(*n, "seed");
  if (seed_override) c.seed = *seed_override;
  if (const auto* n = tbl.get("tune")) c.tune = as_bool(*n, "tune");
  if (const auto* n = tbl.get("outcome_noise")) c.outcome_noise = as_bool(*n, "outcome_noise");
  if (const auto* n = tbl.get("reuse_first_rep")) c.reuse_first_rep = as_bool(*n, "reuse_first_rep");
  if (const auto* n = tbl.get("estimators")) {
    const auto* arr = n->as_array();
    if (!arr || arr->empty()) throw ValidationError("estimators must be a non-empty array");
    c.estimators.clear();
    for (const auto& e : *arr) c.estimators.push_back(parse_method(as_string(e, "estimators")));
  } else if (c.truth.overlap_correlation) {
    c.estimators = {Method::srivw, Method::srivw_overlap};
  } else if (c.truth.tau0 > 0.0) {
    c.estimators = {Method::mv_ivw, Method::srivw_pleiotropy};
  }
  return c;
}

SimConfig load_sim_config(const std::filesystem::path& path,
                          std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sim_config(ss.str(), path.parent_path(), seed_override);
}

std::string describe_config(const SimConfig& c) {
  std::ostringstream out;
  out << "mode=" << (c.mode == SimMode::summary ? "summary" : "individual") << " p="
      << c.truth.gammas.rows() << " K=" << c.truth.gammas.cols() << " divisor=" << c.divisor
      << " strength=" << (c.strength_preset == StrengthPreset::first_weak ? "first_weak" : "all_similar")
      << " tau0=" << c.truth.tau0 << " overlap=" << (c.truth.overlap_correlation ? "yes" : "no")
      << " reps=" << c.reps << " seed=" << c.seed << " estimators=";
  for (std::size_t i = 0; i < c.estimators.size(); ++i) {
    out << (i ? "," : "") << to_string(c.estimators[i]);
  }
  return out.str();
}

}  // namespace mvmr
