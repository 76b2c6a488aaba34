// Copyright 2026 The hypscatter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypscatter/drivers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>

#include "hypscatter/acceptance.hpp"
#include "hypscatter/census.hpp"
#include "hypscatter/error.hpp"
#include "hypscatter/expected.hpp"
#include "hypscatter/io.hpp"
#include "hypscatter/lengths.hpp"
#include "hypscatter/scattering.hpp"
#include "hypscatter/zerodist.hpp"

#ifndef HS_VERSION
#define HS_VERSION "0.1.0"
#endif

namespace hs::drivers {

using json = nlohmann::ordered_json;
using lattices::LatticeId;
using lattices::LatticeKind;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  try {
    return io::parse_double(value);
  } catch (const Error&) {
    throw Error(ErrorCode::invalid_argument, "config: " + key + " expects a number, got '" +
                                                 value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw Error(ErrorCode::invalid_argument, "config: " + key + " expects true/false");
}

json config_json(const RunConfig& cfg) {
  json j;
  j["lattice"] = cfg.lattice.name();
  j["compare"] = cfg.compare ? json(cfg.compare->name()) : json(nullptr);
  j["tmax"] = cfg.T_max;
  j["lmax"] = cfg.L_max;
  j["lambda_max"] = cfg.lambda_max;
  j["precision"] = cfg.precision.tag();
  j["out"] = cfg.out_dir.string();
  j["seed"] = cfg.seed;
  j["a_max"] = cfg.a_max;
  j["perturbation"] = cfg.perturbation;
  return j;
}

json envelope(const std::string& command, const RunConfig& cfg) {
  json j;
  j["command"] = command;
  j["version"] = version();
  j["config"] = config_json(cfg);
  return j;
}

// Non-finite numbers become strings so the document stays valid JSON.
json value(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

class Output {
 public:
  Output(const RunConfig& cfg, const Log& log) : dir_(cfg.out_dir), log_(log) {
    std::filesystem::create_directories(dir_);
  }

  void csv(const std::string& name, const std::vector<std::string>& header,
           const std::vector<std::vector<double>>& rows) {
    io::write_text_atomic(dir_ / name, io::to_csv(header, rows));
    log_("wrote " + (dir_ / name).string() + " (" + std::to_string(rows.size()) + " rows)");
  }

  void summary(const std::string& name, const json& j) {
    io::write_text_atomic(dir_ / name, j.dump(2) + "\n");
    log_("wrote " + (dir_ / name).string());
  }

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  const Log& log_;
};

struct Checks {
  json list = json::array();
  bool ok = true;

  void add(const std::string& name, bool pass, const std::string& detail, const Log& log) {
    list.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    ok = ok && pass;
    log(std::string(pass ? "ok    " : "FAIL  ") + name + ": " + detail);
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

void RunConfig::set(const std::string& raw_key, const std::string& raw_value) {
  std::string key = trim(raw_key);
  std::replace(key.begin(), key.end(), '-', '_');
  const std::string v = trim(raw_value);
  if (key == "config") {
    load_file(v);
  } else if (key == "lattice") {
    lattice = LatticeId::parse(v);
  } else if (key == "compare") {
    if (v.empty() || v == "none")
      compare.reset();
    else
      compare = LatticeId::parse(v);
  } else if (key == "tmax" || key == "t_max") {
    T_max = parse_number(key, v);
  } else if (key == "lmax" || key == "l_max") {
    L_max = parse_number(key, v);
  } else if (key == "lambda_max") {
    lambda_max = parse_number(key, v);
  } else if (key == "precision") {
    precision = specfun::PrecisionProfile::parse(v);
  } else if (key == "out") {
    out_dir = v;
  } else if (key == "cache") {
    cache_dir = v;
  } else if (key == "expected") {
    expected_path = v;
  } else if (key == "seed") {
    const double s = parse_number(key, v);
    require(s >= 0 && s == std::floor(s), ErrorCode::invalid_argument,
            "config: seed must be a nonnegative integer");
    seed = static_cast<std::uint64_t>(s);
  } else if (key == "a_max") {
    const double a = parse_number(key, v);
    require(a == std::floor(a), ErrorCode::invalid_argument, "config: a_max must be an integer");
    a_max = static_cast<int>(a);
  } else if (key == "perturbation") {
    perturbation = v;
  } else if (key == "freeze") {
    freeze = parse_bool(key, v);
  } else {
    throw Error(ErrorCode::invalid_argument, "config: unknown key '" + raw_key + "'");
  }
}

void RunConfig::load_file(const std::filesystem::path& path) {
  std::istringstream in(io::read_text(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, ErrorCode::invalid_argument,
            path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    set(line.substr(0, eq), line.substr(eq + 1));
  }
}

RunConfig RunConfig::from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  RunConfig cfg;
  for (const auto& [k, v] : pairs) cfg.set(k, v);
  return cfg;
}

void RunConfig::validate() const {
  require(T_max > 0.0 && T_max <= kMaxT, ErrorCode::invalid_argument,
          "tmax must lie in (0, 100]");
  require(L_max > 0.0 && L_max <= kMaxL, ErrorCode::invalid_argument,
          "lmax must lie in (0, 15]");
  require(lambda_max >= 0.0 && lambda_max <= kMaxLambda, ErrorCode::invalid_argument,
          "lambda-max must lie in [0, 1e8]");
  require(a_max >= 1 && a_max <= 10, ErrorCode::invalid_argument, "a_max must lie in [1, 10]");
  require(perturbation == "single" || perturbation == "pair", ErrorCode::invalid_argument,
          "perturbation must be single or pair");
  require(!out_dir.empty(), ErrorCode::invalid_argument, "out directory is empty");
  precision.validate();
}

std::filesystem::path RunConfig::cache() const {
  return cache_dir.empty() ? out_dir / "cache" : cache_dir;
}

std::string version() { return HS_VERSION; }

int cmd_scattering(const RunConfig& cfg, const Log& log) {
  cfg.validate();
  Output out(cfg, log);
  Checks checks;
  const auto lattice = lattices::make_lattice(cfg.lattice);
  const auto m = scattering::build_closed_form(lattice, cfg.precision);
  const double h = 0.5 * (m.d - 1);

  std::vector<std::vector<double>> rows;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 10; ++j) {
      const double sigma = (m.d - 1) * (0.1 + 0.8 * i / 19.0), t = 30.0 * j / 9.0;
      const double r = scattering::functional_equation_residual(m, Complex(sigma, t));
      worst = std::max(worst, r);
      rows.push_back({sigma, t, r});
    }
  out.csv("residuals.csv", {"sigma", "t", "residual"}, rows);
  checks.add("functional_equation", worst < 1e-8, "max residual " + sci(worst), log);

  rows.clear();
  std::vector<double> ts;
  for (int k = 0; k < 100; ++k) ts.push_back(0.5 + 49.5 * k / 99.0);
  const auto ratios = scattering::critical_line_ratios(m, ts);
  double unit = 0.0, ratio_lo = INFINITY, ratio_hi = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double mod = std::abs(scattering::scattering_determinant(m, Complex(h, ts[k])));
    unit = std::max(unit, std::abs(mod - 1.0));
    ratio_lo = std::min(ratio_lo, ratios[k]);
    ratio_hi = std::max(ratio_hi, ratios[k]);
    rows.push_back({ts[k], mod, ratios[k]});
  }
  out.csv("critical_line.csv", {"t", "abs_det", "lstar_ratio"}, rows);
  checks.add("critical_line_unitarity", unit <= 1e-8, "max | |det| - 1 | " + sci(unit), log);
  checks.add("a_gamma_constant", (ratio_hi - ratio_lo) <= 1e-8 * ratio_hi,
             "ratio spread " + sci(ratio_hi - ratio_lo) + " around " + sci(m.a_gamma), log);

  rows.clear();
  double C = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 10; ++j) {
      const double sigma = h + (m.d - h) * i / 4.0, t = 1.0 + 49.0 * j / 9.0;
      const auto row = scattering::maass_selberg_bound_check(m, sigma, t);
      C = std::max(C, row.lhs / row.rhs);
      rows.push_back({sigma, t, row.lhs, row.rhs, row.lhs / row.rhs});
    }
  out.csv("maass_selberg.csv", {"sigma", "t", "lhs", "rhs", "ratio"}, rows);

  json series_info = nullptr;
  if (cfg.lambda_max <= 0.0) {
    log("warning: lambda-max is 0, series model skipped");
  } else {
    const auto series = scattering::build_from_double_cosets(lattice, cfg.lambda_max);
    rows.clear();
    double excess = -INFINITY;
    bool any_empty = false;
    for (const auto& e : series.entries) any_empty = any_empty || e.empty;
    for (double shift : {0.6, 1.0, 1.5, 2.0})
      for (double t : {0.0, 2.0, 10.0, 30.0}) {
        const Complex s(m.d - 1 + shift, t);
        const auto pv = scattering::phi_with_bound(series, s);
        const auto closed = scattering::phi_matrix(m, s);
        double diff = 0.0, bound = 0.0;
        for (int i = 0; i < m.kappa; ++i)
          for (int j = 0; j < m.kappa; ++j) {
            const double dij = std::abs(pv.value(i, j) - closed(i, j));
            diff = std::max(diff, dij);
            bound = std::max(bound, pv.tail_bound(i, j));
            excess = std::max(excess, dij - pv.tail_bound(i, j) - 1e-12 * std::abs(closed(i, j)));
          }
        rows.push_back({s.real(), t, diff, bound});
      }
    out.csv("series_agreement.csv", {"sigma", "t", "max_entry_diff", "max_tail_bound"}, rows);
    checks.add("series_within_tail_bound", excess <= 0.0,
               "lambda-max " + sci(cfg.lambda_max), log);
    if (any_empty) log("warning: some series entries are empty at this lambda-max");
    scattering::export_model(series, out.dir() / "series_model");
    series_info = {{"lambda_max", cfg.lambda_max},
                   {"has_normalization", series.has_normalization},
                   {"a", series.normalization.a},
                   {"b", series.normalization.b},
                   {"empty_entries", any_empty}};
  }

  auto j = envelope("scattering", cfg);
  j["d"] = m.d;
  j["kappa"] = m.kappa;
  j["normalization"] = {{"a", m.normalization.a}, {"b", m.normalization.b}};
  j["a_gamma"] = m.a_gamma;
  j["max_functional_equation_residual"] = worst;
  j["max_unitarity_deviation"] = unit;
  j["maass_selberg_C"] = C;
  j["series"] = series_info;
  j["checks"] = checks.list;
  j["pass"] = checks.ok;
  out.summary("scattering.json", j);
  return checks.ok ? 0 : 1;
}

int cmd_zeros(const RunConfig& cfg, const Log& log) {
  cfg.validate();
  Output out(cfg, log);
  Checks checks;
  const auto m = scattering::build_closed_form(lattices::make_lattice(cfg.lattice), cfg.precision);
  const auto data = scattering::lstar_data(m);
  const double h = 0.5 * (m.d - 1);
  const double T = cfg.T_max;

  const auto c = census::lstar_census(m, std::max(T, 1.0));
  std::vector<std::vector<double>> rows;
  for (const auto& z : c.zeros) rows.push_back({z.beta, z.gamma, double(z.multiplicity)});
  out.csv("zeros.csv", {"beta", "gamma", "multiplicity"}, rows);
  const int located = census::total_multiplicity(c.zeros);
  checks.add("census_count", located == c.rectangle_count,
             std::to_string(located) + " located, argument principle " +
                 std::to_string(c.rectangle_count),
             log);

  json oracle_info = nullptr;
  if (m.lattice.kind != LatticeKind::gaussian) {
    const auto zz = specfun::zeta_zeros_cached(2.0 * T, cfg.precision, cfg.cache());
    const auto oracle = census::oracle_zeros(m, T, zz);
    const auto match = census::match_zeros(c.zeros, oracle, 1e-6);
    checks.add("oracle_match", match.counts_match && match.unmatched == 0,
               std::to_string(census::total_multiplicity(oracle)) +
                   " predicted, max distance " + sci(match.max_distance),
               log);
    oracle_info = {{"predicted", census::total_multiplicity(oracle)},
                   {"max_distance", match.max_distance},
                   {"unmatched", match.unmatched}};
  }

  json fit_info = nullptr;
  if (T >= 50.0 && !c.zeros.empty()) {
    std::vector<double> grid;
    for (double x = 20.0; x <= T + 1e-9; x += 10.0) grid.push_back(x);
    const auto fit = zerodist::verify_main_term(c.zeros, m.d, m.kappa, grid);
    rows.clear();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double model = fit.leading * grid[i] * std::log(grid[i]) + fit.A * grid[i];
      rows.push_back({grid[i], fit.F1_values[i], model, fit.residuals[i]});
    }
    out.csv("sums.csv", {"T", "F1", "model", "residual"}, rows);
    fit_info = {{"leading", fit.leading},
                {"A", fit.A},
                {"A_predicted", zerodist::main_term_linear_coefficient(m.d, m.kappa, m.a_gamma)},
                {"sup_residual_over_log", fit.sup_residual_over_log},
                {"rms_residual", fit.rms_residual}};
  } else {
    log("notice: main-term fit skipped (needs tmax >= 50 and at least one zero)");
  }

  std::vector<double> levels;
  for (double x : {T / 4.0, T / 2.0, T})
    if (x >= 5.0) levels.push_back(x);

  const double alpha_strip = m.d - 1.25 + 0.05;
  rows.clear();
  if (!levels.empty())
    for (const auto& row : zerodist::verify_strip_concentration(c.zeros, m.d, alpha_strip, levels))
      rows.push_back({alpha_strip, row.T, row.F1, row.scale, row.ratio});
  out.csv("strip.csv", {"alpha", "T", "F1", "scale", "ratio"}, rows);

  rows.clear();
  double lw = 0.0;
  for (double alpha : {h + 0.1, h + 0.25})
    for (double x : {20.0, 30.0}) {
      if (x > T) continue;
      const auto parts = zerodist::littlewood_rhs(data, alpha, x);
      const double f1 = zerodist::F1_sum(c.zeros, alpha, x);
      lw = std::max(lw, std::abs(parts.total() - f1));
      rows.push_back({alpha, x, parts.log_integral, parts.arg_integral, parts.pole_term,
                      parts.total(), f1, parts.total() - f1});
    }
  out.csv("littlewood.csv",
          {"alpha", "T", "log_integral", "arg_integral", "pole_term", "total", "F1", "diff"}, rows);
  if (!rows.empty()) checks.add("littlewood", lw < 1e-3, "max |diff| " + sci(lw), log);

  int sandwich_fail = 0, sandwich_total = 0;
  for (double x = 2.0; x + 1.0 <= T; x += 0.5) {
    auto F = [&](double y) { return zerodist::F_smoothed_sum(c.zeros, h, y); };
    ++sandwich_total;
    if (!zerodist::sandwich_check(F(x - 1), F(x), F(x + 1), zerodist::F1_sum(c.zeros, h, x), 1e-9))
      ++sandwich_fail;
  }
  checks.add("sandwich", sandwich_fail == 0,
             std::to_string(sandwich_total - sandwich_fail) + "/" +
                 std::to_string(sandwich_total) + " hold",
             log);

  rows.clear();
  std::vector<double> int_levels;
  for (double x : {20.0, 40.0, 80.0})
    if (x <= T) int_levels.push_back(x);
  if (int_levels.empty() && T >= 5.0) int_levels.push_back(T);
  for (double x : int_levels) {
    const auto s = zerodist::smoothed_critical_integral(data, m.a_gamma, x);
    rows.push_back({x, s.numeric, s.model, s.numeric - s.model});
  }
  out.csv("integrals.csv", {"T", "numeric", "closed_form", "diff"}, rows);

  rows.clear();
  auto det = [&](Complex s) { return scattering::scattering_determinant(m, s); };
  for (double x = 5.0; x <= T + 1e-9; x += 5.0)
    rows.push_back({x, zerodist::phase_integral(det, m.d, x)});
  out.csv("phase.csv", {"T", "phase_integral"}, rows);

  auto j = envelope("zeros", cfg);
  j["zeros"] = located;
  j["rectangle"] = {c.rectangle.re_min, c.rectangle.re_max, c.rectangle.im_min,
                    c.rectangle.im_max};
  j["rectangle_count"] = c.rectangle_count;
  j["real_axis_count"] = c.real_axis_count;
  j["real_axis_expected"] = c.real_axis_expected;
  j["oracle"] = oracle_info;
  j["main_term"] = fit_info;
  j["a_gamma"] = m.a_gamma;
  j["checks"] = checks.list;
  j["pass"] = checks.ok;
  out.summary("zeros.json", j);
  return checks.ok ? 0 : 1;
}

int cmd_lengths(const RunConfig& cfg, const Log& log) {
  cfg.validate();
  Output out(cfg, log);
  Checks checks;
  const auto model = lattices::make_lattice(cfg.lattice);
  const auto spec = lengths::length_spectrum(model, cfg.L_max);
  auto spectrum_rows = [](const lengths::LengthSpectrum& s) {
    std::vector<std::vector<double>> rows;
    for (const auto& e : s) rows.push_back({e.length, double(e.multiplicity), double(e.trace)});
    return rows;
  };
  out.csv("spectrum.csv", {"length", "multiplicity", "trace"}, spectrum_rows(spec));

  // brute force agreement on the traces both methods cover
  const auto trace_cap = std::min<std::int64_t>(20, std::floor(2.0 * std::cosh(cfg.L_max / 2.0)));
  if (trace_cap >= 3 && (model.id.kind == LatticeKind::sl2z || model.id == LatticeId::parse("Gamma0(2)"))) {
    const auto oracle = lengths::brute_force_conjugacy_oracle(model, trace_cap, 100);
    std::map<std::int64_t, std::int64_t> a, b;
    for (const auto& e : spec)
      if (e.trace <= trace_cap) a[e.trace] = e.multiplicity;
    for (const auto& r : oracle.rows) b[r.trace] = r.primitive_classes;
    checks.add("oracle_multiplicities", a == b && oracle.saturated,
               std::to_string(b.size()) + " traces up to " + std::to_string(trace_cap), log);
  }

  json comparison = nullptr;
  if (cfg.compare) {
    const auto other = lengths::length_spectrum(lattices::make_lattice(*cfg.compare), cfg.L_max);
    out.csv("spectrum_compare.csv", {"length", "multiplicity", "trace"}, spectrum_rows(other));
    std::vector<double> grid;
    for (double x = 1.0; x <= cfg.L_max + 1e-9; x += 0.5) grid.push_back(x);
    const auto cmp = lengths::compare_spectra(spec, other, grid);
    std::vector<std::vector<double>> rows;
    bool monotone = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      rows.push_back({grid[i], cmp.DL_values[i]});
      if (i && cmp.DL_values[i] < cmp.DL_values[i - 1]) monotone = false;
    }
    out.csv("comparison.csv", {"T", "DL"}, rows);
    checks.add("DL_monotone", monotone, "against " + cfg.compare->name(), log);
    comparison = {{"lattice", cfg.compare->name()}, {"dl_estimate", value(cmp.dl_estimate)}};
  }

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> re(3.0, 6.0), im(-30.0, 30.0);
  std::vector<std::vector<double>> rows;
  double worst = 0.0, worst_inverse = INFINITY;
  for (int k = 0; k < 20; ++k) {
    const Complex s(re(rng), im(rng));
    const auto matched = lengths::zeta_identity_check(spec, s, cfg.L_max, cfg.a_max);
    const auto unmatched = lengths::zeta_identity_check(spec, s, cfg.L_max, cfg.a_max, false);
    const auto orient = lengths::ruelle_orientation(spec, s, cfg.L_max, cfg.a_max);
    worst = std::max(worst, matched.residual);
    worst_inverse = std::min(worst_inverse, orient.inverse);
    rows.push_back({s.real(), s.imag(), matched.residual, unmatched.residual, unmatched.predicted,
                    orient.inverse});
  }
  out.csv("zeta_identity.csv",
          {"re", "im", "residual", "unmatched_residual", "unmatched_predicted",
           "inverse_orientation_residual"},
          rows);
  checks.add("zeta_identity", worst < 1e-12, "max matched residual " + sci(worst), log);

  std::vector<lengths::PerturbationTerm> terms = {{2.0 * kPi, 1}};
  if (cfg.perturbation == "pair") terms.push_back({kPi, -1});
  rows.clear();
  int mismatches = 0;
  for (const auto& p : lengths::locate_perturbation_points(terms, cfg.a_max, 5)) {
    rows.push_back({p.location.real(), p.location.imag(), double(p.a), double(p.b),
                    double(p.formula_order), double(p.located_order)});
    if (p.formula_order != p.located_order) ++mismatches;
  }
  out.csv("poles.csv", {"re", "im", "a", "b", "formula_order", "located_order"}, rows);
  checks.add("perturbation_orders", mismatches == 0,
             std::to_string(rows.size() - mismatches) + "/" + std::to_string(rows.size()) +
                 " orders match",
             log);

  auto j = envelope("lengths", cfg);
  j["entries"] = spec.size();
  std::int64_t classes = 0;
  for (const auto& e : spec) classes += e.multiplicity;
  j["classes"] = classes;
  j["growth_constant"] = lengths::growth_constant(spec);
  j["comparison"] = comparison;
  j["orientation"] = {{"quotient_max_residual", worst},
                      {"inverse_min_residual", worst_inverse}};
  j["checks"] = checks.list;
  j["pass"] = checks.ok;
  out.summary("lengths.json", j);
  return checks.ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const Log& log) {
  cfg.validate();
  std::filesystem::create_directories(cfg.out_dir);
  acceptance::Options opts;
  opts.precision = cfg.precision;
  opts.freeze = cfg.freeze;
  if (!cfg.expected_path.empty()) opts.expected_path = cfg.expected_path;
  const auto report =
      acceptance::run(opts, [&](const acceptance::CriterionResult& r) { log(acceptance::format_line(r)); });
  io::write_text_atomic(cfg.out_dir / "verify.json", acceptance::report_json(report, opts));
  log("wrote " + (cfg.out_dir / "verify.json").string());
  if (report.froze) log("froze constants into " + opts.expected_path.string());
  return report.all_pass ? 0 : 1;
}

int run_command(const std::string& name, const RunConfig& cfg, const Log& log) {
  if (name == "scattering") return cmd_scattering(cfg, log);
  if (name == "zeros") return cmd_zeros(cfg, log);
  if (name == "lengths") return cmd_lengths(cfg, log);
  if (name == "verify") return cmd_verify(cfg, log);
  throw Error(ErrorCode::invalid_argument, "unknown command: " + name);
}

}  // namespace hs::drivers
