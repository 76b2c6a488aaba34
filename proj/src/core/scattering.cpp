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

#include "hypscatter/scattering.hpp"

#include <cmath>
#include <json.hpp>
#include <map>
#include <memory>

#include "hypscatter/error.hpp"
#include "hypscatter/io.hpp"

namespace hs::scattering {

using lattices::LatticeKind;

namespace {

double half_dim(int d) { return 0.5 * (d - 1); }

Complex zeta_quotient(Complex s, const specfun::PrecisionProfile& prof) {
  return specfun::riemann_zeta(2.0 * s - 1.0, prof) / specfun::riemann_zeta(2.0 * s, prof);
}

// sqrt(pi) Gamma(s-1/2) zeta(2s-1) / (Gamma(s) zeta(2s))
Complex modular_phi(Complex s, const specfun::PrecisionProfile& prof) {
  return std::sqrt(kPi) * specfun::gamma_ratio(s, 0.5) * zeta_quotient(s, prof);
}

Eigen::MatrixXcd closed_phi_raw(const ScatteringModel& m, Complex s) {
  const auto& prof = m.precision;
  switch (m.lattice.kind) {
    case LatticeKind::sl2z: {
      Eigen::MatrixXcd out(1, 1);
      out(0, 0) = modular_phi(s, prof);
      return out;
    }
    case LatticeKind::gamma0: {
      const double p = m.lattice.p;
      const Complex ps = std::pow(p, s);
      const Complex denom = ps * ps - 1.0;
      require(std::abs(denom) > 1e-300, ErrorCode::domain, "phi: pole of the level factor");
      const Complex theta = modular_phi(s, prof);
      Eigen::MatrixXcd out(2, 2);
      out(0, 0) = out(1, 1) = theta * (p - 1.0) / denom;
      out(0, 1) = out(1, 0) = theta * (ps - p / ps) / denom;
      return out;
    }
    case LatticeKind::gaussian: {
      Eigen::MatrixXcd out(1, 1);
      out(0, 0) = kPi / (s - 1.0) * specfun::dedekind_zeta_Qi(s - 1.0, prof) /
                  specfun::dedekind_zeta_Qi(s, prof);
      return out;
    }
  }
  throw Error(ErrorCode::internal, "phi: unknown lattice kind");
}

// The Gamma factor has a pole at s = (d-1)/2 cancelled by the zeta quotient;
// evaluate there by symmetric Richardson extrapolation.
Eigen::MatrixXcd closed_phi(const ScatteringModel& m, Complex s) {
  const double h = half_dim(m.d);
  if (std::abs(s - Complex(h, 0.0)) > 1e-6) return closed_phi_raw(m, s);
  const Complex c(h, s.imag());
  auto avg = [&](double delta) {
    return (0.5 * (closed_phi_raw(m, c + delta) + closed_phi_raw(m, c - delta))).eval();
  };
  const double delta = 1e-3;
  return (4.0 * avg(0.5 * delta) - avg(delta)) / 3.0;
}

// Exact Dirichlet series with integer frequencies.
using RawSeries = std::map<std::int64_t, double>;

RawSeries raw_series(const lattices::DoubleCosetSpectrum& spec) {
  RawSeries out;
  for (const auto& e : spec.entries)
    out[std::llround(e.lambda)] += static_cast<double>(e.count);
  return out;
}

RawSeries multiply(const RawSeries& a, const RawSeries& b, std::int64_t limit) {
  RawSeries out;
  for (const auto& [la, ca] : a) {
    if (la > limit) break;
    for (const auto& [lb, cb] : b) {
      if (la * lb > limit) break;
      out[la * lb] += ca * cb;
    }
  }
  return out;
}

RawSeries subtract(RawSeries a, const RawSeries& b) {
  for (const auto& [l, c] : b) a[l] -= c;
  return a;
}

// Residue at w = 1 of the normalized entry series.
double entry_residue(const lattices::LatticeModel& model, int i, int j,
                     const specfun::PrecisionProfile& prof) {
  const double six_over_pi2 = 6.0 / (kPi * kPi);
  switch (model.id.kind) {
    case LatticeKind::sl2z: return six_over_pi2;
    case LatticeKind::gamma0: return six_over_pi2 / (model.id.p + 1.0);
    case LatticeKind::gaussian:
      return 0.25 * kPi / specfun::dedekind_zeta_Qi(Complex(2.0, 0.0), prof).real();
  }
  (void)i;
  (void)j;
  return 0.0;
}

std::vector<zerodist::RealPole> lattice_poles(const lattices::LatticeId& id) {
  switch (id.kind) {
    case LatticeKind::sl2z:
    case LatticeKind::gamma0: return {{1.0, 1}};
    case LatticeKind::gaussian: return {{2.0, 1}};
  }
  return {};
}

void check_validity(const ScatteringModel& m, Complex s) {
  if (m.kind != EntryKind::series) return;
  require(s.real() > m.d - 1 + m.validity_margin, ErrorCode::domain,
          "series-backed scattering entry evaluated at Re s = " + io::fmt_double(s.real(), 6) +
              ", needs Re s > " + io::fmt_double(m.d - 1 + m.validity_margin, 6));
}

}  // namespace

Complex GammaFactor::eval(Complex s) const {
  return std::pow(specfun::gamma_ratio(s, half_dim(d)), kappa);
}

ScatteringModel build_closed_form(const lattices::LatticeModel& model,
                                  const specfun::PrecisionProfile& prof) {
  prof.validate();
  ScatteringModel m;
  m.lattice = model.id;
  m.d = model.d;
  m.kappa = model.kappa;
  m.kind = EntryKind::closed_form;
  m.precision = prof;
  m.lstar_poles = lattice_poles(model.id);
  switch (model.id.kind) {
    case LatticeKind::sl2z:
      m.normalization = {std::sqrt(kPi), 1.0};
      m.lambda1 = 4.0;
      m.coeff1 = 1.0;
      break;
    case LatticeKind::gamma0: {
      const double p = model.id.p;
      m.normalization = {-kPi / p, p};
      // Z(s)^2 (1 - p^{2-2s}) / (1 - p^{-2s}) = 1 + (2 - [p = 2] 3) 4^{-s} + ...
      m.lambda1 = 4.0;
      m.coeff1 = model.id.p == 2 ? -1.0 : 2.0;
      break;
    }
    case LatticeKind::gaussian:
      m.normalization = {kPi, 1.0};
      m.lambda1 = 2.0;
      m.coeff1 = 1.0;
      break;
  }
  m.a_gamma = 1.0 / std::abs(m.normalization.a);
  return m;
}

ScatteringModel build_from_double_cosets(const lattices::LatticeModel& model, double lambda_max) {
  require(lambda_max >= 1.0 && std::isfinite(lambda_max), ErrorCode::invalid_argument,
          "build_from_double_cosets: lambda_max must be >= 1");
  require(model.kappa == 1 || model.kappa == 2, ErrorCode::invalid_argument,
          "build_from_double_cosets: only one or two cusps are supported");
  ScatteringModel m;
  m.lattice = model.id;
  m.d = model.d;
  m.kappa = model.kappa;
  m.kind = EntryKind::series;
  m.lambda_max = lambda_max;
  m.lstar_poles = lattice_poles(model.id);
  const double h = half_dim(model.d);
  const int k = model.kappa;
  std::vector<RawSeries> raw;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      SeriesEntry e;
      e.spectrum = lattices::enumerate_double_cosets(model, i, j, lambda_max);
      e.normalized =
          dirichlet::normalized_from_spectrum(e.spectrum, model.d, entry_residue(model, i, j, m.precision));
      e.normalized.growth_exponent = 0.5 * (model.d - 1);
      e.constant = std::pow(kPi, h) / model.cusps[j].volume;
      e.empty = e.spectrum.entries.empty();
      e.underpopulated = e.spectrum.entries.size() < 5;
      raw.push_back(raw_series(e.spectrum));
      m.entries.push_back(std::move(e));
    }
  }

  // Determinant of the coefficient matrix as one Dirichlet series; its first
  // term fixes (a, b) and the rest is L*.
  const auto limit = static_cast<std::int64_t>(std::floor(lambda_max));
  RawSeries det = k == 1 ? raw[0]
                         : subtract(multiply(raw[0], raw[3], limit), multiply(raw[1], raw[2], limit));
  std::erase_if(det, [](const auto& kv) { return kv.second == 0.0; });
  if (det.empty()) {
    m.has_normalization = false;
    return m;
  }
  double scale = 1.0;
  for (int j = 0; j < k; ++j) scale *= m.entry(0, j).constant;
  const double mu0 = static_cast<double>(det.begin()->first);
  const double lead = scale * det.begin()->second;
  m.normalization.b = std::sqrt(mu0);
  m.normalization.a = lead / std::pow(m.normalization.b, model.d - 1);
  m.a_gamma = 1.0 / std::abs(m.normalization.a);
  if (det.size() > 1) {
    const auto second = std::next(det.begin());
    m.lambda1 = static_cast<double>(second->first) / mu0;
    m.coeff1 = second->second / det.begin()->second;
  }
  return m;
}

PhiValue phi_with_bound(const ScatteringModel& m, Complex s) {
  check_validity(m, s);
  PhiValue out;
  const int k = m.kappa;
  out.tail_bound = Eigen::MatrixXd::Zero(k, k);
  if (m.kind == EntryKind::closed_form) {
    out.value = closed_phi(m, s);
    return out;
  }
  out.value = Eigen::MatrixXcd::Zero(k, k);
  const double h = half_dim(m.d);
  const Complex g = specfun::gamma_ratio(s, h);
  const Complex w = s / h - 1.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const auto& e = m.entry(i, j);
      const auto v = dirichlet::evaluate(e.normalized, w);
      const double scale = e.constant * std::abs(g);
      out.value(i, j) = e.constant * g * v.value;
      out.tail_bound(i, j) = scale * v.tail_bound;
    }
  }
  return out;
}

Eigen::MatrixXcd phi_matrix(const ScatteringModel& m, Complex s) {
  return phi_with_bound(m, s).value;
}

Complex scattering_determinant(const ScatteringModel& m, Complex s) {
  const auto p = phi_matrix(m, s);
  return m.kappa == 1 ? p(0, 0) : p.determinant();
}

Complex L_function(const ScatteringModel& m, Complex s) {
  return scattering_determinant(m, s) / GammaFactor{m.d, m.kappa}.eval(s);
}

Complex L_star_from_determinant(const ScatteringModel& m, Complex s) {
  require(m.has_normalization, ErrorCode::domain,
          "L*: lambda_max too small to fix the normalization");
  const auto& n = m.normalization;
  return L_function(m, s) * std::pow(n.b, 2.0 * s + 1.0 - static_cast<double>(m.d)) / n.a;
}

Complex L_star(const ScatteringModel& m, Complex s) {
  if (m.kind == EntryKind::series) return L_star_from_determinant(m, s);
  const auto& prof = m.precision;
  switch (m.lattice.kind) {
    case LatticeKind::sl2z: return zeta_quotient(s, prof);
    case LatticeKind::gamma0: {
      const double p = m.lattice.p;
      const Complex z = zeta_quotient(s, prof);
      const Complex q = std::pow(p, -2.0 * s);
      const Complex denom = 1.0 - q;
      require(std::abs(denom) > 1e-300, ErrorCode::domain, "L*: pole of the level factor");
      return z * z * (1.0 - p * p * q) / denom;
    }
    case LatticeKind::gaussian:
      return specfun::dedekind_zeta_Qi(s - 1.0, prof) / specfun::dedekind_zeta_Qi(s, prof);
  }
  throw Error(ErrorCode::internal, "L*: unknown lattice kind");
}

double functional_equation_residual(const ScatteringModel& m, Complex s) {
  require(m.kind == EntryKind::closed_form, ErrorCode::domain,
          "functional_equation_residual: series-backed model has no dual validity region");
  const double h = half_dim(m.d);
  if (std::abs(s - Complex(h, 0.0)) < 1e-9) s = Complex(h + 1e-7, 0.0);
  const auto prod = (phi_matrix(m, s) * phi_matrix(m, static_cast<double>(m.d - 1) - s)).eval();
  const auto diff = (prod - Eigen::MatrixXcd::Identity(m.kappa, m.kappa)).eval();
  return diff.cwiseAbs().rowwise().sum().maxCoeff();
}

MaassSelbergCheck maass_selberg_bound_check(const ScatteringModel& m, double sigma, double t,
                                            double C) {
  require(sigma >= half_dim(m.d) && sigma <= m.d, ErrorCode::invalid_argument,
          "maass_selberg_bound_check: sigma outside [(d-1)/2, d]");
  require(std::abs(t) >= 1.0, ErrorCode::invalid_argument,
          "maass_selberg_bound_check: needs |t| >= 1");
  MaassSelbergCheck out;
  out.lhs = phi_matrix(m, Complex(sigma, t)).cwiseAbs().maxCoeff();
  const double x = (2.0 * sigma + 1.0 - m.d) / (2.0 * std::abs(t));
  out.rhs = std::sqrt(1.0 + x * x) + x;
  out.ok = out.lhs <= C * out.rhs;
  return out;
}

std::vector<double> critical_line_ratios(const ScatteringModel& m, const std::vector<double>& ts) {
  const double h = half_dim(m.d);
  std::vector<double> out;
  for (double t : ts) {
    require(t != 0.0, ErrorCode::domain, "critical_line_ratios: t = 0");
    const Complex s(h, t);
    out.push_back(std::abs(L_star(m, s)) * std::pow(std::abs(specfun::gamma_ratio(s, h)), m.kappa));
  }
  return out;
}

zerodist::LStarData lstar_data(const ScatteringModel& m) {
  auto shared = std::make_shared<const ScatteringModel>(m);
  zerodist::LStarData out;
  out.eval = [shared](Complex s) { return L_star(*shared, s); };
  out.d = m.d;
  out.kappa = m.kappa;
  out.poles = m.lstar_poles;
  out.lambda1 = m.lambda1;
  out.coeff1 = m.coeff1;
  return out;
}

void export_model(const ScatteringModel& m, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json j;
  j["lattice"] = m.lattice.name();
  j["d"] = m.d;
  j["kappa"] = m.kappa;
  j["kind"] = m.kind == EntryKind::closed_form ? "closed_form" : "series";
  j["lambda_max"] = m.lambda_max;
  j["normalization"] = {{"a", m.normalization.a}, {"b", m.normalization.b}};
  j["a_gamma"] = m.a_gamma;
  j["lambda1"] = m.lambda1;
  j["coeff1"] = m.coeff1;
  j["poles"] = nlohmann::ordered_json::array();
  for (const auto& p : m.lstar_poles) j["poles"].push_back({{"location", p.location}, {"order", p.order}});
  j["entries"] = nlohmann::ordered_json::array();
  for (int r = 0; r < m.kappa && m.kind == EntryKind::series; ++r) {
    for (int c = 0; c < m.kappa; ++c) {
      const auto& e = m.entry(r, c);
      const std::string file = "entry_" + std::to_string(r) + "_" + std::to_string(c) + ".csv";
      io::write_text_atomic(dir / file, lattices::to_csv(e.spectrum));
      j["entries"].push_back({{"i", r},
                              {"j", c},
                              {"file", file},
                              {"terms", e.spectrum.entries.size()},
                              {"constant", e.constant},
                              {"empty", e.empty},
                              {"underpopulated", e.underpopulated}});
    }
  }
  io::write_text_atomic(dir / "model.json", j.dump(2) + "\n");
}

}  // namespace hs::scattering
