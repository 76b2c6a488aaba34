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

#include "hypscatter/dirichlet.hpp"

#include <algorithm>
#include <json.hpp>

#include "hypscatter/error.hpp"
#include "hypscatter/io.hpp"

namespace hs::dirichlet {

void PositiveDirichletSeries::validate() const {
  require(lambdas.size() == coefficients.size(), ErrorCode::invalid_argument,
          "series: lambdas and coefficients differ in length");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    require(lambdas[i] > 0.0 && coefficients[i] > 0.0, ErrorCode::invalid_argument,
            "series: lambdas and coefficients must be positive");
    require(i == 0 || lambdas[i] > lambdas[i - 1], ErrorCode::invalid_argument,
            "series: lambdas must be strictly ascending");
  }
  require(growth_exponent >= 0.5, ErrorCode::invalid_argument, "series: growth exponent < 1/2");
  for (const auto& p : real_poles)
    require(p.location > 0.0 && p.location < 1.0 && p.degree >= 0, ErrorCode::invalid_argument,
            "series: real poles must lie in (0, 1)");
}

double summatory_ratio_bound(const PositiveDirichletSeries& f) {
  double best = f.residue_at_1;
  CompensatedSum acc;
  for (std::size_t i = 0; i < f.size(); ++i) {
    acc.add(f.coefficients[i]);
    best = std::max(best, acc.value() / f.lambdas[i]);
  }
  return best;
}

SeriesValue evaluate(const PositiveDirichletSeries& f, Complex s, std::size_t cutoff,
                     double tail_tolerance) {
  const double sigma = s.real();
  require(sigma > 1.0 + 1e-9, ErrorCode::domain, "evaluate: requires Re s > 1");
  const std::size_t n = (cutoff == 0 || cutoff > f.size()) ? f.size() : cutoff;
  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < n; ++i)
    acc.add(f.coefficients[i] * std::exp(-s * std::log(f.lambdas[i])));
  SeriesValue out;
  out.value = acc.value();
  if (!(f.complete && n == f.size())) {
    const double Lambda = n == 0 ? 1.0 : f.lambdas[n - 1];
    const double K = summatory_ratio_bound(f);
    out.tail_bound = K * std::pow(Lambda, 1.0 - sigma) * (1.0 + std::abs(s) / (sigma - 1.0));
  }
  out.within_tolerance = out.tail_bound <= tail_tolerance;
  return out;
}

double summatory(const PositiveDirichletSeries& f, double x) {
  const auto end = std::upper_bound(f.lambdas.begin(), f.lambdas.end(), x);
  CompensatedSum acc;
  for (auto it = f.lambdas.begin(); it != end; ++it)
    acc.add(f.coefficients[static_cast<std::size_t>(it - f.lambdas.begin())]);
  return acc.value();
}

std::vector<double> summatory_at(const PositiveDirichletSeries& f, const std::vector<double>& xs) {
  require(std::is_sorted(xs.begin(), xs.end()), ErrorCode::invalid_argument,
          "summatory_at: grid must be ascending");
  std::vector<double> out;
  out.reserve(xs.size());
  CompensatedSum acc;
  std::size_t i = 0;
  for (double x : xs) {
    while (i < f.size() && f.lambdas[i] <= x) acc.add(f.coefficients[i++]);
    out.push_back(acc.value());
  }
  return out;
}

AsymptoticFit summatory_asymptotic_fit(const PositiveDirichletSeries& f,
                                       const std::vector<double>& x_grid) {
  require(x_grid.size() >= 2, ErrorCode::invalid_argument,
          "summatory_asymptotic_fit: need at least two grid points");
  require(std::is_sorted(x_grid.begin(), x_grid.end()) && x_grid.front() >= 1.0,
          ErrorCode::invalid_argument, "summatory_asymptotic_fit: grid must be ascending, >= 1");
  require(x_grid.back() >= 1e3, ErrorCode::invalid_argument,
          "summatory_asymptotic_fit: grid must reach 1e3");
  const auto A = summatory_at(f, x_grid);
  std::vector<std::vector<double>> cols{x_grid};
  for (const auto& p : f.real_poles) {
    for (int k = 0; k <= p.degree; ++k) {
      std::vector<double> c;
      for (double x : x_grid) c.push_back(std::pow(x, p.location) * std::pow(std::log(x), k));
      cols.push_back(std::move(c));
    }
  }
  const auto coef = least_squares(cols, A);
  AsymptoticFit fit;
  fit.residue = coef[0];
  fit.pole_coefficients.assign(coef.begin() + 1, coef.end());
  const double expo = 1.0 - 1.0 / (2.0 * f.growth_exponent);
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const double x = x_grid[i];
    if (x <= 1.0) continue;
    double model = 0.0;
    for (std::size_t c = 0; c < cols.size(); ++c) model += coef[c] * cols[c][i];
    fit.max_deviation =
        std::max(fit.max_deviation, std::abs(A[i] - model) / (std::pow(x, expo) * std::log(x)));
  }
  return fit;
}

void TruncationWindow::validate() const {
  require(x >= 1.0 && std::isfinite(x), ErrorCode::invalid_argument,
          "truncation window: x must be >= 1");
  require(k >= 0, ErrorCode::invalid_argument, "truncation window: k must be >= 0");
}

Complex smoothed_truncation(const PositiveDirichletSeries& f, const TruncationWindow& w,
                            Complex s) {
  w.validate();
  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < f.size() && f.lambdas[i] <= w.x; ++i) {
    const double weight = std::pow(1.0 - f.lambdas[i] / w.x, w.k);
    acc.add(f.coefficients[i] * weight * std::exp(-s * std::log(f.lambdas[i])));
  }
  return acc.value();
}

double sigma1(double r, Sigma1Rule rule) {
  require(r >= 0.5, ErrorCode::invalid_argument, "sigma1: r must be >= 1/2");
  if (rule == Sigma1Rule::three_quarters && r < 1.0) return 0.75;
  return (4.0 * r - 1.0) / (4.0 * r);
}

Quadrature mean_square(const ComplexFn& f, double sigma, double T, double sigma_1,
                       double abs_tol) {
  require(sigma >= sigma_1, ErrorCode::invalid_argument, "mean_square: sigma below sigma_1");
  require(T > 1.0, ErrorCode::invalid_argument, "mean_square: T must exceed 1");
  auto g = [&](double t) { return std::norm(f(Complex(sigma, t))); };
  const double len = T - 1.0;
  const auto q = integrate(g, 1.0, T, abs_tol * len, {}, 1.0);
  return {q.value / len, q.error / len};
}

std::vector<std::int64_t> totients(std::size_t n) {
  std::vector<std::int64_t> phi(n + 1);
  for (std::size_t i = 0; i <= n; ++i) phi[i] = static_cast<std::int64_t>(i);
  for (std::size_t p = 2; p <= n; ++p) {
    if (phi[p] != static_cast<std::int64_t>(p)) continue;  // not prime
    for (std::size_t m = p; m <= n; m += p) phi[m] -= phi[m] / static_cast<std::int64_t>(p);
  }
  return phi;
}

PositiveDirichletSeries zeta_series(std::size_t n) {
  PositiveDirichletSeries f;
  for (std::size_t i = 1; i <= n; ++i) {
    f.lambdas.push_back(static_cast<double>(i));
    f.coefficients.push_back(1.0);
  }
  f.residue_at_1 = 1.0;
  f.growth_exponent = 0.5;
  return f;
}

PositiveDirichletSeries scaled_modular_series(std::size_t n) {
  const auto phi = totients(n);
  PositiveDirichletSeries f;
  for (std::size_t i = 1; i <= n; ++i) {
    f.lambdas.push_back(static_cast<double>(i));
    f.coefficients.push_back(static_cast<double>(phi[i]) / static_cast<double>(i));
  }
  f.residue_at_1 = 6.0 / (kPi * kPi);
  f.growth_exponent = 0.5;
  return f;
}

PositiveDirichletSeries normalized_from_spectrum(const lattices::DoubleCosetSpectrum& spec, int d,
                                                 double residue) {
  require(d >= 2, ErrorCode::invalid_argument, "normalized_from_spectrum: d must be >= 2");
  PositiveDirichletSeries f;
  const double h = 0.5 * (d - 1);
  for (const auto& e : spec.entries) {
    const double l = std::pow(e.lambda, h);
    f.lambdas.push_back(l);
    f.coefficients.push_back(static_cast<double>(e.count) / l);
  }
  f.residue_at_1 = residue;
  return f;
}

void save_series(const PositiveDirichletSeries& f, const std::filesystem::path& csv_path) {
  f.validate();
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < f.size(); ++i) rows.push_back({f.lambdas[i], f.coefficients[i]});
  io::write_text_atomic(csv_path, io::to_csv({"lambda", "coefficient"}, rows, 16));
  nlohmann::ordered_json meta;
  meta["residue_at_1"] = f.residue_at_1;
  meta["growth_exponent"] = f.growth_exponent;
  meta["complete"] = f.complete;
  meta["real_poles"] = nlohmann::ordered_json::array();
  for (const auto& p : f.real_poles)
    meta["real_poles"].push_back({{"location", p.location}, {"degree", p.degree}});
  auto side = csv_path;
  side += ".json";
  io::write_text_atomic(side, meta.dump(2) + "\n");
}

PositiveDirichletSeries load_series(const std::filesystem::path& csv_path) {
  const auto table = io::parse_csv(io::read_text(csv_path));
  require(table.header == std::vector<std::string>{"lambda", "coefficient"}, ErrorCode::io,
          "load_series: unexpected header");
  PositiveDirichletSeries f;
  for (const auto& row : table.rows) {
    f.lambdas.push_back(io::parse_double(row[0]));
    f.coefficients.push_back(io::parse_double(row[1]));
  }
  auto side = csv_path;
  side += ".json";
  try {
    const auto meta = nlohmann::json::parse(io::read_text(side));
    f.residue_at_1 = meta.at("residue_at_1").get<double>();
    f.growth_exponent = meta.at("growth_exponent").get<double>();
    f.complete = meta.at("complete").get<bool>();
    for (const auto& p : meta.at("real_poles"))
      f.real_poles.push_back({p.at("location").get<double>(), p.at("degree").get<int>()});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io, std::string("load_series: bad sidecar: ") + e.what());
  }
  f.validate();
  return f;
}

}  // namespace hs::dirichlet
