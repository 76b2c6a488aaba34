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

#include "hypscatter/specfun.hpp"

#include <algorithm>
#include <array>
#include <boost/math/tools/roots.hpp>
#include <cstdio>

#include "hypscatter/error.hpp"
#include "hypscatter/io.hpp"
#include "hypscatter/zerodist.hpp"

namespace hs::specfun {

namespace {

constexpr std::array<double, 20> kBernoulli = {
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
    -7709321041217.0 / 510,
    2577687858367.0 / 6,
    -26315271553053477373.0 / 1919190,
    2929993913841559.0 / 6,
    -261082718496449122051.0 / 13530,
};  // B_2, B_4, ..., B_40

// B_{2k} / (2k)!
const std::array<double, 20>& bernoulli_over_factorial() {
  static const std::array<double, 20> table = [] {
    std::array<double, 20> t{};
    double fact = 1.0;
    for (int k = 1; k <= 20; ++k) {
      fact *= (2.0 * k - 1) * (2.0 * k);
      t[k - 1] = kBernoulli[k - 1] / fact;
    }
    return t;
  }();
  return table;
}

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

Complex lanczos_log_gamma(Complex z) {
  // log Gamma(z) for Re z >= 1/2
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

int direct_terms(Complex s, const PrecisionProfile& prof) {
  const double need = 0.65 * (std::abs(s) + 2.0 * prof.euler_maclaurin_terms);
  int n = std::max(prof.series_cutoff, static_cast<int>(std::ceil(need)));
  if (prof.working_precision == WorkingPrecision::double_double) n *= 2;
  return n;
}

// sum_{n<N} (n+a)^{-s} + x^{-s}/2 + Bernoulli corrections, x = N + a; the
// pole term x^{1-s}/(s-1) is left to the caller.
Complex hurwitz_regular(Complex s, double a, int N, const PrecisionProfile& prof) {
  Complex direct;
  if (prof.working_precision == WorkingPrecision::double_double) {
    ComplexCompensatedSum acc;
    for (int n = 0; n < N; ++n) acc.add(std::exp(-s * std::log(n + a)));
    direct = acc.value();
  } else {
    for (int n = 0; n < N; ++n) direct += std::exp(-s * std::log(n + a));
  }
  const double x = N + a;
  const double lx = std::log(x);
  const Complex xs = std::exp(-s * lx);
  Complex tail = 0.5 * xs;
  const auto& bf = bernoulli_over_factorial();
  Complex poch = s;           // s (s+1) ... (s+2k-2)
  Complex power = xs / x;     // x^{-s-2k+1}
  for (int k = 1; k <= prof.euler_maclaurin_terms; ++k) {
    const Complex term = bf[k - 1] * poch * power;
    tail += term;
    poch *= (s + (2.0 * k - 1)) * (s + 2.0 * k);
    power /= x * x;
  }
  return direct + tail;
}

// (x^w - y^w) / w, stable as w -> 0.
Complex power_difference_over(Complex w, double x, double y) {
  const double lx = std::log(x), ly = std::log(y);
  if (std::abs(w) > 1e-4) return (std::exp(w * lx) - std::exp(w * ly)) / w;
  Complex sum, wp = 1.0;
  double px = 1.0, py = 1.0, fact = 1.0;
  for (int k = 1; k <= 8; ++k) {
    px *= lx;
    py *= ly;
    fact *= k;
    sum += wp * (px - py) / fact;
    wp *= w;
  }
  return sum;
}

}  // namespace

void PrecisionProfile::validate() const {
  require(euler_maclaurin_terms >= 4 && euler_maclaurin_terms <= 20, ErrorCode::invalid_argument,
          "precision profile: euler_maclaurin_terms must be in [4, 20]");
  require(series_cutoff >= 10, ErrorCode::invalid_argument,
          "precision profile: series_cutoff must be >= 10");
}

std::string PrecisionProfile::tag() const {
  return working_precision == WorkingPrecision::double_double ? "dd" : "double";
}

PrecisionProfile PrecisionProfile::parse(const std::string& name) {
  PrecisionProfile p;
  if (name == "double") return p;
  if (name == "dd" || name == "double_double") {
    p.working_precision = WorkingPrecision::double_double;
    p.euler_maclaurin_terms = 16;
    return p;
  }
  throw Error(ErrorCode::invalid_argument, "unknown precision profile: " + name);
}

Complex gamma(Complex s) {
  require(!is_nonpositive_integer(s), ErrorCode::domain, "gamma: pole at nonpositive integer");
  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma(1.0 - s));
  return std::exp(lanczos_log_gamma(s));
}

Complex log_gamma(Complex s) {
  require(s.real() > 0.0, ErrorCode::domain, "log_gamma: requires Re s > 0");
  Complex shift_log;
  Complex z = s;
  while (std::abs(z) < 15.0) {
    shift_log += std::log(z);
    z += 1.0;
  }
  const auto& bf = bernoulli_over_factorial();
  Complex series;
  const Complex z2 = z * z;
  Complex zp = z;
  // B_{2k} / (2k (2k-1) z^{2k-1}) = (B_{2k}/(2k)!) (2k-2)! / z^{2k-1}
  double fact = 1.0;  // (2k-2)!
  for (int k = 1; k <= 10; ++k) {
    series += bf[k - 1] * fact / zp;
    fact *= (2.0 * k - 1) * (2.0 * k);
    zp *= z2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift_log;
}

Complex gamma_ratio(Complex s, double shift) {
  const Complex u = s - shift;
  if (u.real() > 0.5 && s.real() > 0.5) return std::exp(log_gamma(u) - log_gamma(s));
  return gamma(u) / gamma(s);
}

Complex hurwitz_zeta(Complex s, double a, const PrecisionProfile& prof) {
  prof.validate();
  require(a > 0.0, ErrorCode::invalid_argument, "hurwitz_zeta: a must be positive");
  require(s != Complex(1.0, 0.0), ErrorCode::domain, "hurwitz_zeta: pole at s = 1");
  const int N = direct_terms(s, prof);
  const double x = N + a;
  return hurwitz_regular(s, a, N, prof) + std::exp((1.0 - s) * std::log(x)) / (s - 1.0);
}

Complex riemann_zeta(Complex s, const PrecisionProfile& prof) {
  require(s != Complex(1.0, 0.0), ErrorCode::domain, "riemann_zeta: pole at s = 1");
  if (s.real() < 0.0) {
    // reflection; the direct sum cancels badly here
    const Complex w = 1.0 - s;
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(0.5 * kPi * s) * gamma(w) *
           hurwitz_zeta(w, 1.0, prof);
  }
  return hurwitz_zeta(s, 1.0, prof);
}

Complex dirichlet_L_chi4(Complex s, const PrecisionProfile& prof) {
  prof.validate();
  const int N = direct_terms(s, prof);
  const Complex regular = hurwitz_regular(s, 0.25, N, prof) - hurwitz_regular(s, 0.75, N, prof);
  // (x1^{1-s} - x3^{1-s}) / (s - 1)
  const Complex pole_part = -power_difference_over(1.0 - s, N + 0.25, N + 0.75);
  return std::exp(-s * std::log(4.0)) * (regular + pole_part);
}

Complex dedekind_zeta_Qi(Complex s, const PrecisionProfile& prof) {
  require(s != Complex(1.0, 0.0), ErrorCode::domain, "dedekind_zeta_Qi: pole at s = 1");
  return riemann_zeta(s, prof) * dirichlet_L_chi4(s, prof);
}

double hardy_theta(double t) {
  return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

Complex hardy_Z_complex(double t, const PrecisionProfile& prof) {
  return std::polar(1.0, hardy_theta(t)) * riemann_zeta(Complex(0.5, t), prof);
}

double hardy_Z(double t, const PrecisionProfile& prof) { return hardy_Z_complex(t, prof).real(); }

namespace {

struct Scan {
  std::vector<ZetaZero> zeros;  // all sign changes found up to t_end
};

Scan scan_sign_changes(double t_end, double h, const PrecisionProfile& prof) {
  Scan out;
  auto Z = [&](double t) { return hardy_Z(t, prof); };
  double t0 = 1.0;
  double z0 = Z(t0);
  const int n = static_cast<int>(std::ceil((t_end - t0) / h));
  for (int i = 1; i <= n; ++i) {
    const double t1 = t0 + h;
    const double z1 = Z(t1);
    if (z1 == 0.0) {
      out.zeros.push_back({t1, 0.0});
    } else if ((z0 < 0.0) != (z1 < 0.0) && z0 != 0.0) {
      std::uintmax_t iters = 200;
      auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-10; };
      auto [a, b] = boost::math::tools::toms748_solve(Z, t0, t1, z0, z1, tol, iters);
      out.zeros.push_back({0.5 * (a + b), std::abs(b - a)});
    }
    t0 = t1;
    z0 = z1;
  }
  return out;
}

}  // namespace

ZetaCensus zeta_zeros_up_to(double T, const PrecisionProfile& prof) {
  prof.validate();
  require(T <= 200.0, ErrorCode::budget, "zeta_zeros_up_to: T exceeds 200");
  ZetaCensus census;
  if (T < 1.0) return census;
  auto zeta = [&](Complex s) { return riemann_zeta(s, prof); };
  const auto counted = zerodist::count_zeros_perturbed(zeta, {-1.0, 2.0, 1.0, T});
  const double top = counted.rectangle.im_max;
  double h = 0.05;
  for (int attempt = 0; attempt < 4; ++attempt, h *= 0.5) {
    const Scan scan = scan_sign_changes(std::max(T, top), h, prof);
    const auto below_top = std::count_if(scan.zeros.begin(), scan.zeros.end(),
                                         [&](const ZetaZero& z) { return z.ordinate < top; });
    if (below_top != counted.count) continue;
    for (const auto& z : scan.zeros)
      if (z.ordinate <= T) census.zeros.push_back(z);
    census.argument_principle_count = counted.count;
    census.scan_step = h;
    return census;
  }
  throw Error(ErrorCode::consistency,
              "zeta_zeros_up_to: sign-change count disagrees with argument principle");
}

std::filesystem::path zeta_cache_path(double T, const PrecisionProfile& prof,
                                      const std::filesystem::path& dir) {
  char name[96];
  std::snprintf(name, sizeof name, "zeta_zeros_T%.6g_%s_m%d.csv", T, prof.tag().c_str(),
                prof.euler_maclaurin_terms);
  return dir / name;
}

namespace {

bool cache_is_valid(const std::vector<ZetaZero>& zeros, double T, const PrecisionProfile& prof) {
  double prev = 0.0;
  for (const auto& z : zeros) {
    if (!(z.ordinate > prev && z.ordinate <= T)) return false;
    if (!(z.refinement_error >= 0.0 && z.refinement_error <= 1e-8)) return false;
    const double a = hardy_Z(z.ordinate - 1e-6, prof);
    const double b = hardy_Z(z.ordinate + 1e-6, prof);
    if ((a < 0.0) == (b < 0.0)) return false;
    prev = z.ordinate;
  }
  return true;
}

}  // namespace

std::vector<ZetaZero> zeta_zeros_cached(double T, const PrecisionProfile& prof,
                                        const std::filesystem::path& dir) {
  const auto path = zeta_cache_path(T, prof, dir);
  if (std::filesystem::exists(path)) {
    try {
      const auto table = io::parse_csv(io::read_text(path));
      if (table.header == std::vector<std::string>{"ordinate", "refinement_error"}) {
        std::vector<ZetaZero> zeros;
        for (const auto& row : table.rows)
          zeros.push_back({io::parse_double(row[0]), io::parse_double(row[1])});
        if (cache_is_valid(zeros, T, prof)) return zeros;
      }
    } catch (const Error&) {
      // fall through to recompute
    }
  }
  const auto census = zeta_zeros_up_to(T, prof);
  std::vector<std::vector<double>> rows;
  for (const auto& z : census.zeros) rows.push_back({z.ordinate, z.refinement_error});
  io::write_text_atomic(path, io::to_csv({"ordinate", "refinement_error"}, rows, 15));
  return census.zeros;
}

}  // namespace hs::specfun
