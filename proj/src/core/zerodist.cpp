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

#include "hypscatter/zerodist.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <limits>

namespace hs::zerodist {

namespace {

constexpr double kHalfPi = 0.5 * kPi;

struct EdgeTracer {
  const ComplexFn& f;
  Complex z0, z1;
  double min_du;
  int edge;
  std::vector<PhaseSample>& out;

  Complex eval(double u) const {
    Complex v;
    try {
      v = f(z0 + u * (z1 - z0));
    } catch (const Error& e) {
      throw PhaseStepError(edge, std::string("argument tracking hit a singular point: ") + e.what());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || v == Complex(0.0, 0.0))
      throw PhaseStepError(edge, "argument tracking hit a zero or pole");
    return v;
  }

  // Appends samples in (ua, ub]; the sample at ua is out.back().
  void advance(double ub, Complex fb) {
    const double ua = out.back().u;
    const Complex fa = out.back().value;
    const double um = 0.5 * (ua + ub);
    const Complex fm = eval(um);
    const double d1 = phase_step(fa, fm);
    const double d2 = phase_step(fm, fb);
    const double whole = phase_step(fa, fb);
    // f must also be close to its chord; otherwise a nearby zero can turn the
    // phase by a full 2 pi between samples that still look consistent
    const double chord_gap = std::abs(fm - 0.5 * (fa + fb));
    const bool linear = chord_gap < 0.5 * std::min({std::abs(fa), std::abs(fb), std::abs(fm)});
    if (linear && std::abs(d1) + std::abs(d2) < kHalfPi && std::abs(whole - (d1 + d2)) < 1e-6) {
      const double pa = out.back().phase;
      out.push_back({um, fm, pa + d1});
      out.push_back({ub, fb, pa + d1 + d2});
      return;
    }
    if (ub - ua < min_du) throw PhaseStepError(edge, "phase step too large at minimal step size");
    advance(um, fm);
    advance(ub, fb);
  }
};

std::vector<PhaseSample> trace_segment(const ComplexFn& f, Complex z0, Complex z1,
                                       const TrackOptions& opts, int edge) {
  std::vector<PhaseSample> out;
  const double len = std::abs(z1 - z0);
  require(len > 0.0, ErrorCode::invalid_argument, "track_phase: degenerate segment");
  EdgeTracer tr{f, z0, z1, opts.min_step / len, edge, out};
  const Complex f0 = tr.eval(0.0);
  out.push_back({0.0, f0, std::arg(f0)});
  const int n = std::max(8, static_cast<int>(std::ceil(len / opts.initial_step)));
  for (int k = 1; k <= n; ++k) {
    const double u = static_cast<double>(k) / n;
    tr.advance(u, tr.eval(u));
  }
  return out;
}

}  // namespace

void Rectangle::validate() const {
  require(std::isfinite(re_min) && std::isfinite(re_max) && std::isfinite(im_min) &&
              std::isfinite(im_max),
          ErrorCode::invalid_argument, "rectangle: non-finite bounds");
  require(re_min < re_max && im_min < im_max, ErrorCode::invalid_argument,
          "rectangle: zero or negative area");
}

std::vector<PhaseSample> track_phase(const ComplexFn& f, Complex z0, Complex z1,
                                     const TrackOptions& opts) {
  return trace_segment(f, z0, z1, opts, -1);
}

int count_zeros(const ComplexFn& f, const Rectangle& r, const TrackOptions& opts) {
  r.validate();
  const Complex c[4] = {{r.re_min, r.im_min}, {r.re_max, r.im_min}, {r.re_max, r.im_max},
                        {r.re_min, r.im_max}};
  TrackOptions local = opts;
  const double side = std::min(r.width(), r.height());
  local.initial_step = std::min(opts.initial_step, side / 8.0);
  double total = 0.0;
  for (int e = 0; e < 4; ++e) {
    const auto s = trace_segment(f, c[e], c[(e + 1) % 4], local, e);
    total += s.back().phase - s.front().phase;
  }
  const double winding = total / (2.0 * kPi);
  const double rounded = std::round(winding);
  require(std::abs(winding - rounded) < 1e-6, ErrorCode::consistency,
          "count_zeros: winding number is not an integer");
  return static_cast<int>(rounded);
}

CountResult count_zeros_perturbed(const ComplexFn& f, const Rectangle& r,
                                  const TrackOptions& opts) {
  Rectangle cur = r;
  const double shift = 1e-4 * (1.0 + std::max(std::abs(r.im_min), std::abs(r.im_max)));
  for (int attempt = 0;; ++attempt) {
    try {
      return {count_zeros(f, cur, opts), cur, attempt};
    } catch (const PhaseStepError& e) {
      if (attempt >= opts.max_perturbations) throw;
      switch (e.edge()) {
        case 0: cur.im_min += shift; break;
        case 1: cur.re_max -= shift; break;
        case 2: cur.im_max -= shift; break;
        default: cur.re_min += shift; break;
      }
      cur.validate();
    }
  }
}

namespace {

Complex derivative(const ComplexFn& f, Complex z) {
  const double h = 1e-5;
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

bool inside(const Rectangle& r, Complex z, double pad) {
  return z.real() >= r.re_min - pad && z.real() <= r.re_max + pad && z.imag() >= r.im_min - pad &&
         z.imag() <= r.im_max + pad;
}

// Newton's method with multiplicity m started at the rectangle center.
bool newton(const ComplexFn& f, const Rectangle& r, int m, double tol, Complex& root) {
  Complex z{0.5 * (r.re_min + r.re_max), 0.5 * (r.im_min + r.im_max)};
  const double pad = 0.05 * std::max(r.width(), r.height());
  double last = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 60; ++it) {
    Complex fz, dz;
    try {
      fz = f(z);
      if (fz == Complex(0.0, 0.0)) {
        root = z;
        return true;
      }
      dz = derivative(f, z);
    } catch (const Error&) {
      return false;
    }
    if (dz == Complex(0.0, 0.0) || !std::isfinite(std::abs(dz))) return false;
    const Complex step = static_cast<double>(m) * fz / dz;
    z -= step;
    if (!inside(r, z, pad)) return false;
    // a multiple root is only resolved to about sqrt(eps); stop once the
    // steps stall near the tolerance
    if (std::abs(step) <= tol || (std::abs(step) <= 1e2 * tol && std::abs(step) >= last)) {
      root = z;
      return true;
    }
    last = std::abs(step);
  }
  return false;
}

struct Locator {
  const ComplexFn& f;
  double tol;
  TrackOptions opts;
  std::string precision;
  std::vector<ZeroRecord> found;

  void split(const Rectangle& r, int count, int depth) {
    const bool vertical = r.height() >= r.width();
    for (int attempt = 0; attempt < 6; ++attempt) {
      const double q = 0.4871 + 0.0537 * attempt;
      Rectangle a = r, b = r;
      if (vertical) {
        a.im_max = b.im_min = r.im_min + q * r.height();
      } else {
        a.re_max = b.re_min = r.re_min + q * r.width();
      }
      int ca = 0, cb = 0;
      try {
        ca = count_zeros(f, a, opts);
        cb = count_zeros(f, b, opts);
      } catch (const PhaseStepError&) {
        continue;
      }
      if (ca + cb != count) continue;
      process(a, ca, depth + 1);
      process(b, cb, depth + 1);
      return;
    }
    throw Error(ErrorCode::convergence,
                "locate_zeros: could not split rectangle [" + std::to_string(r.re_min) + ", " +
                    std::to_string(r.re_max) + "] x [" + std::to_string(r.im_min) + ", " +
                    std::to_string(r.im_max) + "] holding " + std::to_string(count) +
                    " zeros consistently");
  }

  void process(const Rectangle& r, int count, int depth) {
    if (count == 0) return;
    require(count > 0, ErrorCode::domain, "locate_zeros: rectangle contains poles");
    const double diam = std::max(r.width(), r.height());
    if (diam <= 0.25) {
      Complex z;
      if (newton(f, r, count, tol, z) && inside(r, z, 0.0)) {
        bool certified = count == 1;
        Rectangle box{z.real() - 1e3 * tol, z.real() + 1e3 * tol, z.imag() - 1e3 * tol,
                      z.imag() + 1e3 * tol};
        if (!certified) {
          try {
            certified = count_zeros(f, box, opts) == count;
          } catch (const PhaseStepError&) {
            certified = false;
          }
        }
        if (certified) {
          found.push_back({z.real(), z.imag(), count, count == 1 ? r : box, precision});
          return;
        }
      }
      if (diam <= tol || depth > 200) {
        found.push_back({0.5 * (r.re_min + r.re_max), 0.5 * (r.im_min + r.im_max), count, r,
                         precision});
        return;
      }
    }
    split(r, count, depth);
  }
};

}  // namespace

std::vector<ZeroRecord> locate_zeros(const ComplexFn& f, const Rectangle& r, double tol,
                                     const TrackOptions& opts, const std::string& precision) {
  r.validate();
  require(tol > 0.0, ErrorCode::invalid_argument, "locate_zeros: tol must be positive");
  const auto top = count_zeros_perturbed(f, r, opts);
  Locator loc{f, tol, opts, precision, {}};
  loc.process(top.rectangle, top.count, 0);
  std::sort(loc.found.begin(), loc.found.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    return a.gamma != b.gamma ? a.gamma < b.gamma : a.beta < b.beta;
  });
  return loc.found;
}

namespace {

template <class Weight>
double weighted_sum(const std::vector<ZeroRecord>& zeros, double alpha, double T, Mirror mirror,
                    Weight weight) {
  CompensatedSum acc;
  for (const auto& z : zeros) {
    if (mirror == Mirror::conjugate)
      require(z.gamma >= 0.0, ErrorCode::invalid_argument,
              "zero sum: conjugate mirroring expects gamma >= 0");
    if (z.beta <= alpha || std::abs(z.gamma) > T) continue;
    const double copies = (mirror == Mirror::conjugate && z.gamma > 0.0) ? 2.0 : 1.0;
    acc.add(copies * z.multiplicity * weight(z) * (z.beta - alpha));
  }
  return acc.value();
}

}  // namespace

double F1_sum(const std::vector<ZeroRecord>& zeros, double alpha, double T, Mirror mirror) {
  return weighted_sum(zeros, alpha, T, mirror, [](const ZeroRecord&) { return 1.0; });
}

double F_smoothed_sum(const std::vector<ZeroRecord>& zeros, double alpha, double T,
                      Mirror mirror) {
  return weighted_sum(zeros, alpha, T, mirror,
                      [T](const ZeroRecord& z) { return T - std::abs(z.gamma); });
}

bool sandwich_check(double F_prev, double F_mid, double F_next, double F1_mid, double tol) {
  return F_mid - F_prev <= F1_mid + tol && F1_mid <= F_next - F_mid + tol;
}

namespace {

// Local minima of |g| on [a, b] below `threshold`, refined by Brent's method.
std::vector<double> near_zeros(const RealFn& g, double a, double b, double threshold) {
  std::vector<double> out;
  const double h = 0.02;
  const int n = std::max(2, static_cast<int>(std::ceil((b - a) / h)));
  std::vector<double> t(n + 1), v(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i] = a + (b - a) * i / n;
    v[i] = g(t[i]);
  }
  for (int i = 1; i < n; ++i) {
    if (v[i] <= v[i - 1] && v[i] <= v[i + 1] && v[i] < threshold) {
      auto [x, fx] = boost::math::tools::brent_find_minima(g, t[i - 1], t[i + 1], 40);
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

LittlewoodParts littlewood_rhs(const LStarData& lstar, double alpha, double T, double abs_tol) {
  const double h = 0.5 * (lstar.d - 1);
  require(alpha > h, ErrorCode::invalid_argument, "littlewood_rhs: alpha must exceed (d-1)/2");
  require(T > 0.0, ErrorCode::invalid_argument, "littlewood_rhs: T must be positive");
  LittlewoodParts out;

  // vertical: by conjugate symmetry the integral over [-T, T] is twice [0, T]
  auto absL = [&](double t) { return std::abs(lstar.eval(Complex(alpha, t))); };
  auto breaks = near_zeros(absL, 0.0, T, 1e-2);
  auto logabs = [&](double t) { return std::log(absL(t)); };
  const auto vert = integrate(logabs, 0.0, T, 0.25 * kPi * abs_tol, breaks, 1.0);
  out.log_integral = vert.value / kPi;

  // horizontal: continuous arg from sigma_cut (where L* ~ 1) down to alpha
  const double l1 = std::log(lstar.lambda1);
  double sigma_cut =
      std::max(lstar.d + 1.0, (std::log(std::abs(lstar.coeff1)) + 13.0 * std::log(10.0)) / l1);
  while (std::abs(lstar.eval(Complex(sigma_cut, T)) - 1.0) > 1e-12 && sigma_cut < 200.0)
    sigma_cut += 2.0;
  out.sigma_cut = sigma_cut;
  const Complex top_right(sigma_cut, T), top_left(alpha, T);
  const auto samples = track_phase(lstar.eval, top_right, top_left);
  const double span = sigma_cut - alpha;
  auto arg_at = [&](double sigma) {
    const double u = (sigma_cut - sigma) / span;
    auto it = std::upper_bound(samples.begin(), samples.end(), u,
                               [](double x, const PhaseSample& s) { return x < s.u; });
    const PhaseSample& s = *(it == samples.begin() ? it : it - 1);
    return s.phase + phase_step(s.value, lstar.eval(Complex(sigma, T)));
  };
  const auto horiz = integrate(arg_at, alpha, sigma_cut, 0.25 * kPi * abs_tol, {}, 1.0);
  // tail: arg L* ~ Im(c1 lambda1^{-s}) for sigma > sigma_cut
  const Complex lead = lstar.coeff1 * std::exp(-Complex(sigma_cut, T) * l1);
  out.arg_integral = (horiz.value + lead.imag() / l1) / kPi;

  for (const auto& p : lstar.poles)
    if (p.location > alpha) out.pole_term += p.order * (p.location - alpha);
  out.quadrature_error = vert.error / kPi + horiz.error / kPi;
  return out;
}

SmoothedConstants closed_form_constants(int d, int kappa, double a_gamma) {
  require(d >= 2, ErrorCode::invalid_argument, "closed_form_constants: d must be >= 2");
  require(a_gamma > 0.0, ErrorCode::invalid_argument, "closed_form_constants: a_Gamma > 0");
  const int m = (d - 1) / 2;
  const int nu = (d - 1) % 2;
  SmoothedConstants c;
  c.B = (4.0 * std::log(a_gamma) - 3.0 * kappa * (d - 1)) / (8.0 * kPi);
  c.B_as_displayed =
      (4.0 * std::log(a_gamma) - kappa * (d - 1 + 2.0 * nu * std::log(kPi))) / (8.0 * kPi);
  c.C = kappa * (2.0 * m * (m + nu - 1) - nu) / 16.0;
  return c;
}

double smoothed_model(int d, int kappa, double a_gamma, double T) {
  const auto c = closed_form_constants(d, kappa, a_gamma);
  return kappa * (d - 1) / (4.0 * kPi) * T * T * std::log(T) + c.B * T * T + c.C * T;
}

SmoothedIntegral smoothed_critical_integral(const LStarData& lstar, double a_gamma, double T,
                                            double abs_tol) {
  require(T > 0.0, ErrorCode::invalid_argument, "smoothed_critical_integral: T must be positive");
  const double h = 0.5 * (lstar.d - 1);
  auto g = [&](double t) {
    return (T - t) * std::log(std::abs(lstar.eval(Complex(h, t))));
  };
  // even integrand: (1/2pi) int_{-T}^{T} = (1/pi) int_0^T
  const double tail_start = std::min(1.0, T);
  const double breaks[] = {1e-3, 1e-2, 1e-1, tail_start};
  const auto q = integrate(g, 0.0, T, kPi * abs_tol, breaks, 2.0);
  SmoothedIntegral out;
  out.numeric = q.value / kPi;
  out.error = q.error / kPi;
  out.model = (lstar.kappa == 0) ? 0.0 : smoothed_model(lstar.d, lstar.kappa, a_gamma, T);
  return out;
}

double main_term_linear_coefficient(int d, int kappa, double a_gamma) {
  return 2.0 * closed_form_constants(d, kappa, a_gamma).B + kappa * (d - 1) / (4.0 * kPi);
}

double phase_integral(const ComplexFn& phi_det, int d, double T, const TrackOptions& opts) {
  const double h = 0.5 * (d - 1);
  T = std::abs(T);
  const double eps = 1e-6;
  auto at = [&](double t) { return phi_det(Complex(h, t)); };
  if (T <= eps) return -phase_step(at(-T), at(T)) / (2.0 * kPi);
  const auto s = track_phase(phi_det, Complex(h, eps), Complex(h, T), opts);
  const double upper = s.back().phase - s.front().phase;  // psi(T) - psi(eps)
  const double center = phase_step(at(-eps), at(eps));    // psi(eps) - psi(-eps)
  return -(2.0 * upper + center) / (2.0 * kPi);
}

MainTermFit verify_main_term(const std::vector<ZeroRecord>& zeros, int d, int kappa,
                             const std::vector<double>& T_grid) {
  require(!zeros.empty(), ErrorCode::invalid_argument, "verify_main_term: no zeros");
  require(T_grid.size() >= 2, ErrorCode::invalid_argument, "verify_main_term: T grid too short");
  MainTermFit fit;
  fit.leading = kappa * (d - 1) / (2.0 * kPi);
  fit.T_grid = T_grid;
  const double alpha = 0.5 * (d - 1);
  std::vector<double> y;
  for (double T : T_grid) {
    require(T > 1.0, ErrorCode::invalid_argument, "verify_main_term: T must exceed 1");
    const double f1 = F1_sum(zeros, alpha, T);
    fit.F1_values.push_back(f1);
    y.push_back(f1 - fit.leading * T * std::log(T));
  }
  fit.A = least_squares({T_grid}, y)[0];
  double ss = 0.0;
  for (std::size_t i = 0; i < T_grid.size(); ++i) {
    const double r = y[i] - fit.A * T_grid[i];
    fit.residuals.push_back(r);
    ss += r * r;
    fit.sup_residual_over_log =
        std::max(fit.sup_residual_over_log, std::abs(r) / std::log(T_grid[i]));
  }
  fit.rms_residual = std::sqrt(ss / T_grid.size());
  return fit;
}

std::vector<StripRow> verify_strip_concentration(const std::vector<ZeroRecord>& zeros, int d,
                                                 double alpha,
                                                 const std::vector<double>& T_grid) {
  const double alpha0 = d - 1.25;
  require(alpha >= alpha0, ErrorCode::invalid_argument,
          "verify_strip_concentration: alpha below d - 5/4");
  std::vector<StripRow> rows;
  for (double T : T_grid) {
    require(T > std::exp(1.0), ErrorCode::invalid_argument,
            "verify_strip_concentration: T must exceed e");
    StripRow r;
    r.T = T;
    r.F1 = F1_sum(zeros, alpha, T);
    const double loglog = std::log(std::log(T));
    const double near = alpha > alpha0 ? std::log(1.0 / (alpha - alpha0))
                                       : std::numeric_limits<double>::infinity();
    r.scale = T * std::min(near, loglog);
    if (r.scale > 0.0)
      r.ratio = r.F1 / r.scale;
    else
      r.ratio = r.F1 == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    rows.push_back(r);
  }
  return rows;
}

}  // namespace hs::zerodist
