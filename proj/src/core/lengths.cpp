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

#include "hypscatter/lengths.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "hypscatter/error.hpp"
#include "hypscatter/zerodist.hpp"

namespace hs::lengths {

using lattices::LatticeKind;
using lattices::Mat2;

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::int64_t n) {
  if (n < 0) return false;
  const auto r = isqrt(n);
  return r * r == n;
}

double length_of_trace(std::int64_t t) { return 2.0 * std::acosh(0.5 * static_cast<double>(t)); }

std::int64_t trace_cap(double L_max) {
  return static_cast<std::int64_t>(std::floor(2.0 * std::cosh(0.5 * L_max) + 1e-9));
}

// Smallest prime factor table for divisor enumeration.
class Divisors {
 public:
  explicit Divisors(std::int64_t n_max) : spf_(static_cast<std::size_t>(n_max + 1), 0) {
    for (std::int64_t i = 2; i <= n_max; ++i) {
      if (spf_[i] != 0) continue;
      for (std::int64_t j = i; j <= n_max; j += i)
        if (spf_[j] == 0) spf_[j] = i;
    }
  }

  std::vector<std::int64_t> of(std::int64_t n) const {
    std::vector<std::int64_t> out{1};
    while (n > 1) {
      const std::int64_t p = spf_[n];
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      const std::size_t base = out.size();
      std::int64_t pk = 1;
      for (int k = 1; k <= e; ++k) {
        pk *= p;
        for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
      }
    }
    return out;
  }

  std::int64_t limit() const { return static_cast<std::int64_t>(spf_.size()) - 1; }

 private:
  std::vector<std::int64_t> spf_;
};

std::vector<Form> reduced_forms(std::int64_t disc, const Divisors& divs) {
  const std::int64_t s = isqrt(disc);
  std::vector<Form> out;
  for (std::int64_t b = 1; b <= s; ++b) {
    if ((disc - b * b) % 4 != 0) continue;
    const std::int64_t n = (disc - b * b) / 4;  // = -ac > 0
    for (std::int64_t A : divs.of(n)) {
      if ((2 * A + b) * (2 * A + b) <= disc) continue;
      if (2 * A - b >= 0 && (2 * A - b) * (2 * A - b) >= disc) continue;
      for (int sign : {1, -1}) {
        const Form f{sign * A, b, -sign * (n / A)};
        if (std::gcd(std::gcd(f.a, f.b), f.c) == 1) out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Form rho(const Form& f, std::int64_t disc) {
  const std::int64_t s = isqrt(disc);
  const std::int64_t m = 2 * std::abs(f.c);
  const std::int64_t k = (s + f.b) >= 0 ? (s + f.b) / m : -((-(s + f.b) + m - 1) / m);
  const std::int64_t b2 = -f.b + m * k;
  return {f.c, b2, (b2 * b2 - disc) / (4 * f.c)};
}

std::vector<std::vector<Form>> form_cycles(std::int64_t disc, const Divisors& divs) {
  const auto forms = reduced_forms(disc, divs);
  std::set<Form> seen;
  std::vector<std::vector<Form>> cycles;
  for (const auto& f : forms) {
    if (seen.count(f)) continue;
    std::vector<Form> cyc;
    Form g = f;
    do {
      require(std::binary_search(forms.begin(), forms.end(), g), ErrorCode::internal,
              "reduction cycle left the reduced forms");
      seen.insert(g);
      cyc.push_back(g);
      g = rho(g, disc);
    } while (!(g == f));
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

bool fundamental(std::int64_t disc, std::int64_t u) {
  for (std::int64_t v = 1; v < u; ++v)
    if (is_square(disc * v * v + 4)) return false;
  return true;
}

Mat2 rational(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {{a, 0}, {b, 0}, {c, 0}, {d, 0}};
}

std::int64_t power_trace(std::int64_t t, int k) {
  std::int64_t prev = 2, cur = t;
  for (int i = 1; i < k; ++i) {
    const std::int64_t next = t * cur - prev;
    prev = cur;
    cur = next;
  }
  return k == 0 ? 2 : cur;
}

// Orbit sizes of a matrix acting on row vectors of P^1(F_p).
std::vector<int> orbit_sizes(const Mat2& g, std::int64_t p) {
  auto md = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inv = [&](std::int64_t x) {
    std::int64_t u, v;
    lattices::ext_gcd(md(x), p, u, v);
    return md(u);
  };
  // index y in [0, p) is (1 : y), index p is (0 : 1)
  auto act = [&](std::int64_t idx) {
    const std::int64_t x = idx == p ? 0 : 1, y = idx == p ? 1 : idx;
    const std::int64_t nx = md(x * g.a.re + y * g.c.re), ny = md(x * g.b.re + y * g.d.re);
    return nx == 0 ? p : md(ny * inv(nx));
  };
  std::vector<bool> seen(static_cast<std::size_t>(p + 1), false);
  std::vector<int> sizes;
  for (std::int64_t i = 0; i <= p; ++i) {
    if (seen[i]) continue;
    int n = 0;
    std::int64_t j = i;
    do {
      seen[j] = true;
      j = act(j);
      ++n;
    } while (j != i);
    sizes.push_back(n);
  }
  return sizes;
}

LengthSpectrum from_trace_counts(const std::map<std::int64_t, std::int64_t>& counts) {
  LengthSpectrum out;
  for (const auto& [t, m] : counts)
    if (m > 0) out.push_back({length_of_trace(t), m, t});
  return out;
}

}  // namespace

std::int64_t narrow_class_number(std::int64_t disc) {
  require(disc > 0 && !is_square(disc) && (disc % 4 == 0 || disc % 4 == 1),
          ErrorCode::invalid_argument, "narrow_class_number: needs a non-square discriminant");
  const Divisors divs(disc / 4 + 1);
  return static_cast<std::int64_t>(form_cycles(disc, divs).size());
}

std::vector<PrimitiveClass> modular_primitive_classes(std::int64_t trace_max) {
  require(trace_max <= 4000, ErrorCode::budget, "modular_primitive_classes: trace above 4000");
  std::vector<PrimitiveClass> out;
  if (trace_max < 3) return out;
  const Divisors divs(trace_max * trace_max / 4 + 1);
  for (std::int64_t t = 3; t <= trace_max; ++t) {
    const std::int64_t n = t * t - 4;
    for (std::int64_t u = 1; u * u <= n; ++u) {
      if (n % (u * u) != 0) continue;
      const std::int64_t disc = n / (u * u);
      if (disc % 4 != 0 && disc % 4 != 1) continue;
      if (!fundamental(disc, u)) continue;
      for (const auto& cyc : form_cycles(disc, divs)) {
        const Form& f = cyc.front();
        PrimitiveClass pc;
        pc.trace = t;
        pc.u = u;
        pc.form = f;
        pc.gamma = rational((t - f.b * u) / 2, -f.c * u, f.a * u, (t + f.b * u) / 2);
        out.push_back(pc);
      }
    }
  }
  return out;
}

LengthSpectrum length_spectrum(const lattices::LatticeModel& model, double L_max) {
  require(L_max <= kMaxLength, ErrorCode::budget, "length_spectrum: L_max above 15");
  require(model.id.kind != LatticeKind::gaussian, ErrorCode::invalid_argument,
          "length_spectrum: d = 3 lattices are not supported");
  std::map<std::int64_t, std::int64_t> counts;
  const std::int64_t tmax = trace_cap(L_max);
  const auto classes = modular_primitive_classes(tmax);
  if (model.id.kind == LatticeKind::sl2z) {
    for (const auto& c : classes) ++counts[c.trace];
  } else {
    for (const auto& c : classes) {
      const double l0 = length_of_trace(c.trace);
      for (int k : orbit_sizes(c.gamma, model.id.p)) {
        if (k * l0 > L_max + 1e-12) continue;
        ++counts[power_trace(c.trace, k)];
      }
    }
  }
  auto out = from_trace_counts(counts);
  std::erase_if(out, [&](const auto& e) { return e.length > L_max; });
  return out;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Plain {
  std::int64_t a, b, c, d;
};

Plain mul(const Plain& x, const Plain& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

// M = N^k with N of trace t0 >= 3 means N = (M + s_{k-1} I) / s_k; N must
// itself lie in the group.
bool is_proper_power(const Plain& m, std::int64_t level) {
  const std::int64_t t = m.a + m.d;
  for (int k = 2; power_trace(3, k) <= t; ++k) {
    for (std::int64_t t0 = 3; power_trace(t0, k) <= t; ++t0) {
      if (power_trace(t0, k) != t) continue;
      std::int64_t s_prev = 0, s = 1;  // s_0, s_1
      for (int i = 1; i < k; ++i) {
        const std::int64_t next = t0 * s - s_prev;
        s_prev = s;
        s = next;
      }
      if ((m.a + s_prev) % s == 0 && m.b % s == 0 && m.c % s == 0 && (m.d + s_prev) % s == 0 &&
          (m.c / s) % level == 0)
        return true;
    }
  }
  return false;
}

struct OracleCore {
  std::vector<OracleRow> rows;
  bool inverse_closed = true;
  std::int64_t elements = 0;
};

OracleCore oracle_core(const lattices::LatticeModel& model, std::int64_t trace_max,
                       std::int64_t B) {
  const std::int64_t level = model.id.kind == LatticeKind::gamma0 ? model.id.p : 1;
  std::vector<Plain> gens{{1, 1, 0, 1}};
  gens.push_back(level == 1 ? Plain{0, -1, 1, 0} : Plain{1, 0, level, 1});
  std::vector<Plain> gens_inv;
  for (const auto& g : gens) gens_inv.push_back({g.d, -g.b, -g.c, g.a});

  std::vector<Plain> elems;
  const std::int64_t W = 2 * B + 1;
  auto key = [&](const Plain& m) { return ((m.a + B) * W + (m.b + B)) * W + (m.c + B) + W * W * W * (m.a + m.d); };
  std::unordered_map<std::int64_t, int> index;
  for (std::int64_t t = 3; t <= trace_max; ++t) {
    for (std::int64_t a = -B; a <= B; ++a) {
      const std::int64_t d = t - a;
      if (std::abs(d) > B) continue;
      const std::int64_t n = a * d - 1;  // = bc, nonzero since |t| > 2
      const std::int64_t an = std::abs(n);
      for (std::int64_t b = 1; b <= std::min(an, B); ++b) {
        if (an % b != 0) continue;
        const std::int64_t c = n / b;
        if (std::abs(c) > B) continue;
        for (int sg : {1, -1}) {
          const Plain m{a, sg * b, sg * c, d};
          if (m.c % level != 0) continue;
          index.emplace(key(m), static_cast<int>(elems.size()));
          elems.push_back(m);
        }
      }
    }
  }
  DisjointSets ds(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Plain c = mul(mul(gens[g], elems[i]), gens_inv[g]);
      if (std::max({std::abs(c.a), std::abs(c.b), std::abs(c.c), std::abs(c.d)}) > B) continue;
      const auto it = index.find(key(c));
      if (it != index.end()) ds.unite(static_cast<int>(i), it->second);
    }
  }
  OracleCore out;
  out.elements = static_cast<std::int64_t>(elems.size());
  std::map<std::int64_t, std::int64_t> counts;
  std::map<int, int> inverse_of;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (ds.find(static_cast<int>(i)) != static_cast<int>(i)) continue;
    const auto& m = elems[i];
    const Plain inv{m.d, -m.b, -m.c, m.a};
    inverse_of[static_cast<int>(i)] = ds.find(index.at(key(inv)));
    if (!is_proper_power(m, level)) ++counts[m.a + m.d];
  }
  std::set<int> images;
  for (const auto& [root, img] : inverse_of) images.insert(img);
  out.inverse_closed = images.size() == inverse_of.size();
  for (const auto& [t, c] : counts) out.rows.push_back({t, c});
  return out;
}

}  // namespace

OracleResult brute_force_conjugacy_oracle(const lattices::LatticeModel& model,
                                          std::int64_t trace_max, std::int64_t entry_bound) {
  require(model.id.kind == LatticeKind::sl2z ||
              (model.id.kind == LatticeKind::gamma0 && model.id.p == 2),
          ErrorCode::invalid_argument, "conjugacy oracle: SL2Z and Gamma0(2) only");
  require(entry_bound >= 2 && entry_bound <= 1000, ErrorCode::budget,
          "conjugacy oracle: entry bound must lie in [2, 1000]");
  OracleResult out;
  if (trace_max < 3) {
    out.saturated = out.inverse_closed = true;
    return out;
  }
  const auto full = oracle_core(model, trace_max, entry_bound);
  const auto half = oracle_core(model, trace_max, entry_bound / 2);
  out.rows = full.rows;
  out.half_rows = half.rows;
  out.elements = full.elements;
  out.inverse_closed = full.inverse_closed;
  out.saturated = full.rows.size() == half.rows.size() &&
                  std::equal(full.rows.begin(), full.rows.end(), half.rows.begin(),
                             [](const OracleRow& x, const OracleRow& y) {
                               return x.trace == y.trace && x.primitive_classes == y.primitive_classes;
                             });
  return out;
}

namespace {

bool same_length(double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(x)); }

}  // namespace

double DL(const LengthSpectrum& s1, const LengthSpectrum& s2, double T) {
  std::size_t i = 0, j = 0;
  double total = 0.0;
  while (true) {
    const bool has1 = i < s1.size() && s1[i].length <= T;
    const bool has2 = j < s2.size() && s2[j].length <= T;
    if (!has1 && !has2) break;
    if (has1 && has2 && same_length(s1[i].length, s2[j].length)) {
      total += static_cast<double>(std::abs(s1[i].multiplicity - s2[j].multiplicity));
      ++i;
      ++j;
    } else if (has1 && (!has2 || s1[i].length < s2[j].length)) {
      total += static_cast<double>(s1[i++].multiplicity);
    } else {
      total += static_cast<double>(s2[j++].multiplicity);
    }
  }
  return total;
}

SpectrumComparison compare_spectra(const LengthSpectrum& s1, const LengthSpectrum& s2,
                                   const std::vector<double>& T_grid) {
  require(std::is_sorted(T_grid.begin(), T_grid.end()), ErrorCode::invalid_argument,
          "compare_spectra: grid must be ascending");
  SpectrumComparison out;
  out.T_grid = T_grid;
  for (double T : T_grid) out.DL_values.push_back(DL(s1, s2, T));
  std::vector<double> xs, ys;
  for (std::size_t k = T_grid.size() / 2; k < T_grid.size(); ++k) {
    if (out.DL_values[k] <= 0.0) continue;
    xs.push_back(T_grid[k]);
    ys.push_back(std::log(out.DL_values[k]));
  }
  if (xs.size() == 1) out.dl_estimate = 0.0;
  if (xs.size() >= 2) {
    const std::vector<double> ones(xs.size(), 1.0);
    out.dl_estimate = least_squares({xs, ones}, ys)[0];
  }
  return out;
}

namespace {

// log(1 - z), accurate for small |z|.
Complex log1m(Complex z) {
  if (std::abs(z) > 1e-4) return std::log(1.0 - z);
  Complex term = z, sum = 0.0;
  for (int k = 1; k <= 8; ++k) {
    sum -= term / static_cast<double>(k);
    term *= z;
  }
  return sum;
}

ZetaValue euler_product(const LengthSpectrum& spec, Complex s, double L_max, int a_min, int a_max,
                        int d) {
  require(s.real() > d - 1 + 0.05, ErrorCode::domain, "zeta product: needs Re s > d - 1");
  ComplexCompensatedSum acc;
  for (int a = a_min; a <= a_max; ++a)
    for (const auto& e : spec)
      if (e.length <= L_max)
        acc.add(static_cast<double>(e.multiplicity) * log1m(std::exp(-(s + static_cast<double>(a)) * e.length)));
  ZetaValue out;
  out.log_value = acc.value();
  out.value = std::exp(out.log_value);
  const double excess = s.real() - (d - 1);
  const double C = std::max(1.0, growth_constant(spec, d));
  out.tail_bound = 2.0 * C * std::exp(-excess * L_max) / (excess * (d - 1) * std::max(L_max, 1.0)) /
                   (1.0 - std::exp(-s.real() * std::max(L_max, 1.0)));
  return out;
}

}  // namespace

double growth_constant(const LengthSpectrum& spec, int d) {
  double best = 0.0;
  double n = 0.0;
  for (const auto& e : spec) {
    n += static_cast<double>(e.multiplicity);
    best = std::max(best, n * (d - 1) * e.length / std::exp((d - 1) * e.length));
  }
  return best;
}

ZetaValue ruelle_zeta(const LengthSpectrum& spec, Complex s, double L_max, int d) {
  return euler_product(spec, s, L_max, 0, 0, d);
}

ZetaValue surface_zeta(const LengthSpectrum& spec, Complex s, double L_max, int a_max, int d) {
  require(a_max >= 0, ErrorCode::invalid_argument, "surface_zeta: a_max must be >= 0");
  return euler_product(spec, s, L_max, 0, a_max, d);
}

IdentityCheck zeta_identity_check(const LengthSpectrum& spec, Complex s, double L_max, int a_max,
                                  bool matched) {
  require(a_max >= 1, ErrorCode::invalid_argument, "zeta_identity_check: a_max must be >= 1");
  const auto R = ruelle_zeta(spec, s, L_max);
  const auto Zs = surface_zeta(spec, s, L_max, a_max);
  const auto Zs1 = surface_zeta(spec, s + 1.0, L_max, matched ? a_max - 1 : a_max);
  IdentityCheck out;
  out.residual = std::abs(R.value - std::exp(Zs.log_value - Zs1.log_value));
  if (!matched) {
    // Z(s)/Z(s+1) = R(s) / prod (1 - e^{-(s + a_max + 1) l})^m
    const auto dropped = euler_product(spec, s, L_max, a_max + 1, a_max + 1, 2);
    out.predicted = std::abs(R.value - R.value * std::exp(-dropped.log_value));
  }
  return out;
}

OrientationReport ruelle_orientation(const LengthSpectrum& spec, Complex s, double L_max,
                                     int a_max) {
  require(a_max >= 1, ErrorCode::invalid_argument, "ruelle_orientation: a_max must be >= 1");
  const auto R = ruelle_zeta(spec, s, L_max);
  const auto Zs = surface_zeta(spec, s, L_max, a_max);
  const auto Zs1 = surface_zeta(spec, s + 1.0, L_max, a_max - 1);
  OrientationReport out;
  out.quotient = std::abs(R.value - std::exp(Zs.log_value - Zs1.log_value));
  out.inverse = std::abs(R.value - std::exp(Zs1.log_value - Zs.log_value));
  return out;
}

Complex perturbation_quotient(const std::vector<PerturbationTerm>& terms, Complex s, int a_max) {
  require(a_max >= 0, ErrorCode::invalid_argument, "perturbation_quotient: a_max must be >= 0");
  ComplexCompensatedSum acc;
  for (const auto& term : terms) {
    require(term.length > 0.0, ErrorCode::invalid_argument, "perturbation_quotient: length <= 0");
    if (term.delta == 0) continue;
    for (int a = 0; a <= a_max; ++a) {
      const Complex z = std::exp(-(s + static_cast<double>(a)) * term.length);
      require(std::abs(1.0 - z) > 1e-14, ErrorCode::domain,
              "perturbation_quotient: evaluated at a lattice point");
      acc.add(static_cast<double>(term.delta) * log1m(z));
    }
  }
  return std::exp(acc.value());
}

std::vector<LatticePoint> locate_perturbation_points(const std::vector<PerturbationTerm>& terms,
                                                     int a_max, int b_max) {
  std::vector<LatticePoint> pts;
  for (const auto& term : terms) {
    for (int a = 0; a <= a_max; ++a) {
      for (int b = -b_max; b <= b_max; ++b) {
        const Complex z(-a, 2.0 * kPi * b / term.length);
        const bool dup = std::any_of(pts.begin(), pts.end(), [&](const LatticePoint& p) {
          return std::abs(p.location - z) < 1e-9;
        });
        if (!dup) pts.push_back({z, a, b, 0, 0});
      }
    }
  }
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& x, const LatticePoint& y) {
    return x.location.imag() != y.location.imag() ? x.location.imag() < y.location.imag()
                                                  : x.location.real() > y.location.real();
  });
  double spacing = 1.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      spacing = std::min(spacing, std::abs(pts[i].location - pts[j].location));
  const double r = 0.4 * spacing;
  auto F = [&](Complex s) { return perturbation_quotient(terms, s, a_max); };
  for (auto& p : pts) {
    const double y = p.location.imag();
    for (const auto& term : terms) {
      const double q = y * term.length / (2.0 * kPi);
      if (std::abs(q - std::round(q)) < 1e-9) p.formula_order += term.delta;
    }
    const zerodist::Rectangle box{p.location.real() - r, p.location.real() + r, y - r, y + r};
    p.located_order = zerodist::count_zeros(F, box);
  }
  return pts;
}

}  // namespace hs::lengths
