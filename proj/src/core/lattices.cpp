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

#include "hypscatter/lattices.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <regex>
#include <sstream>

#include "hypscatter/error.hpp"
#include "hypscatter/io.hpp"

namespace hs::lattices {

using hypgeom::IsometryMatrix;

std::string LatticeId::name() const {
  switch (kind) {
    case LatticeKind::sl2z: return "SL2Z";
    case LatticeKind::gamma0: return "Gamma0(" + std::to_string(p) + ")";
    case LatticeKind::gaussian: return "SL2ZiGaussian";
  }
  return "?";
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

LatticeId LatticeId::parse(const std::string& name) {
  if (name == "SL2Z") return {LatticeKind::sl2z, 0};
  if (name == "SL2ZiGaussian") return {LatticeKind::gaussian, 0};
  static const std::regex g0(R"(Gamma0\((\d{1,6})\))");
  std::smatch m;
  if (std::regex_match(name, m, g0)) {
    const int p = std::stoi(m[1]);
    require(is_prime(p), ErrorCode::invalid_argument, "Gamma0 level must be prime: " + name);
    return {LatticeKind::gamma0, p};
  }
  throw Error(ErrorCode::invalid_argument, "unknown lattice id: " + name);
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

namespace {

bool right_half(Gauss z) { return z.re > 0 || (z.re == 0 && z.im > 0); }

}  // namespace

Mat2 psl_canonical(const Mat2& m) {
  for (Gauss e : {m.a, m.b, m.c, m.d}) {
    if (e.is_zero()) continue;
    if (right_half(e)) return m;
    return {-m.a, -m.b, -m.c, -m.d};
  }
  return m;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

namespace {

std::int64_t round_div(std::int64_t n, std::int64_t m) {
  // nearest integer to n / m for m > 0
  const std::int64_t two_n = 2 * n + m;
  const std::int64_t q = two_n / (2 * m);
  return (two_n % (2 * m) < 0) ? q - 1 : q;
}

Gauss gauss_divround(Gauss a, Gauss b) {
  const std::int64_t n = b.norm();
  const Gauss num = a * Gauss{b.re, -b.im};
  return {round_div(num.re, n), round_div(num.im, n)};
}

// x, y with x a + y b = g, g a gcd of a and b.
Gauss gauss_ext_gcd(Gauss a, Gauss b, Gauss& x, Gauss& y) {
  Gauss x0{1, 0}, y0{0, 0}, x1{0, 0}, y1{1, 0};
  while (!b.is_zero()) {
    const Gauss q = gauss_divround(a, b);
    Gauss t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  x = x0;
  y = y0;
  return a;
}

Gauss unit_inverse(Gauss u) { return {u.re, -u.im}; }  // for |u| = 1

}  // namespace

Gauss gauss_gcd(Gauss a, Gauss b) {
  Gauss x, y;
  return gauss_ext_gcd(a, b, x, y);
}

namespace {

Eigen::Vector3d xi_from_real_hermitian(const Eigen::Matrix2d& H) {
  return {H(1, 1) - H(0, 0) / 4.0, H(0, 1), H(1, 1) + H(0, 0) / 4.0};
}

Eigen::Vector4d xi_from_hermitian(const Eigen::Matrix2cd& H) {
  return {H(1, 1).real() - H(0, 0).real() / 4.0, H(0, 1).real(), H(0, 1).imag(),
          H(1, 1).real() + H(0, 0).real() / 4.0};
}

}  // namespace

IsometryMatrix embed_sl2r(const Eigen::Matrix2d& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  require(std::abs(m.determinant() - 1.0) < 1e-9 * scale * scale, ErrorCode::invalid_argument,
          "embed_sl2r: determinant is not 1");
  Eigen::Matrix3d A;
  for (int k = 0; k < 3; ++k) {
    Eigen::Vector3d xi = Eigen::Vector3d::Zero();
    xi(k) = 1.0;
    Eigen::Matrix2d H;
    H << 2.0 * (xi(2) - xi(0)), xi(1), xi(1), 0.5 * (xi(2) + xi(0));
    A.col(k) = xi_from_real_hermitian(m * H * m.transpose());
  }
  return IsometryMatrix(A);
}

IsometryMatrix embed_sl2c(const Eigen::Matrix2cd& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  require(std::abs(m.determinant() - 1.0) < 1e-9 * scale * scale, ErrorCode::invalid_argument,
          "embed_sl2c: determinant is not 1");
  Eigen::Matrix4d A;
  for (int k = 0; k < 4; ++k) {
    Eigen::Vector4d xi = Eigen::Vector4d::Zero();
    xi(k) = 1.0;
    Eigen::Matrix2cd H;
    const std::complex<double> off(xi(1), xi(2));
    H << 2.0 * (xi(3) - xi(0)), off, std::conj(off), 0.5 * (xi(3) + xi(0));
    A.col(k) = xi_from_hermitian(m * H * m.adjoint());
  }
  return IsometryMatrix(A);
}

IsometryMatrix embed(const LatticeModel& model, const Mat2& m) {
  if (model.d == 2) {
    Eigen::Matrix2d r;
    r << static_cast<double>(m.a.re), static_cast<double>(m.b.re), static_cast<double>(m.c.re),
        static_cast<double>(m.d.re);
    return embed_sl2r(r);
  }
  auto z = [](Gauss g) {
    return std::complex<double>(static_cast<double>(g.re), static_cast<double>(g.im));
  };
  Eigen::Matrix2cd c;
  c << z(m.a), z(m.b), z(m.c), z(m.d);
  return embed_sl2c(c);
}

LatticeModel make_lattice(const LatticeId& id) {
  LatticeModel model;
  model.id = id;
  switch (id.kind) {
    case LatticeKind::sl2z:
      model.d = 2;
      model.kappa = 1;
      model.cusps.push_back({"inf", IsometryMatrix::identity(2), Eigen::MatrixXd::Ones(1, 1), 1.0, 1});
      break;
    case LatticeKind::gamma0: {
      require(is_prime(id.p), ErrorCode::invalid_argument, "Gamma0 level must be prime");
      model.d = 2;
      model.kappa = 2;
      const double r = std::sqrt(static_cast<double>(id.p));
      Eigen::Matrix2d s;
      s << 0.0, -1.0 / r, r, 0.0;
      model.cusps.push_back({"inf", IsometryMatrix::identity(2), Eigen::MatrixXd::Ones(1, 1), 1.0, 1});
      model.cusps.push_back({"0", embed_sl2r(s), Eigen::MatrixXd::Ones(1, 1), 1.0, id.p});
      break;
    }
    case LatticeKind::gaussian:
      model.d = 3;
      model.kappa = 1;
      model.cusps.push_back(
          {"inf", IsometryMatrix::identity(3), Eigen::MatrixXd::Identity(2, 2), 1.0, 1});
      break;
  }
  return model;
}

namespace {

struct Coset {
  std::int64_t lambda;
  Mat2 gamma;
};

Gauss rat(std::int64_t x) { return {x, 0}; }

// SL2(Z) element with bottom row (c, d), gcd(c, d) = 1.
Mat2 complete_bottom_row(std::int64_t c, std::int64_t d) {
  std::int64_t x, y;
  ext_gcd(d, c, x, y);  // x d + y c = 1
  return {rat(x), rat(-y), rat(c), rat(d)};
}

// SL2(Z) element with top row (a, b), gcd(a, b) = 1.
Mat2 complete_top_row(std::int64_t a, std::int64_t b, std::int64_t p) {
  // a d - b c = 1 with c = p c'
  std::int64_t x, y;
  ext_gcd(a, b * p, x, y);  // x a + y b p = 1
  return {rat(a), rat(b), rat(-y * p), rat(x)};
}

void check_budget(std::int64_t work, std::int64_t budget) {
  if (work > budget)
    throw Error(ErrorCode::budget, "double-coset enumeration needs " + std::to_string(work) +
                                       " steps, budget is " + std::to_string(budget));
}

template <class Visit>
void enumerate_rational(const LatticeModel& model, int i, int j, std::int64_t lmax,
                        std::int64_t budget, Visit visit) {
  const std::int64_t p = model.id.kind == LatticeKind::gamma0 ? model.id.p : 1;
  const bool first_inf = i == 0, second_inf = j == 0;
  if (first_inf && second_inf) {
    // bottom row (c, d), c = p m, d mod c
    std::int64_t work = 0;
    for (std::int64_t c = p; c * c <= lmax; c += p) work += c;
    check_budget(work, budget);
    for (std::int64_t c = p; c * c <= lmax; c += p)
      for (std::int64_t d = 0; d < c; ++d)
        if (gcd(c, d) == 1) visit(Coset{c * c, complete_bottom_row(c, d)});
  } else if (first_inf && !second_inf) {
    // gamma sigma_0 has bottom row sqrt(p)(u, v): d = u, c = -v p
    std::int64_t work = 0;
    for (std::int64_t u = 1; p * u * u <= lmax; ++u) work += u;
    check_budget(work, budget);
    for (std::int64_t u = 1; p * u * u <= lmax; ++u) {
      if (gcd(u, p) != 1) continue;
      for (std::int64_t v = 0; v < u; ++v) {
        if (gcd(u, v) != 1) continue;
        std::int64_t x, y;
        ext_gcd(u, v * p, x, y);  // x u + y v p = 1 -> a = x, b = y
        visit(Coset{p * u * u, Mat2{rat(x), rat(y), rat(-v * p), rat(u)}});
      }
    }
  } else if (!first_inf && second_inf) {
    // sigma_0^{-1} gamma has bottom row -sqrt(p)(a, b), b mod a
    std::int64_t work = 0;
    for (std::int64_t a = 1; p * a * a <= lmax; ++a) work += a;
    check_budget(work, budget);
    for (std::int64_t a = 1; p * a * a <= lmax; ++a) {
      if (gcd(a, p) != 1) continue;
      for (std::int64_t b = 0; b < a; ++b)
        if (gcd(a, b) == 1) visit(Coset{p * a * a, complete_top_row(a, b, p)});
    }
  } else {
    // sigma_0^{-1} gamma sigma_0 has bottom row (-p b, a); take b = -m, a mod p m
    std::int64_t work = 0;
    for (std::int64_t m = 1; (p * m) * (p * m) <= lmax; ++m) work += p * m;
    check_budget(work, budget);
    for (std::int64_t m = 1; (p * m) * (p * m) <= lmax; ++m) {
      const std::int64_t u = p * m;
      for (std::int64_t a = 0; a < u; ++a)
        if (gcd(a, u) == 1) visit(Coset{u * u, complete_top_row(a, -m, p)});
    }
  }
}

template <class Visit>
void enumerate_gaussian(std::int64_t lmax, std::int64_t budget, Visit visit) {
  std::int64_t work = 0;
  for (std::int64_t m = 1; m * m <= lmax; ++m)
    for (std::int64_t n = 0; m * m + n * n <= lmax; ++n) work += m * m + n * n;
  check_budget(work, budget);
  for (std::int64_t m = 1; m * m <= lmax; ++m) {
    for (std::int64_t n = 0; m * m + n * n <= lmax; ++n) {
      const Gauss c{m, n};
      const std::int64_t N = c.norm();
      const std::int64_t g = gcd(m, n);
      // residues x + y i, 0 <= y < g, 0 <= x < N / g
      for (std::int64_t y = 0; y < g; ++y) {
        for (std::int64_t x = 0; x < N / g; ++x) {
          const Gauss d{x, y};
          Gauss s, t;
          const Gauss u = gauss_ext_gcd(d, c, s, t);  // s d + t c = u
          if (u.norm() != 1) continue;
          const Gauss inv = unit_inverse(u);
          visit(Coset{N, Mat2{s * inv, -(t * inv), c, d}});
        }
      }
    }
  }
}

template <class Visit>
void enumerate(const LatticeModel& model, int i, int j, double lambda_max, std::int64_t budget,
               Visit visit) {
  require(i >= 0 && j >= 0 && i < model.kappa && j < model.kappa, ErrorCode::invalid_argument,
          "enumerate_double_cosets: cusp index out of range");
  require(lambda_max >= 0.0 && std::isfinite(lambda_max), ErrorCode::invalid_argument,
          "enumerate_double_cosets: lambda_max must be finite and nonnegative");
  require(lambda_max < 4e12, ErrorCode::budget, "enumerate_double_cosets: lambda_max too large");
  const auto lmax = static_cast<std::int64_t>(std::floor(lambda_max));
  if (model.id.kind == LatticeKind::gaussian)
    enumerate_gaussian(lmax, budget, visit);
  else
    enumerate_rational(model, i, j, lmax, budget, visit);
}

}  // namespace

DoubleCosetSpectrum enumerate_double_cosets(const LatticeModel& model, int i, int j,
                                            double lambda_max, std::int64_t budget) {
  std::map<std::int64_t, std::int64_t> counts;
  enumerate(model, i, j, lambda_max, budget, [&](const Coset& c) { ++counts[c.lambda]; });
  DoubleCosetSpectrum out;
  for (auto [l, n] : counts) out.entries.push_back({static_cast<double>(l), n});
  return out;
}

std::vector<DoubleCosetRepresentative> double_coset_representatives(const LatticeModel& model,
                                                                    int i, int j,
                                                                    double lambda_max,
                                                                    std::int64_t budget) {
  std::vector<DoubleCosetRepresentative> out;
  enumerate(model, i, j, lambda_max, budget,
            [&](const Coset& c) { out.push_back({c.lambda, c.gamma}); });
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.lambda < y.lambda; });
  return out;
}

std::string to_csv(const DoubleCosetSpectrum& spec) {
  std::ostringstream out;
  out << "lambda,count\n";
  for (const auto& e : spec.entries) out << io::fmt_double(e.lambda) << ',' << e.count << '\n';
  return out.str();
}

std::vector<GroupElement> enumerate_group_elements(const LatticeModel& model, int height_bound) {
  require(height_bound >= 0, ErrorCode::invalid_argument,
          "enumerate_group_elements: negative bound");
  const std::int64_t B = height_bound;
  std::vector<Mat2> mats{Mat2{rat(1), rat(0), rat(0), rat(1)}};
  if (model.id.kind == LatticeKind::gaussian) {
    const std::int64_t side = 2 * B + 1;
    const std::int64_t side4 = side * side * side * side;
    require(side4 * side4 <= 50'000'000, ErrorCode::budget,
            "enumerate_group_elements: bound too large for the Gaussian model");
    std::vector<Gauss> vals;
    for (std::int64_t x = -B; x <= B; ++x)
      for (std::int64_t y = -B; y <= B; ++y) vals.push_back({x, y});
    for (Gauss a : vals)
      for (Gauss b : vals)
        for (Gauss c : vals)
          for (Gauss d : vals) {
            const Mat2 m{a, b, c, d};
            if (m.det() == Gauss{1, 0}) mats.push_back(psl_canonical(m));
          }
  } else {
    const std::int64_t p = model.id.kind == LatticeKind::gamma0 ? model.id.p : 1;
    require((2 * B + 1) * (2 * B + 1) * (2 * B + 1) <= 200'000'000, ErrorCode::budget,
            "enumerate_group_elements: bound too large");
    for (std::int64_t a = -B; a <= B; ++a)
      for (std::int64_t b = -B; b <= B; ++b)
        for (std::int64_t c = -B; c <= B; ++c) {
          if (c % p != 0) continue;
          if (a != 0) {
            const std::int64_t num = 1 + b * c;
            if (num % a != 0) continue;
            const std::int64_t d = num / a;
            if (d < -B || d > B) continue;
            mats.push_back(psl_canonical({rat(a), rat(b), rat(c), rat(d)}));
          } else if (b * c == -1) {
            for (std::int64_t d = -B; d <= B; ++d)
              mats.push_back(psl_canonical({rat(a), rat(b), rat(c), rat(d)}));
          }
        }
  }
  std::sort(mats.begin(), mats.end());
  mats.erase(std::unique(mats.begin(), mats.end()), mats.end());
  std::vector<GroupElement> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back({m, embed(model, m)});
  return out;
}

}  // namespace hs::lattices
