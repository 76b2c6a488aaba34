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

#include "hypscatter/numeric.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hypscatter/error.hpp"

namespace hs {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

struct Panel {
  double a, b, value, error;
  int depth;
};

Panel estimate(const RealFn& f, double a, double b, int depth) {
  double err = 0.0;
  const double v = GK::integrate(f, a, b, 0, 0.0, &err);
  // the non-adaptive rule reports its error on the reference interval [-1, 1]
  return {a, b, v, err * 0.5 * (b - a), depth};
}

}  // namespace

Quadrature integrate(const RealFn& f, double a, double b, double abs_tol,
                     std::span<const double> breaks, double panel_width) {
  require(b >= a, ErrorCode::invalid_argument, "integrate: b < a");
  if (b == a) return {};
  std::vector<double> cuts{a};
  std::vector<double> sorted(breaks.begin(), breaks.end());
  std::sort(sorted.begin(), sorted.end());
  for (double x : sorted)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);

  // global adaptive: always split the panel with the largest error estimate
  constexpr int kMaxDepth = 60;
  constexpr std::size_t kMaxPanels = 200000;
  auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::vector<Panel> heap, done;
  double error = 0.0;
  auto push = [&](Panel p) {
    if (!std::isfinite(p.value) || !std::isfinite(p.error))
      throw Error(ErrorCode::convergence, "integrate: non-finite integrand");
    error += p.error;
    if (p.depth >= kMaxDepth) {
      done.push_back(p);
      return;
    }
    heap.push_back(p);
    std::push_heap(heap.begin(), heap.end(), worse);
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel_width)));
    for (int k = 0; k < n; ++k) {
      const double pa = lo + (hi - lo) * k / n;
      const double pb = (k + 1 == n) ? hi : lo + (hi - lo) * (k + 1) / n;
      push(estimate(f, pa, pb, 0));
    }
  }
  while (error > abs_tol && !heap.empty() && heap.size() + done.size() < kMaxPanels) {
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Panel p = heap.back();
    heap.pop_back();
    error -= p.error;
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) {
      error += p.error;
      done.push_back(p);
      continue;
    }
    push(estimate(f, p.a, mid, p.depth + 1));
    push(estimate(f, mid, p.b, p.depth + 1));
  }
  // recompute the error sum to shed accumulated rounding
  CompensatedSum value, err_sum;
  for (const auto* list : {&heap, &done})
    for (const auto& p : *list) {
      value.add(p.value);
      err_sum.add(p.error);
    }
  error = err_sum.value();
  if (error > 10.0 * abs_tol)
    throw Error(ErrorCode::convergence, "integrate: tolerance not reached");
  return {value.value(), error};
}

std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  std::span<const double> y) {
  const auto n = static_cast<Eigen::Index>(y.size());
  const auto m = static_cast<Eigen::Index>(columns.size());
  require(m > 0 && n >= m, ErrorCode::invalid_argument,
          "least_squares: need at least as many samples as unknowns");
  Eigen::MatrixXd a(n, m);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index j = 0; j < m; ++j) {
    require(static_cast<Eigen::Index>(columns[j].size()) == n,
            ErrorCode::invalid_argument, "least_squares: column length mismatch");
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = columns[j][i];
  }
  for (Eigen::Index i = 0; i < n; ++i) rhs(i) = y[i];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() < m) throw Error(ErrorCode::consistency, "least_squares: singular fit matrix");
  Eigen::VectorXd x = qr.solve(rhs);
  return {x.data(), x.data() + m};
}

}  // namespace hs
