// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

// Polynomial roots by Aberth-Ehrlich iteration with Newton-polygon starting
// radii (Bini's initialization).

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wh/error.hpp"
#include "wh/z_oracle.hpp"

namespace wh::z {

namespace {

constexpr int kMaxSweeps = 500;
constexpr double kResidualTol = 1e-12;

struct HornerResult {
  Complex p;
  Complex dp;
  double scale;  // sum |a_i| |z|^i, for relative residuals
};

HornerResult horner(const std::vector<Complex>& a, Complex z) {
  Complex p = a.back();
  Complex dp(0.0, 0.0);
  double scale = std::abs(a.back());
  const double az = std::abs(z);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
    scale = scale * az + std::abs(a[i]);
  }
  return {p, dp, scale};
}

std::vector<Complex> initial_guesses(const std::vector<Complex>& a) {
  const std::size_t n = a.size() - 1;
  // Upper convex hull of (i, log|a_i|) over nonzero coefficients.
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] != Complex(0.0, 0.0)) pts.emplace_back(static_cast<double>(i), std::log(std::abs(a[i])));
  }
  std::vector<std::pair<double, double>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double cross = (b.first - o.first) * (pt.second - o.second) - (b.second - o.second) * (pt.first - o.first);
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  std::vector<Complex> z;
  z.reserve(n);
  constexpr double kSigma = 0.7;
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const auto i = hull[e].first;
    const auto j = hull[e + 1].first;
    const auto count = static_cast<std::size_t>(j - i);
    const double radius = std::exp((hull[e].second - hull[e + 1].second) / (j - i));
    for (std::size_t k = 0; k < count; ++k) {
      const double angle = two_pi * static_cast<double>(k) / static_cast<double>(count) +
                           two_pi * i / static_cast<double>(n) + kSigma;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& a_in) {
  std::vector<Complex> a(a_in);
  while (!a.empty() && a.back() == Complex(0.0, 0.0)) a.pop_back();
  if (a.empty()) throw PreconditionError("roots of the zero polynomial are undefined");
  const std::size_t n = a.size() - 1;
  if (n == 0) return {};

  // Zero roots are exact; deflate them first.
  std::size_t zeros = 0;
  while (a[zeros] == Complex(0.0, 0.0)) ++zeros;
  std::vector<Complex> out(zeros, Complex(0.0, 0.0));
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(zeros));
  const std::size_t m = a.size() - 1;
  if (m == 0) return out;
  if (m == 1) {
    out.push_back(-a[0] / a[1]);
    return out;
  }

  std::vector<Complex> z = initial_guesses(a);
  std::vector<bool> done(m, false);
  const double eps = std::numeric_limits<double>::epsilon();
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    bool all_done = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      const auto h = horner(a, z[k]);
      if (std::abs(h.p) <= 4.0 * eps * h.scale) {
        done[k] = true;
        continue;
      }
      all_done = false;
      const Complex ratio = h.p / h.dp;
      Complex sum(0.0, 0.0);
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * sum);
      z[k] -= step;
      if (std::abs(step) <= eps * std::abs(z[k])) done[k] = true;
    }
    if (all_done) break;
  }
  for (const auto& zk : z) {
    const auto h = horner(a, zk);
    const double rel = h.scale > 0.0 ? std::abs(h.p) / h.scale : std::abs(h.p);
    if (!(rel < kResidualTol)) {
      throw RootFindingError("Aberth iteration did not converge after " + std::to_string(sweep) +
                             " sweeps (relative residual " + std::to_string(rel) + ")");
    }
  }
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

LaurentRoots laurent_roots(const LaurentPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("roots of the zero Laurent polynomial are undefined");
  if (p.n_max() - p.n_min() > kMaxDegreeSpan) {
    throw PreconditionError("degree span " + std::to_string(p.n_max() - p.n_min()) + " exceeds " +
                            std::to_string(kMaxDegreeSpan));
  }
  LaurentRoots out;
  out.pole_order = std::max<std::int64_t>(0, -p.n_min());
  for (const auto& z : polynomial_roots(p.coeffs())) {
    const double d = std::abs(z) - 1.0;
    const RootClass cls = std::abs(d) <= kOnCircleTol ? RootClass::On : (d < 0 ? RootClass::Inside : RootClass::Outside);
    out.roots.push_back(Root{z, cls});
  }
  return out;
}

}  // namespace wh::z
