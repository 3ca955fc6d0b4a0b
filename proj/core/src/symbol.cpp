// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include "wh/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wh/error.hpp"

namespace wh {

namespace {

void require_same_group(const TrigPolynomial& p, const TrigPolynomial& q) {
  if (!(p.group() == q.group())) throw DimensionError("trigonometric polynomials belong to different groups");
}

void prune(TrigPolynomial::CoeffMap& m) {
  std::erase_if(m, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

}  // namespace

TrigPolynomial::TrigPolynomial(OrderedGroup group, CoeffMap coeffs) : group_(std::move(group)) {
  for (auto& [xi, c] : coeffs) {
    group_.check_rank(xi);
    if (c != Complex(0.0, 0.0)) coeffs_.emplace(xi, c);
  }
}

TrigPolynomial TrigPolynomial::monomial(OrderedGroup group, GroupElement xi, Complex c) {
  CoeffMap m;
  m.emplace(std::move(xi), c);
  return TrigPolynomial(std::move(group), std::move(m));
}

TrigPolynomial TrigPolynomial::constant(OrderedGroup group, Complex c) {
  const auto r = group.rank();
  return monomial(std::move(group), GroupElement::zero(r), c);
}

Complex TrigPolynomial::coeff(const GroupElement& xi) const {
  const auto it = coeffs_.find(xi);
  return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

Complex TrigPolynomial::eval(const DualPoint& theta) const {
  if (theta.rank() != rank()) throw DimensionError("dual point rank does not match the group");
  Complex sum(0.0, 0.0);
  for (const auto& [xi, c] : coeffs_) {
    double phase = 0.0;
    for (std::size_t j = 0; j < xi.rank(); ++j) phase += static_cast<double>(xi[j]) * theta.angles[j];
    sum += c * std::polar(1.0, phase);
  }
  return sum;
}

std::int64_t TrigPolynomial::bandwidth() const noexcept {
  std::int64_t b = 0;
  for (const auto& kv : coeffs_) b = std::max(b, kv.first.max_abs());
  return b;
}

double TrigPolynomial::l1_norm() const noexcept {
  double s = 0.0;
  for (const auto& kv : coeffs_) s += std::abs(kv.second);
  return s;
}

double TrigPolynomial::lipschitz_bound() const noexcept {
  double s = 0.0;
  for (const auto& [xi, c] : coeffs_) s += std::abs(c) * xi.euclidean_norm();
  return s;
}

TrigPolynomial add(const TrigPolynomial& p, const TrigPolynomial& q) {
  require_same_group(p, q);
  auto m = p.coeffs();
  for (const auto& [xi, c] : q.coeffs()) m[xi] += c;
  prune(m);
  return TrigPolynomial(p.group(), std::move(m));
}

TrigPolynomial sub(const TrigPolynomial& p, const TrigPolynomial& q) { return add(p, scale(q, -1.0)); }

TrigPolynomial mul(const TrigPolynomial& p, const TrigPolynomial& q) {
  require_same_group(p, q);
  TrigPolynomial::CoeffMap m;
  for (const auto& [a, ca] : p.coeffs()) {
    for (const auto& [b, cb] : q.coeffs()) m[a + b] += ca * cb;
  }
  prune(m);
  return TrigPolynomial(p.group(), std::move(m));
}

TrigPolynomial scale(const TrigPolynomial& p, Complex lambda) {
  auto m = p.coeffs();
  for (auto& kv : m) kv.second *= lambda;
  prune(m);
  return TrigPolynomial(p.group(), std::move(m));
}

TrigPolynomial sub_scalar(const TrigPolynomial& p, Complex lambda) {
  return add(p, TrigPolynomial::constant(p.group(), -lambda));
}

TrigPolynomial conjugate(const TrigPolynomial& p) {
  TrigPolynomial::CoeffMap m;
  for (const auto& [xi, c] : p.coeffs()) m.emplace(-xi, std::conj(c));
  return TrigPolynomial(p.group(), std::move(m));
}

DualGrid::DualGrid(std::size_t rank, std::size_t per_axis) : rank_(rank), per_axis_(per_axis), size_(1) {
  if (rank == 0 || per_axis == 0) throw PreconditionError("dual grid needs positive rank and node count");
  for (std::size_t j = 0; j < rank; ++j) {
    if (size_ > kMaxGridPoints / per_axis) {
      throw PreconditionError("dual grid with " + std::to_string(per_axis) + " nodes per axis in rank " +
                              std::to_string(rank) + " exceeds the point budget");
    }
    size_ *= per_axis;
  }
}

DualGrid DualGrid::with_step(std::size_t rank, double h) {
  if (!(h > 0.0)) throw PreconditionError("grid step must be positive");
  const auto n = static_cast<std::size_t>(std::ceil(2.0 * std::numbers::pi / h - 1e-9));
  return DualGrid(rank, std::max<std::size_t>(n, 1));
}

double DualGrid::covering_radius() const noexcept {
  return step() * std::sqrt(static_cast<double>(rank_)) / 2.0;
}

DualPoint DualGrid::point(std::size_t flat_index) const {
  DualPoint pt{std::vector<double>(rank_)};
  for (std::size_t j = rank_; j-- > 0;) {
    pt.angles[j] = static_cast<double>(flat_index % per_axis_) * step();
    flat_index /= per_axis_;
  }
  return pt;
}

std::vector<Complex> DualGrid::evaluate(const TrigPolynomial& p) const {
  if (p.rank() != rank_) throw DimensionError("dual grid rank does not match the symbol");
  std::vector<Complex> out(size_, Complex(0.0, 0.0));
  if (p.is_zero()) return out;

  // Per-axis character tables: e^{i m theta_t} = w^{m t} with w the n-th root
  // of unity, indexed by (m t) mod n so every value is an exact root.
  const auto n = static_cast<std::int64_t>(per_axis_);
  std::vector<Complex> roots(per_axis_);
  for (std::size_t t = 0; t < per_axis_; ++t) roots[t] = std::polar(1.0, static_cast<double>(t) * step());

  struct Term {
    Complex c;
    std::vector<std::int64_t> m;  // exponents reduced mod n
  };
  std::vector<Term> terms;
  terms.reserve(p.support_size());
  for (const auto& [xi, c] : p.coeffs()) {
    Term t{c, std::vector<std::int64_t>(rank_)};
    for (std::size_t j = 0; j < rank_; ++j) t.m[j] = ((xi[j] % n) + n) % n;
    terms.push_back(std::move(t));
  }

  std::vector<std::int64_t> idx(rank_, 0);
  for (std::size_t flat = 0; flat < size_; ++flat) {
    Complex s(0.0, 0.0);
    for (const auto& t : terms) {
      std::int64_t e = 0;
      for (std::size_t j = 0; j < rank_; ++j) e += t.m[j] * idx[j];
      s += t.c * roots[static_cast<std::size_t>(e % n)];
    }
    out[flat] = s;
    for (std::size_t j = rank_; j-- > 0;) {
      if (++idx[j] < n) break;
      idx[j] = 0;
    }
  }
  return out;
}

MinModulus certified_min_modulus(const TrigPolynomial& p, double h) {
  const DualGrid grid = DualGrid::with_step(p.rank(), h);
  const auto values = grid.evaluate(p);
  std::size_t best = 0;
  double best_mod = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double m = std::abs(values[i]);
    if (m < best_mod) {
      best_mod = m;
      best = i;
    }
  }
  MinModulus out;
  out.grid_min = best_mod;
  out.argmin = grid.point(best);
  out.step = grid.step();
  out.lower = std::max(0.0, best_mod - p.lipschitz_bound() * grid.covering_radius());
  return out;
}

SupNorm certified_sup_norm(const TrigPolynomial& p, double h) {
  const DualGrid grid = DualGrid::with_step(p.rank(), h);
  const auto values = grid.evaluate(p);
  double mx = 0.0;
  for (const auto& v : values) mx = std::max(mx, std::abs(v));
  return SupNorm{mx, mx + p.lipschitz_bound() * grid.covering_radius()};
}

MinModulus refine_min_modulus(const TrigPolynomial& p, std::size_t max_points) {
  std::size_t per_axis = 64;
  MinModulus last;
  for (;;) {
    std::size_t pts = 1;
    bool fits = true;
    for (std::size_t j = 0; j < p.rank(); ++j) {
      if (pts > max_points / per_axis) {
        fits = false;
        break;
      }
      pts *= per_axis;
    }
    if (!fits) break;
    last = certified_min_modulus(p, 2.0 * std::numbers::pi / static_cast<double>(per_axis));
    if (last.lower > 0.0 || last.grid_min == 0.0) return last;
    per_axis *= 2;
  }
  if (last.step == 0.0) last = certified_min_modulus(p, 2.0 * std::numbers::pi / 8.0);
  return last;
}

}  // namespace wh
