// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include "wh/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "wh/error.hpp"

namespace wh {

namespace {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

BigRational to_big(const Rational& r) { return BigRational(BigInt(r.num), BigInt(r.den)); }

int big_sign(const BigRational& x) { return x.sign(); }

// sign(p + q sqrt d), d >= 1.
int exact_quadratic_sign(const BigRational& p, const BigRational& q, std::int64_t d) {
  const int sp = big_sign(p);
  const int sq = big_sign(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: |p| vs |q| sqrt d decides, i.e. sign(p^2 - d q^2).
  const BigRational diff = p * p - BigRational(d) * q * q;
  return sp * big_sign(diff);
}

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool is_square_free(std::int64_t d) {
  for (std::int64_t f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

// Interval [0, chi) is finite exactly when every element below chi is
// reachable by finitely many unit steps of the least significant coordinate.
IndexValue lex_interval_count(const GroupElement& chi) {
  for (std::size_t i = 0; i + 1 < chi.rank(); ++i) {
    if (chi[i] != 0) return IndexValue::infinite();
  }
  return IndexValue::finite(chi[chi.rank() - 1]);
}

}  // namespace

bool GroupElement::is_zero() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

std::int64_t GroupElement::max_abs() const noexcept {
  std::int64_t m = 0;
  for (auto e : exps_) m = std::max(m, std::abs(e));
  return m;
}

double GroupElement::euclidean_norm() const noexcept {
  double s = 0.0;
  for (auto e : exps_) s += static_cast<double>(e) * static_cast<double>(e);
  return std::sqrt(s);
}

GroupElement GroupElement::operator-() const {
  std::vector<std::int64_t> out(exps_.size());
  std::transform(exps_.begin(), exps_.end(), out.begin(), [](std::int64_t e) { return -e; });
  return GroupElement(std::move(out));
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank()) throw DimensionError("group element rank mismatch");
  std::vector<std::int64_t> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = a[i] + b[i];
  return GroupElement(std::move(out));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << ',';
    os << exps_[i];
  }
  os << ')';
  return os.str();
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw PreconditionError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

std::string IndexValue::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("Infinite");
}

int quadratic_sign(const Rational& p, const Rational& q, std::int64_t d) {
  if (d < 1) throw PreconditionError("quadratic_sign requires d >= 1");
  return exact_quadratic_sign(to_big(p), to_big(q), d);
}

OrderedGroup OrderedGroup::lex(std::size_t rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw PreconditionError("group rank must be in [1, " + std::to_string(kMaxRank) + "]");
  }
  return OrderedGroup(rank, LexOrder{});
}

OrderedGroup OrderedGroup::real_embedding(std::int64_t d, std::vector<QuadraticWeight> weights) {
  if (weights.empty() || weights.size() > kMaxRank) {
    throw PreconditionError("group rank must be in [1, " + std::to_string(kMaxRank) + "]");
  }
  if (d < 2 || !is_square_free(d)) {
    throw PreconditionError("embedding radicand d must be a square-free integer >= 2");
  }
  // Q(sqrt d) is two-dimensional over Q, so three or more weights are always
  // Q-dependent and the pulled-back order would not be antisymmetric.
  if (weights.size() > 2) {
    throw PreconditionError("real-embedding order in Q(sqrt d) supports rank <= 2");
  }
  for (const auto& w : weights) {
    if (w.a.num == 0 && w.b.num == 0) throw PreconditionError("embedding weight must be nonzero");
  }
  if (weights.size() == 2) {
    // w2/w1 rational  <=>  (a2, b2) parallel to (a1, b1)  <=>  a2 b1 - a1 b2 = 0.
    const auto& w1 = weights[0];
    const auto& w2 = weights[1];
    const BigRational det = to_big(w2.a) * to_big(w1.b) - to_big(w1.a) * to_big(w2.b);
    if (det == 0) throw PreconditionError("embedding weights are linearly dependent over Q");
  }
  const std::size_t rank = weights.size();
  return OrderedGroup(rank, RealEmbeddingOrder{d, std::move(weights)});
}

void OrderedGroup::check_rank(const GroupElement& a) const {
  if (a.rank() != rank_) {
    throw DimensionError("element " + a.to_string() + " has rank " + std::to_string(a.rank()) +
                         ", group has rank " + std::to_string(rank_));
  }
}

std::strong_ordering OrderedGroup::sign(const GroupElement& a) const {
  check_rank(a);
  if (const auto* emb = std::get_if<RealEmbeddingOrder>(&backend_)) {
    BigRational p = 0;
    BigRational q = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
      p += BigRational(a[i]) * to_big(emb->weights[i].a);
      q += BigRational(a[i]) * to_big(emb->weights[i].b);
    }
    return from_sign(exact_quadratic_sign(p, q, emb->d));
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] != 0) return from_sign(a[i] < 0 ? -1 : 1);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering OrderedGroup::compare(const GroupElement& a, const GroupElement& b) const {
  check_rank(a);
  check_rank(b);
  if (is_lex()) return a.exponents() <=> b.exponents();
  return sign(a - b);
}

bool OrderedGroup::is_positive(const GroupElement& a) const { return sign(a) != std::strong_ordering::less; }

// For chi in X_+ the set X_+ \ (chi + X_+) equals {xi : 0 <= xi < chi}:
// xi >= 0 lies in chi + X_+ iff xi - chi >= 0, and by totality its negation
// is xi < chi.
IndexValue OrderedGroup::interval_count(const GroupElement& chi) const {
  if (!is_positive(chi)) throw PreconditionError("interval_count requires chi in X_+, got " + chi.to_string());
  if (rank_ == 1) return IndexValue::finite(std::abs(chi[0]));
  if (is_lex()) return lex_interval_count(chi);
  // Rank >= 2 with Q-independent weights: the image subgroup is dense in R,
  // so every nonempty interval contains infinitely many elements.
  return chi.is_zero() ? IndexValue::finite(0) : IndexValue::infinite();
}

IndexValue OrderedGroup::rotation_index(const GroupElement& chi) const {
  if (is_positive(chi)) return interval_count(chi);
  const IndexValue n = interval_count(-chi);
  return n.is_finite() ? IndexValue::finite(-n.value()) : n;
}

std::vector<GroupElement> OrderedGroup::enumerate_interval(const GroupElement& chi, std::size_t cap) const {
  const IndexValue n = interval_count(chi);
  if (!n.is_finite()) throw CapacityError("interval [0," + chi.to_string() + ") is infinite");
  const auto count = static_cast<std::size_t>(n.value());
  if (count > cap) {
    throw CapacityError("interval [0," + chi.to_string() + ") has " + std::to_string(count) +
                        " elements, cap is " + std::to_string(cap));
  }
  std::vector<GroupElement> out;
  out.reserve(count);
  if (count == 0) return out;
  // A finite nonempty interval lies on the least significant axis (lex) or
  // on the single axis (rank 1); step toward chi one unit at a time.
  const std::int64_t step = chi[rank_ - 1] < 0 ? -1 : 1;
  for (std::size_t j = 0; j < count; ++j) {
    std::vector<std::int64_t> e(rank_, 0);
    e[rank_ - 1] = step * static_cast<std::int64_t>(j);
    out.emplace_back(std::move(e));
  }
  return out;
}

std::vector<GroupElement> OrderedGroup::positive_prefix(std::size_t n) const {
  if (rank_ != 1) {
    throw UnsupportedWindowError("positive_prefix is defined for rank 1 only; use a box window for rank " +
                                 std::to_string(rank_));
  }
  // Rank 1: X_+ is {0, s, 2s, ...} where s is the positive generator.
  const std::int64_t s = is_positive(GroupElement{1}) ? 1 : -1;
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.push_back(GroupElement{s * static_cast<std::int64_t>(j)});
  return out;
}

}  // namespace wh
