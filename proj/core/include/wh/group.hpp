// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WH_GROUP_HPP
#define WH_GROUP_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wh {

/// Largest supported group rank. Dual-torus grids scale like n^rank.
inline constexpr std::size_t kMaxRank = 4;

/// An element of X = Z^r, written additively by its exponent vector with
/// respect to fixed generators.
///
/// The defaulted comparison is the structural (coordinate-lexicographic)
/// order used for container keys. It is *not* the group order; use
/// OrderedGroup::compare for that.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> exponents) : exps_(std::move(exponents)) {}
  GroupElement(std::initializer_list<std::int64_t> exponents) : exps_(exponents) {}

  static GroupElement zero(std::size_t rank) { return GroupElement(std::vector<std::int64_t>(rank, 0)); }

  std::size_t rank() const noexcept { return exps_.size(); }
  const std::vector<std::int64_t>& exponents() const noexcept { return exps_; }
  std::int64_t operator[](std::size_t i) const { return exps_[i]; }
  bool is_zero() const noexcept;

  /// Largest absolute coordinate.
  std::int64_t max_abs() const noexcept;
  double euclidean_norm() const noexcept;

  GroupElement operator-() const;
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

  /// "(e0,e1,...)"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> exps_;
};

/// Exact rational num/den with den > 0, stored in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A real number a + b*sqrt(d) with rational a, b; d belongs to the
/// enclosing RealEmbedding.
struct QuadraticWeight {
  Rational a;
  Rational b;
  friend bool operator==(const QuadraticWeight&, const QuadraticWeight&) = default;
};

/// Lexicographic order, most significant coordinate first.
struct LexOrder {
  friend bool operator==(const LexOrder&, const LexOrder&) = default;
};

/// Order pulled back along v -> sum_i v_i w_i with weights in Q(sqrt d).
struct RealEmbeddingOrder {
  std::int64_t d = 2;
  std::vector<QuadraticWeight> weights;
  friend bool operator==(const RealEmbeddingOrder&, const RealEmbeddingOrder&) = default;
};

using OrderBackend = std::variant<LexOrder, RealEmbeddingOrder>;

/// Signed cardinality that may be infinite (rotation index, interval sizes).
class IndexValue {
 public:
  static IndexValue finite(std::int64_t n) { return IndexValue(n); }
  static IndexValue infinite() { return IndexValue(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Precondition: is_finite().
  std::int64_t value() const { return value_.value(); }

  friend bool operator==(const IndexValue&, const IndexValue&) = default;
  std::string to_string() const;

 private:
  IndexValue() = default;
  explicit IndexValue(std::int64_t n) : value_(n) {}
  std::optional<std::int64_t> value_;
};

/// A finitely generated torsion-free abelian group Z^r with a fixed linear
/// order. Immutable after construction.
class OrderedGroup {
 public:
  /// Lexicographic order on Z^rank.
  static OrderedGroup lex(std::size_t rank);

  /// Real-embedding order with weights a_i + b_i sqrt(d). `d` must be a
  /// square-free integer >= 2 and rank = weights.size() must be 1 or 2; for
  /// rank 2 the weights are checked to be linearly independent over Q.
  static OrderedGroup real_embedding(std::int64_t d, std::vector<QuadraticWeight> weights);

  /// Rank-1 group with its standard order (the integers).
  static OrderedGroup integers() { return lex(1); }

  std::size_t rank() const noexcept { return rank_; }
  const OrderBackend& backend() const noexcept { return backend_; }
  bool is_lex() const noexcept { return std::holds_alternative<LexOrder>(backend_); }

  /// Group order. Throws DimensionError on rank mismatch.
  std::strong_ordering compare(const GroupElement& a, const GroupElement& b) const;

  /// Sign of an element relative to the identity.
  std::strong_ordering sign(const GroupElement& a) const;

  /// Membership in the positive cone X_+ (identity included).
  bool is_positive(const GroupElement& a) const;

  /// #[0, chi) for chi in X_+, certified per backend. Throws
  /// PreconditionError if chi is not positive.
  IndexValue interval_count(const GroupElement& chi) const;

  /// Signed extension of interval_count to all of X.
  IndexValue rotation_index(const GroupElement& chi) const;

  /// The elements of [0, chi) in increasing order. Throws CapacityError if
  /// the interval is infinite or larger than `cap`.
  std::vector<GroupElement> enumerate_interval(const GroupElement& chi, std::size_t cap) const;

  /// The n smallest elements of X_+; rank 1 only.
  std::vector<GroupElement> positive_prefix(std::size_t n) const;

  void check_rank(const GroupElement& a) const;

  friend bool operator==(const OrderedGroup&, const OrderedGroup&) = default;

 private:
  OrderedGroup(std::size_t rank, OrderBackend backend) : rank_(rank), backend_(std::move(backend)) {}

  std::size_t rank_ = 1;
  OrderBackend backend_;
};

/// Exact sign of p + q*sqrt(d) for rationals p, q and d >= 1.
int quadratic_sign(const Rational& p, const Rational& q, std::int64_t d);

}  // namespace wh

#endif  // WH_GROUP_HPP
