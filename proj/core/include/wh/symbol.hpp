// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WH_SYMBOL_HPP
#define WH_SYMBOL_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

#include "wh/group.hpp"

namespace wh {

using Complex = std::complex<double>;

/// Coefficients below this magnitude are dropped after arithmetic.
inline constexpr double kPruneThreshold = 1e-14;

/// Default dual-grid step per axis.
inline constexpr double kDefaultGridStep = 2.0 * std::numbers::pi / 512.0;

/// Upper bound on the number of points of any dual-torus grid.
inline constexpr std::size_t kMaxGridPoints = std::size_t{1} << 22;

/// A point of the dual torus T^r, given by r angles in [0, 2pi).
struct DualPoint {
  std::vector<double> angles;
  std::size_t rank() const noexcept { return angles.size(); }
};

/// A finitely supported function k on X, read simultaneously as the kernel
/// of W_k and as its symbol theta -> sum_xi k(xi) e^{i xi.theta} on T^r.
class TrigPolynomial {
 public:
  using CoeffMap = std::map<GroupElement, Complex>;

  explicit TrigPolynomial(OrderedGroup group) : group_(std::move(group)) {}
  /// Exact zeros are dropped; ranks are checked.
  TrigPolynomial(OrderedGroup group, CoeffMap coeffs);

  /// c * delta_xi.
  static TrigPolynomial monomial(OrderedGroup group, GroupElement xi, Complex c = 1.0);
  static TrigPolynomial constant(OrderedGroup group, Complex c);

  const OrderedGroup& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return group_.rank(); }
  const CoeffMap& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t support_size() const noexcept { return coeffs_.size(); }

  /// k(xi), zero off the support.
  Complex coeff(const GroupElement& xi) const;

  Complex eval(const DualPoint& theta) const;

  /// Largest |coordinate| over the support.
  std::int64_t bandwidth() const noexcept;
  /// sum |c_xi|.
  double l1_norm() const noexcept;
  /// sum |c_xi| * |xi|_2, a Lipschitz constant of the symbol on [0,2pi)^r.
  double lipschitz_bound() const noexcept;

  friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;

 private:
  OrderedGroup group_;
  CoeffMap coeffs_;
};

TrigPolynomial add(const TrigPolynomial& p, const TrigPolynomial& q);
TrigPolynomial sub(const TrigPolynomial& p, const TrigPolynomial& q);
TrigPolynomial mul(const TrigPolynomial& p, const TrigPolynomial& q);
TrigPolynomial scale(const TrigPolynomial& p, Complex lambda);
/// p - lambda * delta_0.
TrigPolynomial sub_scalar(const TrigPolynomial& p, Complex lambda);
/// Pointwise complex conjugate of the symbol: c_xi -> conj(c_{-xi}).
TrigPolynomial conjugate(const TrigPolynomial& p);

/// Uniform grid on [0,2pi)^r with `per_axis` nodes per axis.
class DualGrid {
 public:
  DualGrid(std::size_t rank, std::size_t per_axis);
  /// Finest grid whose step does not exceed h. Throws PreconditionError if
  /// the point count exceeds kMaxGridPoints.
  static DualGrid with_step(std::size_t rank, double h);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t per_axis() const noexcept { return per_axis_; }
  std::size_t size() const noexcept { return size_; }
  double step() const noexcept { return 2.0 * std::numbers::pi / static_cast<double>(per_axis_); }
  /// Largest distance from any point of the torus to the nearest node.
  double covering_radius() const noexcept;
  DualPoint point(std::size_t flat_index) const;

  /// All symbol values at the nodes, flat index order (axis 0 slowest).
  std::vector<Complex> evaluate(const TrigPolynomial& p) const;

 private:
  std::size_t rank_;
  std::size_t per_axis_;
  std::size_t size_;
};

struct MinModulus {
  double lower = 0.0;     ///< certified lower bound of min |symbol|, clamped at 0
  double grid_min = 0.0;  ///< smallest sampled |symbol|
  DualPoint argmin;       ///< node attaining grid_min
  double step = 0.0;      ///< grid step actually used
};

struct SupNorm {
  double lower = 0.0;
  double upper = 0.0;
  double midpoint() const noexcept { return 0.5 * (lower + upper); }
};

/// Grid minimum of |symbol| minus L * h * sqrt(r) / 2, clamped at 0.
MinModulus certified_min_modulus(const TrigPolynomial& p, double h = kDefaultGridStep);

/// Brackets sup |symbol| between the grid maximum and that plus L h sqrt(r)/2.
SupNorm certified_sup_norm(const TrigPolynomial& p, double h = kDefaultGridStep);

/// Refines the grid from 64 nodes per axis, doubling until the certified
/// lower bound is positive or the point budget is exhausted. The result of
/// the last grid examined is returned.
MinModulus refine_min_modulus(const TrigPolynomial& p, std::size_t max_points = kMaxGridPoints);

}  // namespace wh

#endif  // WH_SYMBOL_HPP
