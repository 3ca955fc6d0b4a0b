// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WH_Z_ORACLE_HPP
#define WH_Z_ORACLE_HPP

// Ground truth on X = Z, computed from polynomial roots rather than from
// sampled symbol values. The classical facts relied on here (Coburn's
// kernel/cokernel dichotomy, Kronecker's finite-rank Hankel theorem and
// Nehari's distance formula) are oracle assumptions; see docs/oracle.md.

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "wh/symbol.hpp"
#include "wh/wiener_hopf.hpp"

namespace wh::z {

/// Roots with ||z| - 1| at most this are classified as on the circle.
inline constexpr double kOnCircleTol = 1e-6;

/// Maximum degree span accepted by the root finder.
inline constexpr std::int64_t kMaxDegreeSpan = 64;

/// sum_{n = n_min}^{n_max} c_n z^n with nonzero end coefficients (the zero
/// polynomial has no coefficients).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  /// coeffs[i] multiplies z^{n_min + i}; exact zeros at either end are trimmed.
  LaurentPolynomial(std::int64_t n_min, std::vector<Complex> coeffs);

  static LaurentPolynomial from_trig(const TrigPolynomial& p);
  /// lead * z^shift * prod (z - r).
  static LaurentPolynomial from_roots(Complex lead, std::int64_t shift, const std::vector<Complex>& roots);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t n_min() const noexcept { return n_min_; }
  std::int64_t n_max() const noexcept { return n_min_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex coeff(std::int64_t n) const;

  Complex eval(Complex z) const;
  Complex eval_angle(double theta) const;

  TrigPolynomial to_trig() const;
  /// Pointwise conjugate on the unit circle: c_n -> conj(c_{-n}).
  LaurentPolynomial conjugate() const;
  LaurentPolynomial operator-(Complex lambda) const;
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::int64_t n_min_ = 0;
  std::vector<Complex> coeffs_;
};

enum class RootClass { Inside, On, Outside };

const char* to_string(RootClass c) noexcept;

struct Root {
  Complex z;
  RootClass cls;
};

struct LaurentRoots {
  std::vector<Root> roots;  ///< roots of z^{-n_min} p(z), an ordinary polynomial
  std::int64_t pole_order = 0;  ///< order of the pole of p at 0 (max(0, -n_min))
};

/// Roots of the ordinary polynomial z^{-n_min} p(z) by Aberth iteration
/// from deterministic starting points. Throws RootFindingError if the
/// relative residual does not drop below 1e-12 within 500 sweeps and
/// PreconditionError if the degree span exceeds kMaxDegreeSpan.
LaurentRoots laurent_roots(const LaurentPolynomial& p);

/// Roots of an ordinary polynomial a_0 + a_1 z + ... + a_n z^n, a_n != 0.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& a);

struct OnCircle {
  Complex root;
};

using ExactWinding = std::variant<std::int64_t, OnCircle>;

/// (# roots strictly inside) + n_min, unless some root is on the circle.
ExactWinding exact_winding(const LaurentPolynomial& p);

/// p(z) = constant * z^w * plus(z) * minus(1/z), where plus and minus are
/// ordinary polynomials with constant term 1; plus has its roots outside
/// the closed disc, and minus(1/z) = prod (1 - a/z) over the inside roots a.
struct FactorizationResult {
  std::int64_t w = 0;
  Complex constant{1.0, 0.0};
  std::vector<Complex> plus_factor;   ///< coefficients of z^0, z^1, ...
  std::vector<Complex> minus_factor;  ///< coefficients of z^0, z^-1, ...
  std::vector<Root> roots;

  Complex eval(Complex z) const;
};

/// Throws NotFactorizableError if a root lies on the circle and
/// NumericalInconsistency if the product fails to reproduce p to 1e-8 at 64
/// circle points.
FactorizationResult factorize(const LaurentPolynomial& p);

struct KernelData {
  std::int64_t dim_ker = 0;
  std::int64_t dim_coker = 0;
  std::vector<PositiveVector> kernel_basis;  ///< orthonormal
};

/// Kernel and cokernel dimensions of W_p on l_2(Z_+). For w < 0 the kernel
/// is spanned by the Taylor coefficients of z^j / plus(z), j < -w, cut where
/// the geometric tail drops below 1e-12, then orthonormalized. Each emitted
/// vector v satisfies |W_p v| <= 1e-8 |v| or NumericalInconsistency is
/// thrown.
KernelData kernel_cokernel(const LaurentPolynomial& p);

/// num / den on the unit circle, den free of roots near the circle. Fourier
/// coefficients come from a partial-fraction expansion in closed form.
class RationalSymbol {
 public:
  /// Throws ConditioningError if den has a root within 1e-8 of the circle
  /// or two of its roots (poles) nearly coincide.
  RationalSymbol(LaurentPolynomial num, LaurentPolynomial den);

  const LaurentPolynomial& numerator() const noexcept { return num_; }
  const LaurentPolynomial& denominator() const noexcept { return den_; }

  Complex eval(Complex z) const;
  Complex eval_angle(double theta) const;

  /// Fourier coefficient of the symbol at n.
  Complex fourier_coeff(std::int64_t n) const;

  /// Upper bound for sum_{t >= m} (t + 1) |coeff(-1 - t)|^2, the squared
  /// Frobenius mass a Hankel block of size m discards.
  double hankel_tail_bound(std::size_t m) const;

  /// Smallest Hankel block size with 2 sqrt(hankel_tail_bound) < tol.
  std::size_t hankel_size_for(double tol = 1e-10) const;

  /// Laurent polynomial of the coefficients on [lo, hi].
  LaurentPolynomial truncate(std::int64_t lo, std::int64_t hi) const;
  /// Sum of |coeff(n)| over n outside [lo, hi] (bound).
  double truncation_error(std::int64_t lo, std::int64_t hi) const;

  RationalSymbol conjugate() const;

  /// Winding number about 0 along the circle.
  std::int64_t winding() const;

 private:
  struct Pole {
    Complex p;
    Complex residue;
  };

  double coeff_bound(std::int64_t n) const;
  double side_mass(std::int64_t from, int dir) const;

  LaurentPolynomial num_;
  LaurentPolynomial den_;
  std::int64_t shift_ = 0;          // symbol = z^shift * (poly + sum res/(z - p))
  std::vector<Complex> poly_part_;  // coefficients of z^0, z^1, ...
  std::vector<Pole> poles_;
};

/// prod (z - a) / (1 - conj(a) z). Throws ConditioningError if some
/// |a| > 1 - 1e-6 and NumericalInconsistency if the product is not
/// unimodular to 1e-10 at 256 circle samples.
RationalSymbol blaschke(const std::vector<Complex>& zeros);

/// H(i, j) = coefficient at -(i + 1) - j for i, j < m.
Eigen::MatrixXcd hankel_block(const LaurentPolynomial& s, std::size_t m);
/// m = 0 selects the block size from the tail bound.
Eigen::MatrixXcd hankel_block(const RationalSymbol& s, std::size_t m = 0);

/// Largest singular value of the (full or tail-bounded) Hankel block.
double nehari_distance(const LaurentPolynomial& s);
double nehari_distance(const RationalSymbol& s);

enum class Invertibility { Invertible, LeftOnly, RightOnly, Neither };

const char* to_string(Invertibility v) noexcept;

struct UnimodularVerdict {
  Invertibility verdict;
  double distance;            ///< dist(s, H^inf)
  double conjugate_distance;  ///< dist(conj s, H^inf)
  std::int64_t winding;
};

/// One-sided invertibility of W_s for |s| = 1 from Nehari distances,
/// cross-checked against the winding number.
///
/// A distance below 1 - 1e-6 counts as "< 1", one at or above 1 - 1e-9 as
/// "= 1"; anything between raises IndeterminateError. A disagreement with
/// the winding criterion raises NumericalInconsistency.
UnimodularVerdict unimodular_invertibility(const RationalSymbol& s);

struct SpectrumMembership {
  bool member;
  bool indeterminate;  ///< some root of p - lambda within 1e-9 of the circle
};

/// lambda in the H^inf spectrum of an analytic p, i.e. p - lambda has a
/// zero in the closed unit disc.
SpectrumMembership analytic_spectrum_membership(const LaurentPolynomial& p, Complex lambda);

}  // namespace wh::z

#endif  // WH_Z_ORACLE_HPP
