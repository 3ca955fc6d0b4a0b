// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include "wh/z_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wh/error.hpp"

namespace wh::z {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Convolution of coefficient lists (ascending powers).
std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Complex poly_eval(const std::vector<Complex>& a, Complex z) {
  Complex s(0.0, 0.0);
  for (std::size_t i = a.size(); i-- > 0;) s = s * z + a[i];
  return s;
}

Complex poly_deriv_eval(const std::vector<Complex>& a, Complex z) {
  Complex s(0.0, 0.0);
  for (std::size_t i = a.size(); i-- > 1;) s = s * z + static_cast<double>(i) * a[i];
  return s;
}

// Modified Gram-Schmidt over equal-length columns.
void orthonormalize(std::vector<std::vector<Complex>>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Complex dot(0.0, 0.0);
      for (std::size_t n = 0; n < vs[i].size(); ++n) dot += std::conj(vs[j][n]) * vs[i][n];
      for (std::size_t n = 0; n < vs[i].size(); ++n) vs[i][n] -= dot * vs[j][n];
    }
    double nrm = 0.0;
    for (const auto& c : vs[i]) nrm += std::norm(c);
    nrm = std::sqrt(nrm);
    if (!(nrm > 0.0)) throw NumericalInconsistency("kernel basis vectors are linearly dependent");
    for (auto& c : vs[i]) c /= nrm;
  }
}

double circle_max_modulus(const LaurentPolynomial& p) {
  double m = 0.0;
  for (int k = 0; k < 64; ++k) m = std::max(m, std::abs(p.eval_angle(kTwoPi * k / 64.0)));
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(std::int64_t n_min, std::vector<Complex> coeffs)
    : n_min_(n_min), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == Complex(0.0, 0.0)) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  n_min_ = coeffs_.empty() ? 0 : n_min_ + static_cast<std::int64_t>(lead);
}

LaurentPolynomial LaurentPolynomial::from_trig(const TrigPolynomial& p) {
  if (p.rank() != 1) throw DimensionError("Laurent polynomials live on rank-1 groups");
  if (p.is_zero()) return {};
  const std::int64_t lo = p.coeffs().begin()->first[0];
  const std::int64_t hi = p.coeffs().rbegin()->first[0];
  std::vector<Complex> c(static_cast<std::size_t>(hi - lo + 1), Complex(0.0, 0.0));
  for (const auto& [xi, v] : p.coeffs()) c[static_cast<std::size_t>(xi[0] - lo)] = v;
  return LaurentPolynomial(lo, std::move(c));
}

LaurentPolynomial LaurentPolynomial::from_roots(Complex lead, std::int64_t shift, const std::vector<Complex>& roots) {
  std::vector<Complex> c{lead};
  for (const auto& r : roots) c = poly_mul(c, {-r, Complex(1.0, 0.0)});
  return LaurentPolynomial(shift, std::move(c));
}

Complex LaurentPolynomial::coeff(std::int64_t n) const {
  if (coeffs_.empty() || n < n_min_ || n > n_max()) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(n - n_min_)];
}

Complex LaurentPolynomial::eval(Complex z) const {
  if (coeffs_.empty()) return {0.0, 0.0};
  return poly_eval(coeffs_, z) * std::pow(z, static_cast<double>(n_min_));
}

Complex LaurentPolynomial::eval_angle(double theta) const {
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    s += coeffs_[i] * std::polar(1.0, static_cast<double>(n_min_ + static_cast<std::int64_t>(i)) * theta);
  }
  return s;
}

TrigPolynomial LaurentPolynomial::to_trig() const {
  TrigPolynomial::CoeffMap m;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != Complex(0.0, 0.0)) m.emplace(GroupElement{n_min_ + static_cast<std::int64_t>(i)}, coeffs_[i]);
  }
  return TrigPolynomial(OrderedGroup::integers(), std::move(m));
}

LaurentPolynomial LaurentPolynomial::conjugate() const {
  if (coeffs_.empty()) return {};
  std::vector<Complex> c(coeffs_.rbegin(), coeffs_.rend());
  for (auto& v : c) v = std::conj(v);
  return LaurentPolynomial(-n_max(), std::move(c));
}

LaurentPolynomial LaurentPolynomial::operator-(Complex lambda) const {
  const std::int64_t lo = std::min<std::int64_t>(coeffs_.empty() ? 0 : n_min_, 0);
  const std::int64_t hi = std::max<std::int64_t>(coeffs_.empty() ? 0 : n_max(), 0);
  std::vector<Complex> c(static_cast<std::size_t>(hi - lo + 1), Complex(0.0, 0.0));
  for (std::int64_t n = lo; n <= hi; ++n) c[static_cast<std::size_t>(n - lo)] = coeff(n);
  c[static_cast<std::size_t>(-lo)] -= lambda;
  return LaurentPolynomial(lo, std::move(c));
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPolynomial(a.n_min() + b.n_min(), poly_mul(a.coeffs(), b.coeffs()));
}

const char* to_string(RootClass c) noexcept {
  switch (c) {
    case RootClass::Inside: return "inside";
    case RootClass::On: return "on";
    case RootClass::Outside: return "outside";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Winding and factorization

ExactWinding exact_winding(const LaurentPolynomial& p) {
  const auto lr = laurent_roots(p);
  std::int64_t inside = 0;
  for (const auto& r : lr.roots) {
    if (r.cls == RootClass::On) return OnCircle{r.z};
    if (r.cls == RootClass::Inside) ++inside;
  }
  return inside + p.n_min();
}

Complex FactorizationResult::eval(Complex z) const {
  Complex minus(0.0, 0.0);
  const Complex zi = 1.0 / z;
  for (std::size_t i = minus_factor.size(); i-- > 0;) minus = minus * zi + minus_factor[i];
  return constant * std::pow(z, static_cast<double>(w)) * poly_eval(plus_factor, z) * minus;
}

FactorizationResult factorize(const LaurentPolynomial& p) {
  if (p.is_zero()) throw NotFactorizableError("the zero symbol has no factorization");
  const auto lr = laurent_roots(p);
  FactorizationResult f;
  f.roots = lr.roots;
  f.plus_factor = {Complex(1.0, 0.0)};
  f.minus_factor = {Complex(1.0, 0.0)};
  // p = lead z^{n_min} prod (z - r): inside roots give z (1 - a/z), outside
  // roots give -b (1 - z/b).
  Complex c = p.coeffs().back();
  std::int64_t inside = 0;
  for (const auto& r : lr.roots) {
    switch (r.cls) {
      case RootClass::On:
        throw NotFactorizableError("root " + std::to_string(r.z.real()) + (r.z.imag() < 0 ? "" : "+") +
                                   std::to_string(r.z.imag()) + "i lies on the unit circle");
      case RootClass::Inside:
        ++inside;
        f.minus_factor = poly_mul(f.minus_factor, {Complex(1.0, 0.0), -r.z});
        break;
      case RootClass::Outside:
        c *= -r.z;
        f.plus_factor = poly_mul(f.plus_factor, {Complex(1.0, 0.0), -1.0 / r.z});
        break;
    }
  }
  f.w = p.n_min() + inside;
  f.constant = c;

  const double scale = std::max(circle_max_modulus(p), 1e-300);
  for (int k = 0; k < 64; ++k) {
    const double t = kTwoPi * (k + 0.5) / 64.0;
    const Complex z = std::polar(1.0, t);
    const double err = std::abs(f.eval(z) - p.eval_angle(t)) / scale;
    if (err > 1e-8) {
      throw NumericalInconsistency("factorization reconstruction error " + std::to_string(err) + " at theta=" +
                                   std::to_string(t));
    }
  }
  return f;
}

KernelData kernel_cokernel(const LaurentPolynomial& p) {
  const auto wind = exact_winding(p);
  if (std::holds_alternative<OnCircle>(wind)) {
    throw NotFactorizableError("symbol has a root on the unit circle; W_p is not Fredholm");
  }
  const std::int64_t w = std::get<std::int64_t>(wind);
  KernelData out;
  out.dim_ker = std::max<std::int64_t>(0, -w);
  out.dim_coker = std::max<std::int64_t>(0, w);
  if (w >= 0) return out;

  const auto f = factorize(p);
  // Taylor coefficients of 1/plus(z): plus(z) s(z) = 1. The recurrence has
  // characteristic roots 1/b with |b| > 1, so forward substitution is stable.
  double rho = 0.0;
  for (const auto& r : f.roots) {
    if (r.cls == RootClass::Outside) rho = std::max(rho, 1.0 / std::abs(r.z));
  }
  const std::size_t deg = f.plus_factor.size() - 1;
  // Coefficients behave like n^{deg-1} rho^n; run until that envelope and the
  // observed terms are both below 1e-12 relative, with some slack.
  std::size_t min_len = deg + 1;
  if (rho > 0.0) {
    const double need = std::log(1e-16) / std::log(rho);
    min_len = std::max(min_len, static_cast<std::size_t>(need * (1.0 + 0.1 * static_cast<double>(deg))) + deg + 8);
  }
  constexpr std::size_t kMaxLen = 200000;
  if (min_len > kMaxLen) throw NumericalInconsistency("kernel series decays too slowly to truncate");
  std::vector<Complex> s{Complex(1.0, 0.0)};
  double peak = 1.0;
  std::size_t quiet = 0;
  for (std::size_t n = 1; n < kMaxLen; ++n) {
    Complex v(0.0, 0.0);
    for (std::size_t i = 1; i <= std::min(n, deg); ++i) v -= f.plus_factor[i] * s[n - i];
    s.push_back(v);
    peak = std::max(peak, std::abs(v));
    quiet = std::abs(v) < 1e-13 * peak ? quiet + 1 : 0;
    if (n >= min_len && quiet > deg + 4) break;
  }

  const auto dim = static_cast<std::size_t>(-w);
  const std::size_t len = s.size() + dim;
  std::vector<std::vector<Complex>> basis(dim, std::vector<Complex>(len, Complex(0.0, 0.0)));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t n = 0; n < s.size(); ++n) basis[j][n + j] = s[n];
  }
  orthonormalize(basis);

  const TrigPolynomial k = p.to_trig();
  const OrderedGroup z = OrderedGroup::integers();
  for (const auto& b : basis) {
    PositiveVector::EntryMap m;
    for (std::size_t n = 0; n < b.size(); ++n) {
      if (b[n] != Complex(0.0, 0.0)) m.emplace(GroupElement{static_cast<std::int64_t>(n)}, b[n]);
    }
    PositiveVector v(z, std::move(m));
    const double res = apply(k, v).norm();
    if (res > 1e-8 * v.norm()) {
      throw NumericalInconsistency("kernel vector residual " + std::to_string(res) + " exceeds 1e-8");
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rational symbols

RationalSymbol::RationalSymbol(LaurentPolynomial num, LaurentPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("rational symbol with zero denominator");
  if (num_.is_zero()) {
    shift_ = 0;
    return;
  }
  shift_ = num_.n_min() - den_.n_min();
  const auto& n_poly = num_.coeffs();  // N(z), N(0) != 0
  const auto& d_poly = den_.coeffs();  // D(z), D(0) != 0

  // N = Q D + R; only Q is kept, the residues come from N at the poles.
  std::vector<Complex> rem(n_poly);
  const auto dd = static_cast<std::ptrdiff_t>(d_poly.size()) - 1;
  const auto top = static_cast<std::ptrdiff_t>(rem.size()) - 1;
  if (top >= dd) {
    poly_part_.assign(static_cast<std::size_t>(top - dd + 1), Complex(0.0, 0.0));
    for (std::ptrdiff_t i = top; i >= dd; --i) {
      const Complex q = rem[static_cast<std::size_t>(i)] / d_poly[static_cast<std::size_t>(dd)];
      poly_part_[static_cast<std::size_t>(i - dd)] = q;
      for (std::ptrdiff_t j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * d_poly[static_cast<std::size_t>(j)];
    }
  }

  const auto poles = polynomial_roots(d_poly);
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (std::abs(std::abs(poles[i]) - 1.0) <= 1e-8) {
      throw ConditioningError("denominator root within 1e-8 of the unit circle");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(poles[i] - poles[j]) < 1e-6) throw ConditioningError("denominator has a repeated root");
    }
  }
  for (const auto& pl : poles) poles_.push_back(Pole{pl, poly_eval(n_poly, pl) / poly_deriv_eval(d_poly, pl)});
}

Complex RationalSymbol::eval(Complex z) const { return num_.eval(z) / den_.eval(z); }

Complex RationalSymbol::eval_angle(double theta) const { return num_.eval_angle(theta) / den_.eval_angle(theta); }

// f = Q + sum res / (z - p) with
//   1/(z - p) = sum_{m >= 1} p^{m-1} z^{-m}        (|p| < 1)
//   1/(z - p) = -sum_{m >= 0} z^m / p^{m+1}        (|p| > 1)
Complex RationalSymbol::fourier_coeff(std::int64_t n) const {
  const std::int64_t m = n - shift_;
  Complex c(0.0, 0.0);
  if (m >= 0 && m < static_cast<std::int64_t>(poly_part_.size())) c += poly_part_[static_cast<std::size_t>(m)];
  for (const auto& pl : poles_) {
    const bool inside = std::abs(pl.p) < 1.0;
    if (inside && m <= -1) {
      c += pl.residue * std::pow(pl.p, static_cast<double>(-m - 1));
    } else if (!inside && m >= 0) {
      c -= pl.residue * std::pow(pl.p, static_cast<double>(-m - 1));
    }
  }
  return c;
}

double RationalSymbol::hankel_tail_bound(std::size_t m) const {
  // Terms t >= m use coefficients at n = -1 - t; sum numerically until the
  // geometric envelopes are negligible.
  double total = 0.0;
  double rho = 0.0;
  for (const auto& pl : poles_) {
    if (std::abs(pl.p) < 1.0) rho = std::max(rho, std::abs(pl.p));
  }
  const std::size_t reach = static_cast<std::size_t>(std::abs(shift_)) + poly_part_.size() + 2;
  for (std::size_t t = m;; ++t) {
    const double c = std::abs(fourier_coeff(-1 - static_cast<std::int64_t>(t)));
    const double term = static_cast<double>(t + 1) * c * c;
    total += term;
    if (t > m + reach) {
      // Remaining mass from inside poles is at most
      // sum_{u > t} (u+1) (A rho^{u-t})^2 with A bounding |coeff| now.
      double amp = 0.0;
      for (const auto& pl : poles_) {
        const double a = std::abs(pl.p);
        if (a < 1.0) amp += std::abs(pl.residue) * std::pow(a, static_cast<double>(static_cast<std::int64_t>(t) + shift_));
      }
      const double r2 = rho * rho;
      const double tail = amp * amp * r2 * (static_cast<double>(t + 2) / (1.0 - r2) + r2 / ((1.0 - r2) * (1.0 - r2)));
      if (tail < 1e-40 || t > m + 2000000) return total + tail;
    }
  }
}

std::size_t RationalSymbol::hankel_size_for(double tol) const {
  std::size_t lo = 0;
  if (2.0 * std::sqrt(hankel_tail_bound(0)) < tol) return 0;
  std::size_t hi = 1;
  while (!(2.0 * std::sqrt(hankel_tail_bound(hi)) < tol)) {
    lo = hi;
    hi *= 2;
    if (hi > (std::size_t{1} << 14)) throw ConditioningError("Hankel block would exceed 16384 rows");
  }
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (2.0 * std::sqrt(hankel_tail_bound(mid)) < tol) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

LaurentPolynomial RationalSymbol::truncate(std::int64_t lo, std::int64_t hi) const {
  if (hi < lo) return {};
  std::vector<Complex> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) c[static_cast<std::size_t>(n - lo)] = fourier_coeff(n);
  return LaurentPolynomial(lo, std::move(c));
}

double RationalSymbol::coeff_bound(std::int64_t n) const {
  const std::int64_t m = n - shift_;
  double b = 0.0;
  if (m >= 0 && m < static_cast<std::int64_t>(poly_part_.size())) b += std::abs(poly_part_[static_cast<std::size_t>(m)]);
  for (const auto& pl : poles_) {
    const double a = std::abs(pl.p);
    if ((a < 1.0 && m <= -1) || (a > 1.0 && m >= 0)) b += std::abs(pl.residue) * std::pow(a, static_cast<double>(-m - 1));
  }
  return b;
}

// Sum of coeff_bound over indices n >= from (dir = +1) or n <= from (dir = -1).
double RationalSymbol::side_mass(std::int64_t from, int dir) const {
  const std::int64_t poly_end = shift_ + static_cast<std::int64_t>(poly_part_.size());
  double total = 0.0;
  for (std::int64_t n = from;; n += dir) {
    total += coeff_bound(n);
    const std::int64_t next_m = n + dir - shift_;
    // Past the polynomial part only one family of poles contributes, and
    // its remaining mass is geometric.
    const bool settled = dir > 0 ? (n + dir >= poly_end && next_m >= 0) : (next_m <= -1 && n + dir < shift_);
    if (!settled) continue;
    double rest = 0.0;
    for (const auto& pl : poles_) {
      const double a = std::abs(pl.p);
      const double r = std::abs(pl.residue);
      if (dir > 0 && a > 1.0) rest += r * std::pow(a, static_cast<double>(-next_m - 1)) / (1.0 - 1.0 / a);
      if (dir < 0 && a < 1.0) rest += r * std::pow(a, static_cast<double>(-next_m - 1)) / (1.0 - a);
    }
    if (rest < 1e-18 || std::abs(n - from) > 10000000) return total + rest;
  }
}

double RationalSymbol::truncation_error(std::int64_t lo, std::int64_t hi) const {
  return side_mass(hi + 1, +1) + side_mass(lo - 1, -1);
}

RationalSymbol RationalSymbol::conjugate() const { return RationalSymbol(num_.conjugate(), den_.conjugate()); }

std::int64_t RationalSymbol::winding() const {
  const auto wn = exact_winding(num_);
  const auto wd = exact_winding(den_);
  if (std::holds_alternative<OnCircle>(wn)) throw NotFactorizableError("numerator has a root on the unit circle");
  if (std::holds_alternative<OnCircle>(wd)) throw ConditioningError("denominator has a root on the unit circle");
  return std::get<std::int64_t>(wn) - std::get<std::int64_t>(wd);
}

RationalSymbol blaschke(const std::vector<Complex>& zeros) {
  std::vector<Complex> num{Complex(1.0, 0.0)};
  std::vector<Complex> den{Complex(1.0, 0.0)};
  for (const auto& a : zeros) {
    if (std::abs(a) > 1.0 - 1e-6) throw ConditioningError("Blaschke zero too close to the unit circle");
    num = poly_mul(num, {-a, Complex(1.0, 0.0)});
    den = poly_mul(den, {Complex(1.0, 0.0), -std::conj(a)});
  }
  RationalSymbol s(LaurentPolynomial(0, num), LaurentPolynomial(0, den));
  for (int k = 0; k < 256; ++k) {
    const double dev = std::abs(std::abs(s.eval_angle(kTwoPi * k / 256.0)) - 1.0);
    if (!(dev < 1e-10)) throw NumericalInconsistency("Blaschke product deviates from unimodularity by " + std::to_string(dev));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Hankel and Nehari

Eigen::MatrixXcd hankel_block(const LaurentPolynomial& s, std::size_t m) {
  const auto n = static_cast<Eigen::Index>(m);
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) h(i, j) = s.coeff(-(i + 1) - j);
  }
  return h;
}

Eigen::MatrixXcd hankel_block(const RationalSymbol& s, std::size_t m) {
  if (m == 0) m = s.hankel_size_for();
  const auto n = static_cast<Eigen::Index>(m);
  std::vector<Complex> c(2 * m + 1);
  for (std::size_t t = 0; t < c.size(); ++t) c[t] = s.fourier_coeff(-1 - static_cast<std::int64_t>(t));
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) h(i, j) = c[static_cast<std::size_t>(i + j)];
  }
  return h;
}

double nehari_distance(const LaurentPolynomial& s) {
  const auto m = static_cast<std::size_t>(std::max<std::int64_t>(0, -s.n_min()));
  return s.is_zero() ? 0.0 : linalg::largest_singular_value(hankel_block(s, m));
}

double nehari_distance(const RationalSymbol& s) { return linalg::largest_singular_value(hankel_block(s)); }

const char* to_string(Invertibility v) noexcept {
  switch (v) {
    case Invertibility::Invertible: return "Invertible";
    case Invertibility::LeftOnly: return "LeftOnly";
    case Invertibility::RightOnly: return "RightOnly";
    case Invertibility::Neither: return "Neither";
  }
  return "?";
}

UnimodularVerdict unimodular_invertibility(const RationalSymbol& s) {
  for (int k = 0; k < 256; ++k) {
    const double dev = std::abs(std::abs(s.eval_angle(kTwoPi * k / 256.0)) - 1.0);
    if (!(dev < 1e-10)) throw PreconditionError("symbol is not unimodular (deviation " + std::to_string(dev) + ")");
  }
  UnimodularVerdict v{};
  v.distance = nehari_distance(s);
  v.conjugate_distance = nehari_distance(s.conjugate());
  v.winding = s.winding();

  const auto below_one = [&](double d) {
    if (d < 1.0 - 1e-6) return true;
    if (d >= 1.0 - 1e-9) return false;
    throw IndeterminateError("Nehari distances " + std::to_string(v.distance) + " and " +
                             std::to_string(v.conjugate_distance) + " are too close to 1 to decide");
  };
  const bool left = below_one(v.distance);
  const bool right = below_one(v.conjugate_distance);
  v.verdict = left ? (right ? Invertibility::Invertible : Invertibility::LeftOnly)
                   : (right ? Invertibility::RightOnly : Invertibility::Neither);

  if (left != (v.winding >= 0) || right != (v.winding <= 0)) {
    throw NumericalInconsistency(std::string("Hankel verdict ") + to_string(v.verdict) +
                                 " contradicts winding number " + std::to_string(v.winding));
  }
  return v;
}

SpectrumMembership analytic_spectrum_membership(const LaurentPolynomial& p, Complex lambda) {
  if (!p.is_zero() && p.n_min() < 0) throw PreconditionError("analytic spectrum requires n_min >= 0");
  const LaurentPolynomial q = p - lambda;
  if (q.is_zero()) return {true, false};
  std::vector<Complex> a(static_cast<std::size_t>(q.n_max() + 1), Complex(0.0, 0.0));
  for (std::int64_t n = q.n_min(); n <= q.n_max(); ++n) a[static_cast<std::size_t>(n)] = q.coeff(n);
  SpectrumMembership out{false, false};
  for (const auto& r : polynomial_roots(a)) {
    const double mod = std::abs(r);
    if (mod <= 1.0 + 1e-9) out.member = true;
    if (std::abs(mod - 1.0) <= 1e-9) out.indeterminate = true;
  }
  return out;
}

}  // namespace wh::z
