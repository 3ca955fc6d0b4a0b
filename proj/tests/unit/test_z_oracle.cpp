// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "wh/error.hpp"
#include "wh/z_oracle.hpp"

using namespace wh;
using namespace wh::z;

namespace {

std::vector<RootClass> classes(const LaurentRoots& r) {
  std::vector<RootClass> c;
  for (const auto& x : r.roots) c.push_back(x.cls);
  std::sort(c.begin(), c.end());
  return c;
}

std::int64_t winding(const LaurentPolynomial& p) {
  const auto w = exact_winding(p);
  REQUIRE(std::holds_alternative<std::int64_t>(w));
  return std::get<std::int64_t>(w);
}

}  // namespace

TEST_CASE("laurent_roots examples") {
  const auto a = laurent_roots(LaurentPolynomial(0, {-0.5, 1.0}));
  REQUIRE(a.roots.size() == 1);
  CHECK(std::abs(a.roots[0].z - 0.5) < 1e-14);
  CHECK(a.roots[0].cls == RootClass::Inside);
  const auto b = laurent_roots(LaurentPolynomial(0, {-1.0, 0.0, 1.0}));
  CHECK(classes(b) == std::vector<RootClass>{RootClass::On, RootClass::On});
  // z^-1 (z - 2)(z - 1/3) = z - 7/3 + (2/3) z^-1
  const auto c = laurent_roots(LaurentPolynomial(-1, {2.0 / 3.0, -7.0 / 3.0, 1.0}));
  CHECK(c.pole_order == 1);
  CHECK(classes(c) == std::vector<RootClass>{RootClass::Inside, RootClass::Outside});
  for (const auto& r : c.roots) CHECK(std::min(std::abs(r.z - 2.0), std::abs(r.z - 1.0 / 3.0)) < 1e-12);
  CHECK_THROWS_AS(laurent_roots(LaurentPolynomial(0, std::vector<Complex>(70, 1.0))), PreconditionError);
}

TEST_CASE("exact_winding examples") {
  CHECK(winding(LaurentPolynomial(1, {1.0})) == 1);
  CHECK(winding(LaurentPolynomial(0, {-0.5, 1.0})) == 1);
  CHECK(winding(LaurentPolynomial(-2, {-3.0, 1.0})) == -2);
  CHECK(std::holds_alternative<OnCircle>(exact_winding(LaurentPolynomial(0, {1.0, 1.0}))));
  // roots at zero count as inside
  CHECK(winding(LaurentPolynomial(0, {0.0, 0.0, 1.0})) == 2);
}

TEST_CASE("factorize examples") {
  const auto a = factorize(LaurentPolynomial(0, {-0.5, 1.0}));
  CHECK(a.w == 1);
  REQUIRE(a.minus_factor.size() == 2);
  CHECK(std::abs(a.minus_factor[1] + 0.5) < 1e-14);
  CHECK(a.plus_factor.size() == 1);
  const auto b = factorize(LaurentPolynomial(0, {2.0, -1.0}));
  CHECK(b.w == 0);
  CHECK(std::abs(b.constant - 2.0) < 1e-14);
  REQUIRE(b.plus_factor.size() == 2);
  CHECK(std::abs(b.plus_factor[1] + 0.5) < 1e-14);  // 2 - z = 2 (1 - z / 2)
  const auto c = factorize(LaurentPolynomial(0, {1.0}));
  CHECK(c.w == 0);
  CHECK(c.plus_factor == std::vector<Complex>{1.0});
  CHECK(c.minus_factor == std::vector<Complex>{1.0});
  CHECK_THROWS_AS(factorize(LaurentPolynomial(0, {1.0, 1.0})), NotFactorizableError);
}

TEST_CASE("factorization reconstructs random symbols") {
  gen::Rng rng(601);
  for (int t = 0; t < 200; ++t) {
    const auto p = gen::invertible_laurent(rng, 12, 0.1);
    const auto f = factorize(p);
    CHECK(f.w == winding(p));
    for (int k = 0; k < 16; ++k) {
      const Complex zz = std::polar(1.0, 0.39 * k + 0.1);
      REQUIRE(std::abs(f.eval(zz) - p.eval(zz)) <= 1e-8 * (1 + std::abs(p.eval(zz))));
    }
    for (const auto& r : f.roots) REQUIRE(r.cls != RootClass::On);
  }
}

TEST_CASE("kernel_cokernel examples") {
  const auto a = kernel_cokernel(LaurentPolynomial(1, {1.0}));
  CHECK(a.dim_ker == 0);
  CHECK(a.dim_coker == 1);
  CHECK(a.kernel_basis.empty());
  const auto b = kernel_cokernel(LaurentPolynomial(-1, {1.0}));
  CHECK(b.dim_ker == 1);
  REQUIRE(b.kernel_basis.size() == 1);
  CHECK(std::abs(std::abs(b.kernel_basis[0].at(GroupElement{0})) - 1.0) < 1e-14);
  CHECK(b.kernel_basis[0].entries().size() == 1);
  // 1 - 2/z: kernel spanned by 2^-n
  const auto c = kernel_cokernel(LaurentPolynomial(-1, {-2.0, 1.0}));
  CHECK(c.dim_ker == 1);
  REQUIRE(c.kernel_basis.size() == 1);
  const auto& v = c.kernel_basis[0];
  CHECK(std::abs(v.at(GroupElement{1}) / v.at(GroupElement{0}) - 0.5) < 1e-12);
  CHECK(v.norm() == doctest::Approx(1.0));
  CHECK(apply(LaurentPolynomial(-1, {-2.0, 1.0}).to_trig(), v).norm() <= 1e-8);
  CHECK_THROWS_AS(kernel_cokernel(LaurentPolynomial(0, {1.0, 1.0})), NotFactorizableError);
}

TEST_CASE("kernels of random symbols: Coburn, orthonormality, residuals") {
  gen::Rng rng(602);
  int nontrivial = 0;
  for (int t = 0; t < 200; ++t) {
    const auto p = gen::invertible_laurent(rng, 12, 0.1);
    const auto kd = kernel_cokernel(p);
    const auto w = winding(p);
    REQUIRE(std::min(kd.dim_ker, kd.dim_coker) == 0);
    REQUIRE(kd.dim_ker - kd.dim_coker == -w);
    REQUIRE(kd.kernel_basis.size() == static_cast<std::size_t>(kd.dim_ker));
    for (std::size_t i = 0; i < kd.kernel_basis.size(); ++i) {
      const auto& v = kd.kernel_basis[i];
      REQUIRE(apply(p.to_trig(), v).norm() <= 1e-8);
      REQUIRE(std::abs(v.norm() - 1.0) < 1e-10);
      for (std::size_t j = 0; j < i; ++j) {
        Complex dot = 0.0;
        for (const auto& [xi, c] : v.entries()) dot += c * std::conj(kd.kernel_basis[j].at(xi));
        REQUIRE(std::abs(dot) < 1e-10);
      }
    }
    nontrivial += kd.dim_ker > 0;
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("hankel_block examples") {
  const auto a = hankel_block(LaurentPolynomial(-1, {1.0}), 1);
  CHECK(a.rows() == 1);
  CHECK(a(0, 0) == Complex(1.0));
  CHECK(hankel_block(LaurentPolynomial(1, {1.0}), 3).norm() == 0.0);
  const auto c = hankel_block(LaurentPolynomial(-2, {1.0, 1.0}), 2);
  CHECK(c(0, 0) == Complex(1.0));
  CHECK(c(0, 1) == Complex(1.0));
  CHECK(c(1, 0) == Complex(1.0));
  CHECK(c(1, 1) == Complex(0.0));
}

TEST_CASE("nehari_distance examples") {
  CHECK(nehari_distance(LaurentPolynomial(0, {1.0, 2.0, 3.0})) == 0.0);
  CHECK(nehari_distance(LaurentPolynomial(-1, {1.0})) == doctest::Approx(1.0));
  const auto b = blaschke({0.5});
  CHECK(std::abs(nehari_distance(b.conjugate()) - 1.0) < 1e-8);
  CHECK(nehari_distance(b) <= 1e-12);
}

TEST_CASE("rational symbols") {
  const auto b = blaschke({Complex(0.3, 0.4)});
  const Complex a(0.3, 0.4);
  // (z - a) / (1 - conj(a) z) has coefficients -a, 1 - |a|^2, (1 - |a|^2) conj(a), ...
  CHECK(std::abs(b.fourier_coeff(0) + a) < 1e-14);
  CHECK(std::abs(b.fourier_coeff(1) - (1.0 - std::norm(a))) < 1e-14);
  CHECK(std::abs(b.fourier_coeff(3) - (1.0 - std::norm(a)) * std::conj(a) * std::conj(a)) < 1e-14);
  CHECK(std::abs(b.fourier_coeff(-1)) == 0.0);
  for (int k = 0; k < 10; ++k) {
    const double th = 0.6 * k;
    CHECK(std::abs(b.truncate(-5, 60).eval_angle(th) - b.eval_angle(th)) <= b.truncation_error(-5, 60) + 1e-14);
  }
  CHECK(b.truncation_error(0, 60) < 1e-15);
  CHECK(b.winding() == 1);
  CHECK(b.conjugate().winding() == -1);
  CHECK_THROWS_AS(RationalSymbol(LaurentPolynomial(0, {1.0}), LaurentPolynomial(0, {-1.0, 1.0})), ConditioningError);
  const auto s = b.conjugate();
  CHECK(s.hankel_tail_bound(s.hankel_size_for(1e-10)) < 1e-20);
}

TEST_CASE("blaschke examples") {
  const auto e = blaschke({});
  CHECK(std::abs(e.eval_angle(1.0) - 1.0) < 1e-15);
  const auto z1 = blaschke({0.0});
  CHECK(std::abs(z1.eval_angle(0.7) - std::polar(1.0, 0.7)) < 1e-15);
  const auto h = blaschke({0.5});
  for (int k = 0; k < 256; ++k) CHECK(std::abs(std::abs(h.eval_angle(2 * std::numbers::pi * k / 256)) - 1.0) < 1e-12);
  CHECK_THROWS_AS(blaschke({0.9999999}), ConditioningError);
}

TEST_CASE("unimodular_invertibility examples") {
  const auto a = unimodular_invertibility(blaschke({0.0}));
  CHECK(a.verdict == Invertibility::LeftOnly);
  CHECK(a.distance <= 1e-12);
  CHECK(std::abs(a.conjugate_distance - 1.0) < 1e-9);
  const RationalSymbol i_const(LaurentPolynomial(0, {Complex(0, 1)}), LaurentPolynomial(0, {1.0}));
  CHECK(unimodular_invertibility(i_const).verdict == Invertibility::Invertible);
  const auto c = unimodular_invertibility(blaschke({0.5}).conjugate());
  CHECK(c.verdict == Invertibility::RightOnly);
  CHECK(c.winding == -1);
  CHECK(std::string(to_string(Invertibility::Neither)) == "Neither");
}

TEST_CASE("analytic_spectrum_membership examples") {
  CHECK(analytic_spectrum_membership(LaurentPolynomial(1, {1.0}), 0.3).member);
  CHECK_FALSE(analytic_spectrum_membership(LaurentPolynomial(1, {1.0}), 2.0).member);
  const auto c = analytic_spectrum_membership(LaurentPolynomial(1, {1.0, 1.0}), 0.0);
  CHECK(c.member);
  CHECK(c.indeterminate);  // the root -1 sits on the circle
  CHECK_THROWS_AS(analytic_spectrum_membership(LaurentPolynomial(-1, {1.0}), 0.0), PreconditionError);
}

TEST_CASE("Nehari distance never exceeds the sup norm") {
  gen::Rng rng(603);
  for (int t = 0; t < 100; ++t) {
    const auto p = gen::laurent(rng, 10);
    if (p.is_zero()) continue;
    REQUIRE(nehari_distance(p) <= certified_sup_norm(p.to_trig()).upper + 1e-12);
    if (p.n_min() >= 0) REQUIRE(nehari_distance(p) == 0.0);
  }
}

TEST_CASE("finite sections of a symbol with a root on the circle lose invertibility") {
  // (1 - z)(2 - 1/z): one zero on the circle, not Fredholm
  const auto p = LaurentPolynomial(-1, {-1.0, 3.0, -2.0});
  REQUIRE(std::holds_alternative<OnCircle>(exact_winding(p)));
  double prev = 1e300;
  for (const std::size_t n : {32, 64, 128, 256}) {
    const auto s = linalg::smallest_singular_value(truncation_matrix(p.to_trig(), Window::omega_prefix(OrderedGroup::integers(), n)).entries);
    CHECK(s < prev);
    prev = s;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("unimodular verdicts on random Blaschke products") {
  gen::Rng rng(604);
  for (int t = 0; t < 30; ++t) {
    std::vector<Complex> a;
    const auto deg = gen::uniform_int(rng, 0, 5);
    for (std::int64_t i = 0; i < deg; ++i) a.push_back(gen::complex_in_disc(rng, 0.9));
    const auto b = blaschke(a);
    const auto v = unimodular_invertibility(b);
    CHECK(v.winding == deg);
    CHECK(v.verdict == (deg == 0 ? Invertibility::Invertible : Invertibility::LeftOnly));
    const auto vc = unimodular_invertibility(b.conjugate());
    CHECK(vc.verdict == (deg == 0 ? Invertibility::Invertible : Invertibility::RightOnly));
  }
}
