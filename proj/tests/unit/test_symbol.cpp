// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numbers>

#include "generators.hpp"
#include "wh/error.hpp"
#include "wh/symbol.hpp"

using namespace wh;

namespace {

const double kPi = std::numbers::pi;

TrigPolynomial zpoly(std::initializer_list<std::pair<std::int64_t, Complex>> terms) {
  TrigPolynomial::CoeffMap m;
  for (const auto& [n, c] : terms) m[GroupElement{n}] = c;
  return TrigPolynomial(OrderedGroup::integers(), m);
}

DualPoint random_point(gen::Rng& rng, std::size_t r) {
  DualPoint p;
  for (std::size_t i = 0; i < r; ++i) p.angles.push_back(gen::uniform(rng, 0.0, 2.0 * kPi));
  return p;
}

}  // namespace

TEST_CASE("eval examples") {
  const auto lex2 = OrderedGroup::lex(2);
  CHECK(TrigPolynomial::constant(lex2, 1.0).eval(DualPoint{{0.3, 2.0}}) == Complex(1.0, 0.0));
  const auto v = zpoly({{1, 1.0}}).eval(DualPoint{{kPi}});
  CHECK(v.real() == doctest::Approx(-1.0));
  CHECK(std::abs(v.imag()) < 1e-15);
  const auto c = zpoly({{1, 1.0}, {-1, 1.0}}).eval(DualPoint{{kPi / 3}});
  CHECK(std::abs(c - Complex(1.0, 0.0)) < 1e-15);
  CHECK_THROWS_AS(zpoly({{1, 1.0}}).eval(DualPoint{{0.0, 0.0}}), DimensionError);
}

TEST_CASE("algebra examples") {
  const auto z = OrderedGroup::integers();
  CHECK(conjugate(zpoly({{1, 1.0}})) == zpoly({{-1, 1.0}}));
  CHECK(sub_scalar(TrigPolynomial::constant(z, 1.0), 1.0).is_zero());
  CHECK(mul(zpoly({{1, 1.0}}), zpoly({{-1, 1.0}})) == TrigPolynomial::constant(z, 1.0));
  CHECK_THROWS_AS(add(zpoly({{1, 1.0}}), TrigPolynomial::constant(OrderedGroup::lex(2), 1.0)), PreconditionError);
  // pruning below the threshold
  const auto p = add(zpoly({{0, 1.0}, {1, 1.0}}), zpoly({{1, -1.0 + 1e-16}}));
  CHECK(p == zpoly({{0, 1.0}}));
}

TEST_CASE("lipschitz_bound examples") {
  const auto lex2 = OrderedGroup::lex(2);
  CHECK(TrigPolynomial::constant(lex2, 1.0).lipschitz_bound() == 0.0);
  CHECK(zpoly({{1, 1.0}}).lipschitz_bound() == 1.0);
  TrigPolynomial::CoeffMap m{{GroupElement{1, 0}, 2.0}, {GroupElement{0, 3}, 1.0}};
  CHECK(TrigPolynomial(lex2, m).lipschitz_bound() == doctest::Approx(5.0));
}

TEST_CASE("certified_min_modulus examples") {
  const auto z = OrderedGroup::integers();
  CHECK(certified_min_modulus(TrigPolynomial::constant(z, 3.0), 0.1).lower == doctest::Approx(3.0));
  CHECK(certified_min_modulus(TrigPolynomial::constant(z, 3.0), 1e-3).lower == doctest::Approx(3.0));
  const auto one_plus_z = zpoly({{0, 1.0}, {1, 1.0}});
  CHECK(certified_min_modulus(one_plus_z, 0.01).lower < 0.01);
  CHECK(certified_min_modulus(one_plus_z, 1e-4).lower == 0.0);
  const auto two_plus_z = zpoly({{0, 2.0}, {1, 1.0}});
  for (const double h : {0.1, 0.01, 0.001}) CHECK(certified_min_modulus(two_plus_z, h).lower >= 1.0 - h / 2);
  CHECK(certified_min_modulus(two_plus_z, 0.01).lower >= 0.9);
  const auto mm = certified_min_modulus(one_plus_z, 2 * kPi / 512);
  CHECK(mm.argmin.angles[0] == doctest::Approx(kPi));
}

TEST_CASE("certified_sup_norm examples") {
  const auto z = OrderedGroup::integers();
  const auto one = certified_sup_norm(TrigPolynomial::constant(z, 1.0));
  CHECK(one.lower == doctest::Approx(1.0));
  CHECK(one.upper >= 1.0);
  const auto a = certified_sup_norm(zpoly({{0, 1.0}, {1, 0.5}}));
  CHECK(a.lower <= 1.5 + 1e-12);
  CHECK(a.upper >= 1.5);
  const auto b = certified_sup_norm(zpoly({{1, 1.0}, {-1, 1.0}}));
  CHECK(b.lower <= 2.0 + 1e-12);
  CHECK(b.upper >= 2.0);
}

TEST_CASE("dual grid") {
  const auto g = DualGrid::with_step(2, 0.1);
  CHECK(g.step() <= 0.1);
  CHECK(g.per_axis() == 63);
  CHECK(g.covering_radius() == doctest::Approx(g.step() * std::sqrt(2.0) / 2));
  CHECK_THROWS_AS(DualGrid::with_step(4, 1e-3), PreconditionError);
  gen::Rng rng(201);
  const auto p = gen::trig(rng, OrderedGroup::lex(2), 5, 4);
  const DualGrid grid(2, 17);
  const auto vals = grid.evaluate(p);
  for (std::size_t i = 0; i < grid.size(); i += 7) CHECK(std::abs(vals[i] - p.eval(grid.point(i))) < 1e-12);
}

TEST_CASE("ring axioms at random dual points") {
  gen::Rng rng(202);
  for (const auto& g : {OrderedGroup::integers(), OrderedGroup::lex(2), OrderedGroup::lex(3)}) {
    const auto p = gen::trig(rng, g, 5, 3);
    const auto q = gen::trig(rng, g, 4, 3);
    const auto s = gen::trig(rng, g, 3, 3);
    const auto assoc_l = mul(mul(p, q), s);
    const auto assoc_r = mul(p, mul(q, s));
    const auto dist_l = mul(p, add(q, s));
    const auto dist_r = add(mul(p, q), mul(p, s));
    for (int t = 0; t < 100; ++t) {
      const auto th = random_point(rng, g.rank());
      REQUIRE(std::abs(assoc_l.eval(th) - assoc_r.eval(th)) < 1e-12 * (1 + assoc_l.l1_norm()));
      REQUIRE(std::abs(dist_l.eval(th) - dist_r.eval(th)) < 1e-12 * (1 + dist_l.l1_norm()));
      REQUIRE(std::abs(mul(p, q).eval(th) - p.eval(th) * q.eval(th)) < 1e-12 * (1 + p.l1_norm() * q.l1_norm()));
    }
    // support of a product lies in the sumset
    const auto pq = mul(p, q);
    for (const auto& [xi, c] : pq.coeffs()) {
      bool found = false;
      for (const auto& [a, ca] : p.coeffs()) found = found || q.coeffs().contains(xi - a);
      REQUIRE(found);
    }
  }
}

TEST_CASE("conjugate is an involution and pointwise conjugation") {
  gen::Rng rng(203);
  for (int t = 0; t < 50; ++t) {
    const auto p = gen::trig(rng, OrderedGroup::lex(2), 6, 5);
    REQUIRE(conjugate(conjugate(p)) == p);
    const auto th = random_point(rng, 2);
    REQUIRE(std::abs(conjugate(p).eval(th) - std::conj(p.eval(th))) < 1e-12);
  }
}

TEST_CASE("certified bounds hold at random points") {
  gen::Rng rng(204);
  for (const auto& g : {OrderedGroup::integers(), OrderedGroup::lex(2)}) {
    for (int t = 0; t < 10; ++t) {
      const auto p = gen::trig(rng, g, 4, 3);
      const double h = g.rank() == 1 ? 2 * kPi / 512 : 2 * kPi / 128;
      const auto mm = certified_min_modulus(p, h);
      const auto sn = certified_sup_norm(p, h);
      CHECK(sn.upper - sn.lower <= p.lipschitz_bound() * mm.step * std::sqrt(double(g.rank())) / 2 + 1e-15);
      for (int k = 0; k < 1000; ++k) {
        const double v = std::abs(p.eval(random_point(rng, g.rank())));
        REQUIRE(mm.lower <= v);
        REQUIRE(v <= sn.upper);
      }
    }
  }
}

TEST_CASE("refine_min_modulus certifies a near-vanishing symbol") {
  // |1.05 + z| >= 0.05, needs about 2 pi * 1 / 0.1 nodes to certify
  const auto p = zpoly({{0, 1.05}, {1, 1.0}});
  const auto mm = refine_min_modulus(p);
  CHECK(mm.lower > 0.0);
  CHECK(mm.lower <= 0.05 + 1e-12);
  CHECK(refine_min_modulus(zpoly({{0, 1.0}, {1, 1.0}})).lower == 0.0);
}
