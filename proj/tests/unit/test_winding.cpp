// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "generators.hpp"
#include "wh/error.hpp"
#include "wh/winding.hpp"
#include "wh/z_oracle.hpp"

using namespace wh;

namespace {

TrigPolynomial zpoly(std::initializer_list<std::pair<std::int64_t, Complex>> terms) {
  TrigPolynomial::CoeffMap m;
  for (const auto& [n, c] : terms) m[GroupElement{n}] = c;
  return TrigPolynomial(OrderedGroup::integers(), m);
}

const OrderedGroup kSqrt2 = OrderedGroup::real_embedding(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});

GroupElement winding_of(const TrigPolynomial& p) {
  const auto r = winding_vector(p);
  REQUIRE(std::holds_alternative<WindingVector>(r));
  return std::get<WindingVector>(r).w;
}

}  // namespace

TEST_CASE("axis_winding examples") {
  const DualPoint origin{{0.0}};
  CHECK(axis_winding(zpoly({{1, 1.0}}), 0, origin, 0.5) == 1);
  CHECK(axis_winding(zpoly({{0, 1.0}}), 0, origin, 0.5) == 0);
  CHECK(axis_winding(zpoly({{1, 1.0}, {0, -0.5}}), 0, origin, 0.25) == 1);
  CHECK(axis_winding(zpoly({{-7, 1.0}, {3, 0.2}}), 0, origin, 0.4) == -7);
  CHECK_THROWS_AS(axis_winding(zpoly({{0, 1.0}, {1, 1.0}}), 0, origin, 0.1), PossibleZeroError);
}

TEST_CASE("winding_vector examples") {
  const auto lex2 = OrderedGroup::lex(2);
  CHECK(winding_of(TrigPolynomial::monomial(lex2, GroupElement{2, -1})) == GroupElement{2, -1});
  TrigPolynomial::CoeffMap m{{GroupElement{0, 0}, 2.0}, {GroupElement{0, 1}, 1.0}};
  CHECK(winding_of(TrigPolynomial(lex2, m)) == GroupElement{0, 0});
  const auto v = winding_vector(zpoly({{0, 1.0}, {1, 1.0}}));
  REQUIRE(std::holds_alternative<NotInvertible>(v));
  const auto& ni = std::get<NotInvertible>(v);
  CHECK(ni.witness.argmin.angles[0] == doctest::Approx(std::numbers::pi).epsilon(0.01));
}

TEST_CASE("symbol_index examples") {
  const auto a = symbol_index(zpoly({{1, 1.0}}), OrderedGroup::integers());
  CHECK(std::get<IndexValue>(a.value) == IndexValue::finite(1));
  const auto b = symbol_index(TrigPolynomial::monomial(OrderedGroup::lex(2), GroupElement{1, 0}), OrderedGroup::lex(2));
  CHECK_FALSE(std::get<IndexValue>(b.value).is_finite());
  TrigPolynomial::CoeffMap m{{GroupElement{0, 0}, 2.0}, {GroupElement{0, 1}, 1.0}};
  const auto c = symbol_index(TrigPolynomial(kSqrt2, m), kSqrt2);
  CHECK(std::get<IndexValue>(c.value) == IndexValue::finite(0));
  CHECK_FALSE(symbol_index(zpoly({{0, 1.0}, {1, 1.0}}), OrderedGroup::integers()).invertible());
}

TEST_CASE("multiplicativity and conjugation on 200 invertible pairs") {
  gen::Rng rng(301);
  const auto lex2 = OrderedGroup::lex(2);
  const auto make = [&] {
    const auto chi = TrigPolynomial::monomial(lex2, gen::element(rng, 2, 3));
    return mul(chi, add(TrigPolynomial::constant(lex2, 1.0), scale(gen::trig(rng, lex2, 3, 2), 0.25)));
  };
  int pairs = 0;
  while (pairs < 200) {
    const auto p = make();
    const auto q = make();
    const auto wp = winding_vector(p);
    const auto wq = winding_vector(q);
    if (!std::holds_alternative<WindingVector>(wp) || !std::holds_alternative<WindingVector>(wq)) continue;
    const auto& a = std::get<WindingVector>(wp).w;
    const auto& b = std::get<WindingVector>(wq).w;
    REQUIRE(winding_of(mul(p, q)) == a + b);
    REQUIRE(winding_of(conjugate(p)) == -a);
    ++pairs;
  }
}

TEST_CASE("axis winding equals root count on random Laurent polynomials") {
  gen::Rng rng(302);
  for (int t = 0; t < 500; ++t) {
    const auto p = gen::invertible_laurent(rng, 12, 0.1);
    const auto ew = z::exact_winding(p);
    REQUIRE(std::holds_alternative<std::int64_t>(ew));
    REQUIRE(winding_of(p.to_trig())[0] == std::get<std::int64_t>(ew));
  }
}

TEST_CASE("stability under small perturbations") {
  gen::Rng rng(303);
  const auto lex2 = OrderedGroup::lex(2);
  int done = 0;
  while (done < 50) {
    const auto chi = TrigPolynomial::monomial(lex2, gen::element(rng, 2, 3));
    const auto p = mul(chi, add(TrigPolynomial::constant(lex2, 1.0), scale(gen::trig(rng, lex2, 3, 2), 0.3)));
    const auto wp = winding_vector(p);
    if (!std::holds_alternative<WindingVector>(wp)) continue;
    const auto& wv = std::get<WindingVector>(wp);
    if (wv.certificate.lower < 0.05) continue;
    const double eps = 0.49 * wv.certificate.lower;
    const auto& xi = std::next(p.coeffs().begin(), gen::uniform_int(rng, 0, static_cast<std::int64_t>(p.coeffs().size()) - 1))->first;
    const auto q = add(p, TrigPolynomial::monomial(lex2, xi, std::polar(eps, gen::uniform(rng, 0.0, 6.28))));
    REQUIRE(winding_of(q) == wv.w);
    ++done;
  }
}
