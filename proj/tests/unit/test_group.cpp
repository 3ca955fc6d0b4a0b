// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "generators.hpp"
#include "wh/error.hpp"
#include "wh/group.hpp"

using namespace wh;

namespace {

OrderedGroup sqrt2_plane() {
  // weights 1 and sqrt 2
  return OrderedGroup::real_embedding(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
}

std::vector<OrderedGroup> backends() {
  return {OrderedGroup::integers(), OrderedGroup::lex(2), OrderedGroup::lex(4), sqrt2_plane(),
          OrderedGroup::real_embedding(3, {{Rational(2, 3), Rational(-1)}, {Rational(5), Rational(1, 7)}}),
          OrderedGroup::real_embedding(7, {{Rational(-1, 2), Rational(1, 3)}})};
}

}  // namespace

TEST_CASE("compare examples") {
  const auto lex2 = OrderedGroup::lex(2);
  CHECK(lex2.compare(GroupElement{0, 5}, GroupElement{1, -100}) == std::strong_ordering::less);
  CHECK(sqrt2_plane().compare(GroupElement{1, 0}, GroupElement{0, 1}) == std::strong_ordering::less);
  for (const auto& g : backends()) {
    CHECK(g.compare(GroupElement::zero(g.rank()), GroupElement::zero(g.rank())) == std::strong_ordering::equal);
  }
  CHECK_THROWS_AS(lex2.compare(GroupElement{1}, GroupElement{1, 2}), DimensionError);
}

TEST_CASE("is_positive examples") {
  const auto lex2 = OrderedGroup::lex(2);
  CHECK(lex2.is_positive(GroupElement{0, 0}));
  CHECK_FALSE(lex2.is_positive(GroupElement{-1, 1000}));
  CHECK(sqrt2_plane().is_positive(GroupElement{3, -2}));    // 3 - 2 sqrt 2 > 0
  CHECK_FALSE(sqrt2_plane().is_positive(GroupElement{-3, 2}));
  CHECK_FALSE(sqrt2_plane().is_positive(GroupElement{1, -1}));
  CHECK_THROWS_AS(lex2.is_positive(GroupElement{1}), DimensionError);
}

TEST_CASE("interval_count examples") {
  const auto z = OrderedGroup::integers();
  CHECK(z.interval_count(GroupElement{3}) == IndexValue::finite(3));
  CHECK(z.enumerate_interval(GroupElement{3}, 10) == std::vector<GroupElement>{{0}, {1}, {2}});
  CHECK_FALSE(OrderedGroup::lex(2).interval_count(GroupElement{1, 0}).is_finite());
  CHECK_FALSE(sqrt2_plane().interval_count(GroupElement{0, 1}).is_finite());
  CHECK_THROWS_AS(z.interval_count(GroupElement{-1}), PreconditionError);
  CHECK(sqrt2_plane().interval_count(GroupElement{0, 0}) == IndexValue::finite(0));
}

TEST_CASE("rotation_index examples") {
  CHECK(OrderedGroup::integers().rotation_index(GroupElement{-2}) == IndexValue::finite(-2));
  CHECK(OrderedGroup::lex(2).rotation_index(GroupElement{0, 5}) == IndexValue::finite(5));
  CHECK(OrderedGroup::lex(2).rotation_index(GroupElement{0, 0}) == IndexValue::finite(0));
  CHECK(OrderedGroup::lex(2).rotation_index(GroupElement{0, -5}) == IndexValue::finite(-5));
  CHECK_FALSE(OrderedGroup::lex(2).rotation_index(GroupElement{-1, 7}).is_finite());
  CHECK_FALSE(sqrt2_plane().rotation_index(GroupElement{1, -1}).is_finite());
  const auto re1 = OrderedGroup::real_embedding(2, {{Rational(0), Rational(-1)}});
  // A single negative weight reverses the integers.
  CHECK(re1.rotation_index(GroupElement{-4}) == IndexValue::finite(4));
}

TEST_CASE("enumerate_interval examples") {
  const auto z = OrderedGroup::integers();
  CHECK(z.enumerate_interval(GroupElement{0}, 10).empty());
  CHECK(OrderedGroup::lex(2).enumerate_interval(GroupElement{0, 2}, 10) ==
        std::vector<GroupElement>{{0, 0}, {0, 1}});
  CHECK_THROWS_AS(z.enumerate_interval(GroupElement{11}, 10), CapacityError);
  CHECK_THROWS_AS(OrderedGroup::lex(2).enumerate_interval(GroupElement{1, 0}, 10), CapacityError);
}

TEST_CASE("positive_prefix examples") {
  const auto z = OrderedGroup::integers();
  CHECK(z.positive_prefix(4) == std::vector<GroupElement>{{0}, {1}, {2}, {3}});
  CHECK(z.positive_prefix(1) == std::vector<GroupElement>{{0}});
  CHECK_THROWS_AS(OrderedGroup::lex(2).positive_prefix(3), UnsupportedWindowError);
}

TEST_CASE("real embedding construction") {
  CHECK_THROWS_AS(OrderedGroup::real_embedding(2, {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}),
                  PreconditionError);
  CHECK_THROWS_AS(OrderedGroup::real_embedding(4, {{Rational(1), Rational(0)}}), PreconditionError);
  CHECK_THROWS_AS(OrderedGroup::real_embedding(2, {{Rational(0), Rational(0)}}), PreconditionError);
  CHECK_THROWS_AS(OrderedGroup::real_embedding(
                      2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}}),
                  PreconditionError);
  CHECK(sqrt2_plane().rank() == 2);
}

TEST_CASE("translation invariance, trichotomy and antisymmetry") {
  gen::Rng rng(101);
  for (const auto& g : backends()) {
    for (int t = 0; t < 1000; ++t) {
      const auto a = gen::element(rng, g.rank(), 100);
      const auto b = gen::element(rng, g.rank(), 100);
      const auto c = gen::element(rng, g.rank(), 100);
      const auto ab = g.compare(a, b);
      REQUIRE(ab == g.compare(a + c, b + c));
      REQUIRE(g.compare(b, a) == (0 <=> ab));
      REQUIRE((ab == 0) == (a == b));
      REQUIRE((g.is_positive(a) && g.is_positive(-a)) == a.is_zero());
      REQUIRE((g.is_positive(a) || g.is_positive(-a)));
    }
  }
}

TEST_CASE("rotation index additivity") {
  gen::Rng rng(102);
  for (const auto& g : backends()) {
    int checked = 0;
    for (int t = 0; t < 2000 && checked < 200; ++t) {
      auto a = gen::element(rng, g.rank(), 20);
      auto b = gen::element(rng, g.rank(), 20);
      if (g.rank() > 1 && g.is_lex()) {
        // keep only the last coordinate so the indices are finite
        std::vector<std::int64_t> ea(g.rank(), 0), eb(g.rank(), 0);
        ea.back() = a[g.rank() - 1];
        eb.back() = b[g.rank() - 1];
        a = GroupElement(ea);
        b = GroupElement(eb);
      }
      const auto ia = g.rotation_index(a);
      const auto ib = g.rotation_index(b);
      const auto iab = g.rotation_index(a + b);
      if (g.rank() > 1 && !g.is_lex()) {
        // dense image: every nonzero element has infinite index
        REQUIRE(ia.is_finite() == a.is_zero());
        continue;
      }
      if (!ia.is_finite() || !ib.is_finite()) continue;
      REQUIRE(iab.is_finite());
      REQUIRE(iab.value() == ia.value() + ib.value());
      ++checked;
    }
    if (g.rank() == 1 || g.is_lex()) CHECK(checked > 0);
  }
}

TEST_CASE("lex rank 2: counting rule matches enumeration") {
  const auto lex2 = OrderedGroup::lex(2);
  for (std::int64_t n = 0; n <= 50; ++n) {
    const GroupElement chi{0, n};
    const auto elems = lex2.enumerate_interval(chi, 1000);
    REQUIRE(elems.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) REQUIRE(lex2.compare(elems[i], elems[i + 1]) < 0);
    REQUIRE(lex2.rotation_index(chi) == IndexValue::finite(n));
  }
}

TEST_CASE("exact quadratic sign agrees with 113-bit floating evaluation") {
  using Quad = boost::multiprecision::cpp_bin_float_quad;
  gen::Rng rng(103);
  const std::int64_t radicands[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23};
  for (int t = 0; t < 10000; ++t) {
    const Rational p(gen::uniform_int(rng, -1000, 1000), gen::uniform_int(rng, 1, 1000));
    const Rational q(gen::uniform_int(rng, -1000, 1000), gen::uniform_int(rng, 1, 1000));
    const auto d = radicands[gen::uniform_int(rng, 0, 14)];
    const Quad x = Quad(p.num) / p.den + Quad(q.num) / q.den * boost::multiprecision::sqrt(Quad(d));
    const int expected = x > 0 ? 1 : (x < 0 ? -1 : 0);
    REQUIRE(quadratic_sign(p, q, d) == expected);
  }
  // Near-cancellation: 99 / 70 approximates sqrt 2 from above.
  CHECK(quadratic_sign(Rational(99, 70), Rational(-1), 2) == 1);
  CHECK(quadratic_sign(Rational(-99, 70), Rational(1), 2) == -1);
  CHECK(quadratic_sign(Rational(0), Rational(0), 2) == 0);
}
