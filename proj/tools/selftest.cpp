// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include "selftest.hpp"

#include <cmath>
#include <sstream>

#include "generators.hpp"
#include "wh/error.hpp"
#include "wh/fredholm.hpp"
#include "wh/wiener_hopf.hpp"
#include "wh/winding.hpp"
#include "wh/z_oracle.hpp"

namespace wh::selftest {

namespace {

struct Failure {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<OrderedGroup> sample_groups() {
  return {OrderedGroup::integers(), OrderedGroup::lex(2), OrderedGroup::lex(3),
          OrderedGroup::real_embedding(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}),
          OrderedGroup::real_embedding(5, {{Rational(1, 2), Rational(1)}, {Rational(-3), Rational(2, 3)}})};
}

std::string suite_order() {
  gen::Rng rng(11);
  std::size_t trials = 0;
  for (const auto& g : sample_groups()) {
    for (int t = 0; t < 1000; ++t, ++trials) {
      const auto a = gen::element(rng, g.rank(), 100);
      const auto b = gen::element(rng, g.rank(), 100);
      const auto c = gen::element(rng, g.rank(), 100);
      const auto ab = g.compare(a, b);
      check(ab == g.compare(a + c, b + c), "translation invariance " + a.to_string() + " " + b.to_string());
      check(g.compare(b, a) == (0 <=> ab), "antisymmetry");
      check((ab == 0) == (a == b), "equality iff identical");
      check(g.is_positive(a) != g.is_positive(-a) || a.is_zero(), "cone splits X");
    }
  }
  const auto lex2 = OrderedGroup::lex(2);
  for (std::int64_t n = 0; n <= 50; ++n) {
    const GroupElement chi{0, n};
    check(lex2.enumerate_interval(chi, 64).size() == static_cast<std::size_t>(n), "lex interval enumeration");
    check(lex2.rotation_index(chi) == IndexValue::finite(n), "lex rotation index");
  }
  return std::to_string(trials) + " comparisons";
}

std::string suite_symbol() {
  gen::Rng rng(12);
  for (const auto& g : sample_groups()) {
    for (int t = 0; t < 10; ++t) {
      const auto p = gen::trig(rng, g, 4, 3);
      const auto q = gen::trig(rng, g, 3, 3);
      const auto s = gen::trig(rng, g, 3, 3);
      check(conjugate(conjugate(p)) == p, "conjugate involution");
      const auto lhs = mul(mul(p, q), s);
      const auto rhs = mul(p, mul(q, s));
      const auto dist = mul(p, add(q, s));
      const auto dist2 = add(mul(p, q), mul(p, s));
      for (int k = 0; k < 10; ++k) {
        DualPoint th;
        for (std::size_t i = 0; i < g.rank(); ++i) th.angles.push_back(gen::uniform(rng, 0.0, 2.0 * std::numbers::pi));
        check(std::abs(lhs.eval(th) - rhs.eval(th)) < 1e-12 * (1 + std::abs(lhs.eval(th))), "associativity");
        check(std::abs(dist.eval(th) - dist2.eval(th)) < 1e-12 * (1 + std::abs(dist.eval(th))), "distributivity");
        check(std::abs(mul(p, q).eval(th) - p.eval(th) * q.eval(th)) < 1e-12 * (1 + p.l1_norm() * q.l1_norm()),
              "eval homomorphism");
        check(std::abs(conjugate(p).eval(th) - std::conj(p.eval(th))) < 1e-12 * (1 + p.l1_norm()),
              "conjugate is pointwise");
      }
      if (g.rank() <= 2) {
        const auto mm = certified_min_modulus(p, 2.0 * std::numbers::pi / 128);
        const auto sn = certified_sup_norm(p, 2.0 * std::numbers::pi / 128);
        for (int k = 0; k < 100; ++k) {
          DualPoint th;
          for (std::size_t i = 0; i < g.rank(); ++i) th.angles.push_back(gen::uniform(rng, 0.0, 2.0 * std::numbers::pi));
          const double v = std::abs(p.eval(th));
          check(mm.lower <= v + 1e-12, "min modulus bound");
          check(v <= sn.upper + 1e-12, "sup norm bound");
        }
      }
    }
  }
  return "ring axioms and certified bounds";
}

std::string suite_winding() {
  gen::Rng rng(13);
  const auto g = OrderedGroup::lex(2);
  int pairs = 0;
  while (pairs < 20) {
    // A character times a small perturbation of 1.
    const auto mk = [&] {
      auto base = TrigPolynomial::monomial(g, gen::element(rng, 2, 2));
      return mul(base, add(TrigPolynomial::constant(g, 1.0), scale(gen::trig(rng, g, 2, 2), 0.2)));
    };
    const auto p = mk();
    const auto q = mk();
    const auto wp = winding_vector(p);
    const auto wq = winding_vector(q);
    const auto wpq = winding_vector(mul(p, q));
    if (!std::holds_alternative<WindingVector>(wp) || !std::holds_alternative<WindingVector>(wq)) continue;
    check(std::holds_alternative<WindingVector>(wpq), "product of invertibles is invertible");
    const auto& a = std::get<WindingVector>(wp).w;
    const auto& b = std::get<WindingVector>(wq).w;
    check(std::get<WindingVector>(wpq).w == a + b, "winding multiplicativity");
    const auto wc = winding_vector(conjugate(p));
    check(std::get<WindingVector>(wc).w == -a, "conjugation negates winding");
    ++pairs;
  }
  return std::to_string(pairs) + " invertible pairs";
}

std::string suite_wiener_hopf() {
  gen::Rng rng(14);
  const auto z = OrderedGroup::integers();
  const auto lex2 = OrderedGroup::lex(2);
  for (int t = 0; t < 10; ++t) {
    const auto k = gen::trig(rng, z, 4, 3);
    const auto w = Window::omega_prefix(z, 12);
    const auto m = truncation_matrix(k, w).entries;
    const auto ma = truncation_matrix(adjoint_coeffs(k), w).entries;
    check((ma - m.adjoint()).norm() == 0.0, "adjoint truncation");
    for (std::size_t i = 1; i < w.size(); ++i) {
      for (std::size_t j = 1; j < w.size(); ++j) {
        check(m(i, j) == m(i - 1, j - 1), "Toeplitz structure");
      }
    }
    const auto k2 = gen::trig(rng, lex2, 4, 2);
    const auto w2 = Window::box(lex2, GroupElement{0, -2}, GroupElement{2, 2});
    const auto m2 = truncation_matrix(k2, w2).entries;
    check((truncation_matrix(adjoint_coeffs(k2), w2).entries - m2.adjoint()).norm() == 0.0, "adjoint truncation r=2");

    PositiveVector::EntryMap e;
    for (int i = 0; i < 5; ++i) e[GroupElement{gen::uniform_int(rng, 0, 10)}] = gen::complex_in_square(rng, 1.0);
    const PositiveVector v(z, e);
    check(apply(k, v).norm() <= k.l1_norm() * v.norm() * (1 + 1e-12), "apply bounded by l1 norm");

    const auto chi = GroupElement{gen::uniform_int(rng, 0, 5)};
    const auto xi = GroupElement{gen::uniform_int(rng, 0, 5)};
    const auto q = quadrature_entry_check(k, chi, xi, 32);
    check(std::abs(q.toeplitz - q.quadrature) <= 1e-10, "quadrature entry");
  }
  return "adjoints, structure, bounds, quadrature";
}

std::string suite_oracle() {
  gen::Rng rng(15);
  for (int t = 0; t < 60; ++t) {
    const auto p = gen::invertible_laurent(rng, 12, 0.1);
    const auto ew = z::exact_winding(p);
    check(std::holds_alternative<std::int64_t>(ew), "certified symbol has no root on the circle");
    const auto w = std::get<std::int64_t>(ew);
    const auto mm = certified_min_modulus(p.to_trig());
    check(axis_winding(p.to_trig(), 0, DualPoint{{0.0}}, 0.5 * mm.lower) == w, "argument winding matches roots");
    const auto kd = z::kernel_cokernel(p);
    check(std::min(kd.dim_ker, kd.dim_coker) == 0, "Coburn dichotomy");
    check(kd.dim_ker - kd.dim_coker == -w, "index from kernel data");
    for (const auto& v : kd.kernel_basis) check(apply(p.to_trig(), v).norm() <= 1e-8, "kernel residual");
  }
  for (int t = 0; t < 10; ++t) {
    std::vector<Complex> a;
    const auto deg = gen::uniform_int(rng, 0, 3);
    for (std::int64_t i = 0; i < deg; ++i) a.push_back(gen::complex_in_disc(rng, 0.9));
    const auto b = z::blaschke(a);
    check(z::nehari_distance(b) <= 1e-9, "Blaschke product is analytic");
    check(z::unimodular_invertibility(b).winding == deg, "Blaschke winding");
  }
  return "windings, kernels, Hankel";
}

std::string suite_spectrum() {
  const auto z = OrderedGroup::integers();
  const auto shift = TrigPolynomial::monomial(z, GroupElement{1});
  const auto grid = spectrum_grid(shift, z, Box{-1.5, 1.5, -1.5, 1.5}, 48, 48);
  const auto rep = hull_and_inclusion_report(shift, z, grid);
  check(rep.ok(), rep.ok() ? "" : rep.violations.front());
  bool hole = false;
  for (const auto& h : grid.holes()) hole = hole || (h.label == CellLabel::FredholmHole && h.index == -1);
  check(hole, "shift has a Fredholm hole of index -1");

  gen::Rng rng(16);
  for (int t = 0; t < 20; ++t) {
    const auto k1 = gen::invertible_laurent(rng, 4, 0.1).to_trig();
    const auto k2 = gen::invertible_laurent(rng, 4, 0.1).to_trig();
    const auto v1 = is_fredholm(k1, z);
    const auto v2 = is_fredholm(k2, z);
    const auto v12 = is_fredholm(mul(k1, k2), z);
    if (std::holds_alternative<Fredholm>(v12)) {
      check(std::get<Fredholm>(v12).index == std::get<Fredholm>(v1).index + std::get<Fredholm>(v2).index,
            "index additivity");
    }
  }
  return "shift spectrum and index additivity";
}

}  // namespace

std::vector<SuiteResult> run_all() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> suites = {
      {"group_core", suite_order},       {"symbol_algebra", suite_symbol}, {"winding", suite_winding},
      {"wiener_hopf", suite_wiener_hopf}, {"z_oracle", suite_oracle},       {"fredholm_classifier", suite_spectrum},
  };
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : suites) {
    SuiteResult r{name, false, {}};
    try {
      r.detail = fn();
      r.passed = true;
    } catch (const Failure& f) {
      r.detail = f.what;
    } catch (const Error& e) {
      r.detail = std::string(e.name()) + ": " + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace wh::selftest
