// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded random inputs for property checks.

#ifndef WH_TOOLS_GENERATORS_HPP
#define WH_TOOLS_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "wh/group.hpp"
#include "wh/symbol.hpp"
#include "wh/z_oracle.hpp"

namespace wh::gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Uniform in the square [-b, b]^2.
inline Complex complex_in_square(Rng& rng, double b) { return {uniform(rng, -b, b), uniform(rng, -b, b)}; }

/// Uniform in the disc of radius r.
inline Complex complex_in_disc(Rng& rng, double r) {
  return std::polar(r * std::sqrt(uniform(rng, 0.0, 1.0)), uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

inline GroupElement element(Rng& rng, std::size_t rank, std::int64_t bound) {
  std::vector<std::int64_t> e(rank);
  for (auto& x : e) x = uniform_int(rng, -bound, bound);
  return GroupElement(std::move(e));
}

/// Laurent polynomial with degree span at most `max_span` and coefficients
/// uniform in [-b, b]^2.
inline z::LaurentPolynomial laurent(Rng& rng, std::int64_t max_span, double b = 2.0) {
  const auto span = uniform_int(rng, 0, max_span);
  const auto n_min = uniform_int(rng, -span, 0);
  std::vector<Complex> c(static_cast<std::size_t>(span + 1));
  for (auto& x : c) x = complex_in_square(rng, b);
  return z::LaurentPolynomial(n_min, std::move(c));
}

/// Draws Laurent polynomials until one has certified min modulus above
/// `min_modulus`.
inline z::LaurentPolynomial invertible_laurent(Rng& rng, std::int64_t max_span, double min_modulus, double b = 2.0) {
  for (;;) {
    auto p = laurent(rng, max_span, b);
    if (p.is_zero()) continue;
    if (certified_min_modulus(p.to_trig()).lower > min_modulus) return p;
  }
}

/// `terms` random coefficients at exponents with coordinates in
/// [-bound, bound].
inline TrigPolynomial trig(Rng& rng, const OrderedGroup& g, std::size_t terms, std::int64_t bound, double b = 1.0) {
  TrigPolynomial::CoeffMap m;
  while (m.size() < terms) m[element(rng, g.rank(), bound)] = complex_in_square(rng, b);
  return TrigPolynomial(g, std::move(m));
}

/// Laurent polynomial with prescribed roots, scaled to unit leading
/// coefficient: z^shift prod (z - r).
inline z::LaurentPolynomial with_roots(std::int64_t shift, const std::vector<Complex>& roots) {
  return z::LaurentPolynomial::from_roots(1.0, shift, roots);
}

}  // namespace wh::gen

#endif  // WH_TOOLS_GENERATORS_HPP
