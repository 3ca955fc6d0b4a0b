// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <complex>
#include <random>

#include "wh/error.hpp"
#include "wh/fredholm.hpp"
#include "wh/wiener_hopf.hpp"
#include "wh/winding.hpp"
#include "wh/z_oracle.hpp"

using namespace wh;

namespace {

z::LaurentPolynomial random_laurent(std::size_t span, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Complex> c(span + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return z::LaurentPolynomial(-static_cast<std::int64_t>(span / 2), c);
}

}  // namespace

static void BM_SymbolIndex(benchmark::State& state) {
  const auto k = random_laurent(static_cast<std::size_t>(state.range(0)), 7).to_trig();
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(symbol_index(k, k.group()));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_SymbolIndex)->Arg(4)->Arg(12)->Arg(24);

static void BM_LaurentRoots(benchmark::State& state) {
  const auto p = random_laurent(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(z::laurent_roots(p));
}
BENCHMARK(BM_LaurentRoots)->Arg(4)->Arg(12)->Arg(24);

static void BM_ShiftSpectrum(benchmark::State& state) {
  const auto z = OrderedGroup::integers();
  const auto k = TrigPolynomial::monomial(z, GroupElement{1});
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_grid(k, z, Box{-1.5, 1.5, -1.5, 1.5}, n, n));
}
BENCHMARK(BM_ShiftSpectrum)->Arg(64)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_TruncationNorm(benchmark::State& state) {
  const auto k = random_laurent(6, 13).to_trig();
  const auto w = Window::omega_prefix(OrderedGroup::integers(), static_cast<std::size_t>(state.range(0)));
  const auto m = truncation_matrix(k, w).entries;
  for (auto _ : state) benchmark::DoNotOptimize(linalg::largest_singular_value(m));
}
BENCHMARK(BM_TruncationNorm)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
