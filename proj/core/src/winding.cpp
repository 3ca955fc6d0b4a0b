// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include "wh/winding.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wh/error.hpp"

namespace wh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Lipschitz constant of t -> p(theta with theta_axis = t).
double axis_lipschitz(const TrigPolynomial& p, std::size_t axis) {
  double s = 0.0;
  for (const auto& [xi, c] : p.coeffs()) s += std::abs(c) * std::abs(static_cast<double>(xi[axis]));
  return s;
}

struct Sample {
  double t;
  Complex v;
};

class LoopTracker {
 public:
  LoopTracker(const TrigPolynomial& p, std::size_t axis, const DualPoint& fixed, double floor,
              const AxisWindingOptions& opts)
      : p_(p), axis_(axis), point_(fixed), floor_(floor), opts_(opts), lip_(axis_lipschitz(p, axis)) {}

  Complex at(double t) {
    point_.angles[axis_] = t;
    return p_.eval(point_);
  }

  // Phase change along [a.t, b.t].
  double increment(const Sample& a, const Sample& b, std::size_t depth) {
    const double ma = std::abs(a.v);
    const double mb = std::abs(b.v);
    const double jump = std::arg(b.v / a.v);
    const bool small = std::min(ma, mb) < floor_;
    // The image of the step lies in a disc of radius lip * dt about either
    // endpoint; if that disc excludes 0 the principal increment is exact.
    const bool certified = lip_ * (b.t - a.t) < std::max(ma, mb);
    if (!small && certified && std::abs(jump) <= std::numbers::pi / 2.0) return jump;
    if (depth >= opts_.max_depth) {
      throw PossibleZeroError("symbol modulus below floor " + std::to_string(floor_) + " near t=" +
                              std::to_string(a.t) + " on axis " + std::to_string(axis_));
    }
    const double tm = 0.5 * (a.t + b.t);
    const Sample m{tm, at(tm)};
    return increment(a, m, depth + 1) + increment(m, b, depth + 1);
  }

 private:
  const TrigPolynomial& p_;
  std::size_t axis_;
  DualPoint point_;
  double floor_;
  const AxisWindingOptions& opts_;
  double lip_;
};

}  // namespace

std::int64_t axis_winding(const TrigPolynomial& p, std::size_t axis, const DualPoint& fixed, double floor,
                          const AxisWindingOptions& opts) {
  if (axis >= p.rank()) throw DimensionError("winding axis out of range");
  if (fixed.rank() != p.rank()) throw DimensionError("fixed dual point rank does not match the symbol");
  if (opts.initial_samples < 2) throw PreconditionError("axis winding needs at least 2 initial samples");

  LoopTracker loop(p, axis, fixed, floor, opts);
  const std::size_t n = opts.initial_samples;
  double total = 0.0;
  Sample prev{0.0, loop.at(0.0)};
  const Sample first = prev;
  for (std::size_t k = 1; k <= n; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    // Close the loop on the exact starting value.
    const Sample cur = (k == n) ? Sample{t, first.v} : Sample{t, loop.at(t)};
    total += loop.increment(prev, cur, 0);
    prev = cur;
  }
  const double turns = total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= opts.residual_limit) {
    throw NumericalInconsistency("winding residual " + std::to_string(std::abs(turns - rounded)) +
                                 " exceeds limit on axis " + std::to_string(axis));
  }
  return static_cast<std::int64_t>(rounded);
}

WindingResult winding_vector(const TrigPolynomial& p) {
  const MinModulus cert = refine_min_modulus(p);
  if (!(cert.lower > 0.0)) return NotInvertible{cert};

  const double floor = cert.lower / 2.0;
  const std::size_t r = p.rank();
  std::vector<std::int64_t> w(r);
  const DualPoint origin{std::vector<double>(r, 0.0)};
  for (std::size_t j = 0; j < r; ++j) w[j] = axis_winding(p, j, origin, floor);

  if (r > 1) {
    std::mt19937_64 rng(0x5eedf00dULL);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (std::size_t j = 0; j < r; ++j) {
      for (int trial = 0; trial < 3; ++trial) {
        DualPoint slice{std::vector<double>(r)};
        for (auto& a : slice.angles) a = angle(rng);
        const auto wj = axis_winding(p, j, slice, floor);
        if (wj != w[j]) {
          throw NumericalInconsistency("axis " + std::to_string(j) + " winding " + std::to_string(wj) +
                                       " on a random slice differs from " + std::to_string(w[j]) + " at the origin");
        }
      }
    }
  }
  return WindingVector{GroupElement(std::move(w)), cert};
}

SymbolIndex symbol_index(const TrigPolynomial& p, const OrderedGroup& group) {
  if (group.rank() != p.rank()) throw DimensionError("symbol rank does not match the group");
  auto wv = winding_vector(p);
  if (auto* bad = std::get_if<NotInvertible>(&wv)) return SymbolIndex{*bad, std::nullopt};
  const auto& vec = std::get<WindingVector>(wv);
  return SymbolIndex{group.rotation_index(vec.w), vec.w};
}

}  // namespace wh
