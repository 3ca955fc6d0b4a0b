// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WH_WINDING_HPP
#define WH_WINDING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "wh/group.hpp"
#include "wh/symbol.hpp"

namespace wh {

struct AxisWindingOptions {
  std::size_t initial_samples = 64;
  std::size_t max_depth = 20;   ///< doublings allowed per initial interval
  double residual_limit = 0.01;
};

/// Winding number about 0 of t -> p(theta with theta_j = t), t in [0, 2pi].
///
/// `fixed` supplies the other coordinates (its j-th entry is ignored). Phase
/// increments are accumulated over an adaptively refined sample set: a step
/// is split while its principal phase jump exceeds pi/2, while a sample's
/// modulus is below `floor`, or while the Lipschitz bound cannot exclude 0
/// from the step's image.
///
/// Throws PossibleZeroError if the modulus stays below `floor` at maximum
/// depth and NumericalInconsistency if the total is not an integer multiple
/// of 2pi within `residual_limit`.
std::int64_t axis_winding(const TrigPolynomial& p, std::size_t axis, const DualPoint& fixed, double floor,
                          const AxisWindingOptions& opts = {});

/// Certificate that the symbol vanishes (to grid resolution) somewhere.
struct NotInvertible {
  MinModulus witness;
};

/// Exponent vector of the character in the Bohr-van Kampen factorization of
/// an invertible symbol, with the min-modulus certificate that admitted it.
struct WindingVector {
  GroupElement w;
  MinModulus certificate;
};

using WindingResult = std::variant<WindingVector, NotInvertible>;

/// Axis windings with the other coordinates at 0, re-checked on three
/// pseudo-random slices per axis (fixed seed). A slice disagreement raises
/// NumericalInconsistency.
WindingResult winding_vector(const TrigPolynomial& p);

/// ind of the symbol: rotation index of its winding vector in `group`.
struct SymbolIndex {
  std::variant<IndexValue, NotInvertible> value;
  std::optional<GroupElement> winding;

  bool invertible() const noexcept { return std::holds_alternative<IndexValue>(value); }
};

SymbolIndex symbol_index(const TrigPolynomial& p, const OrderedGroup& group);

}  // namespace wh

#endif  // WH_WINDING_HPP
