// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WH_FREDHOLM_HPP
#define WH_FREDHOLM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wh/group.hpp"
#include "wh/symbol.hpp"

namespace wh {

// ---------------------------------------------------------------------------
// Fredholm verdicts

struct Fredholm {
  std::int64_t index;  ///< Ind W_k = -ind(symbol)
  GroupElement winding;
};

struct SymbolVanishes {
  DualPoint witness;  ///< grid argmin of |symbol|
  double grid_min;
};

struct InfiniteCharacterIndex {
  GroupElement winding;
};

using FredholmVerdict = std::variant<Fredholm, SymbolVanishes, InfiniteCharacterIndex>;

/// W_k is Fredholm iff its symbol is invertible with a winding vector of
/// finite rotation index; the index is then minus that rotation index.
FredholmVerdict is_fredholm(const TrigPolynomial& k, const OrderedGroup& group);

std::string describe(const FredholmVerdict& v);

// ---------------------------------------------------------------------------
// Spectral classification

enum class CellLabel : std::uint8_t { Range = 0, EssentialHole = 1, FredholmHole = 2, Resolvent = 3, Unbounded = 4 };

const char* to_string(CellLabel l) noexcept;

/// Sampled image of the symbol with the tolerance that turns it into a
/// closed set of the plane.
struct RangeSample {
  std::vector<Complex> values;
  double step = 0.0;       ///< dual-grid step used
  double tolerance = 0.0;  ///< max(requested floor, L * step)
};

/// Samples the symbol on a dual grid whose step is at most `max_step` and,
/// when the point budget allows, small enough that L * step <= floor.
RangeSample sample_range(const TrigPolynomial& k, double floor, double max_step = kDefaultGridStep,
                         std::size_t budget = std::size_t{1} << 20);

struct LambdaClass {
  CellLabel label;            ///< never Unbounded
  std::int64_t index = 0;     ///< Fredholm index of W_k - lambda when label is FredholmHole
  bool boundary_ambiguous = false;  ///< within 2x tolerance of the sampled range
  double range_distance = 0.0;
};

struct ClassifyOptions {
  double range_tolerance = 0.0;  ///< 0 selects L * grid_step
  double grid_step = kDefaultGridStep;
};

/// Range if lambda is within the tolerance of the sampled image (or within
/// twice it, flagged ambiguous); otherwise the Fredholm verdict of
/// k - lambda decides EssentialHole / FredholmHole(n) / Resolvent.
LambdaClass classify_lambda(const TrigPolynomial& k, const OrderedGroup& group, Complex lambda,
                            const ClassifyOptions& opts = {});
LambdaClass classify_lambda(const TrigPolynomial& k, const OrderedGroup& group, Complex lambda,
                            const RangeSample& range);

struct Box {
  double re0, re1, im0, im1;
};

struct Hole {
  int component;
  CellLabel label;
  std::int64_t index;  ///< nonzero only for FredholmHole
  std::size_t representative;
  Complex lambda;
  bool ambiguous;
};

/// Labelled rectangular grid over a box of the complex plane. Cell (ix, iy)
/// has flat index iy * nx + ix and center re0 + (ix + 1/2) dx + i (im0 +
/// (iy + 1/2) dy).
class SpectrumGrid {
 public:
  const Box& box() const noexcept { return box_; }
  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  std::size_t size() const noexcept { return labels_.size(); }
  double dx() const noexcept { return (box_.re1 - box_.re0) / static_cast<double>(nx_); }
  double dy() const noexcept { return (box_.im1 - box_.im0) / static_cast<double>(ny_); }
  double cell_diagonal() const noexcept;
  Complex center(std::size_t cell) const;

  const std::vector<CellLabel>& labels() const noexcept { return labels_; }
  /// Component id per cell, -1 for Range cells.
  const std::vector<int>& components() const noexcept { return components_; }
  const std::vector<Hole>& holes() const noexcept { return holes_; }
  double range_tolerance() const noexcept { return range_tolerance_; }
  double dual_step() const noexcept { return dual_step_; }

  /// Range and EssentialHole cells.
  const std::vector<bool>& essential_spectrum() const noexcept { return sigma_e_; }
  /// essential_spectrum plus FredholmHole cells.
  const std::vector<bool>& spectrum() const noexcept { return sigma_; }
  /// Identical to spectrum(): every Fredholm point of index 0 is resolvent.
  const std::vector<bool>& weyl_spectrum() const noexcept { return sigma_; }

  /// "cell_re,cell_im,label,index" rows.
  std::string to_csv() const;

 private:
  friend SpectrumGrid spectrum_grid(const TrigPolynomial&, const OrderedGroup&, std::optional<Box>, std::size_t,
                                    std::size_t);

  Box box_{};
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  std::vector<CellLabel> labels_;
  std::vector<int> components_;
  std::vector<Hole> holes_;
  std::vector<bool> sigma_e_;
  std::vector<bool> sigma_;
  double range_tolerance_ = 0.0;
  double dual_step_ = 0.0;
};

/// Bounding box of the sampled range with a 10% margin (at least 0.25).
Box auto_box(const TrigPolynomial& k);

/// Range cells: within twice the range tolerance of a sampled symbol value,
/// where tolerance = max(cell diagonal, L h). Non-range cells are split into
/// 4-connected components; the one touching the border is Unbounded and
/// every other takes the classification of its most interior cell. Throws
/// ResolutionError below 16x16 and PreconditionError if the box does not
/// contain the sampled range.
SpectrumGrid spectrum_grid(const TrigPolynomial& k, const OrderedGroup& group, std::optional<Box> box,
                           std::size_t nx, std::size_t ny);

struct InclusionReport {
  std::size_t range_outside_sigma = 0;
  std::size_t sigma_outside_hull = 0;
  bool sigma_e_connected = false;
  bool sigma_connected = false;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks Range within sigma, sigma within the closed convex hull of an
/// independently resampled range inflated by two cell diagonals, and
/// 4-connectedness of the essential spectrum and the spectrum.
InclusionReport hull_and_inclusion_report(const TrigPolynomial& k, const OrderedGroup& group, const SpectrumGrid& grid);

/// Number of 4-connected components of a cell mask.
std::size_t count_components(const std::vector<bool>& mask, std::size_t nx, std::size_t ny);

}  // namespace wh

#endif  // WH_FREDHOLM_HPP
