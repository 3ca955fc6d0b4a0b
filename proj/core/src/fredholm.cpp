// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include "wh/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <sstream>

#include "wh/error.hpp"
#include "wh/parallel.hpp"
#include "wh/winding.hpp"

namespace wh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double distance_to_samples(Complex lambda, const std::vector<Complex>& samples) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : samples) best = std::min(best, std::norm(v - lambda));
  return std::sqrt(best);
}

// ----- planar convex hull (Andrew's monotone chain) -----

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

std::vector<Complex> convex_hull(std::vector<Complex> pts) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Complex> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

double segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Distance from p to the convex polygon (0 inside). Counter-clockwise hull.
double hull_distance(Complex p, const std::vector<Complex>& hull) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return std::abs(p - hull[0]);
  if (hull.size() == 2) return segment_distance(p, hull[0], hull[1]);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i];
    const Complex b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0) inside = false;
    best = std::min(best, segment_distance(p, a, b));
  }
  return inside ? 0.0 : best;
}

}  // namespace

// ---------------------------------------------------------------------------

FredholmVerdict is_fredholm(const TrigPolynomial& k, const OrderedGroup& group) {
  const SymbolIndex si = symbol_index(k, group);
  if (const auto* bad = std::get_if<NotInvertible>(&si.value)) {
    return SymbolVanishes{bad->witness.argmin, bad->witness.grid_min};
  }
  const auto& ind = std::get<IndexValue>(si.value);
  if (!ind.is_finite()) return InfiniteCharacterIndex{*si.winding};
  return Fredholm{-ind.value(), *si.winding};
}

std::string describe(const FredholmVerdict& v) {
  std::ostringstream os;
  if (const auto* f = std::get_if<Fredholm>(&v)) {
    os << "Fredholm(index=" << f->index << ", winding=" << f->winding.to_string() << ")";
  } else if (const auto* z = std::get_if<SymbolVanishes>(&v)) {
    os << "NotFredholm(SymbolVanishes, min |symbol| on grid " << z->grid_min << ")";
  } else {
    os << "NotFredholm(InfiniteCharacterIndex, winding=" << std::get<InfiniteCharacterIndex>(v).winding.to_string()
       << ")";
  }
  return os.str();
}

const char* to_string(CellLabel l) noexcept {
  switch (l) {
    case CellLabel::Range: return "Range";
    case CellLabel::EssentialHole: return "EssentialHole";
    case CellLabel::FredholmHole: return "FredholmHole";
    case CellLabel::Resolvent: return "Resolvent";
    case CellLabel::Unbounded: return "Unbounded";
  }
  return "?";
}

RangeSample sample_range(const TrigPolynomial& k, double floor, double max_step, std::size_t budget) {
  const double lip = k.lipschitz_bound();
  double h = max_step;
  if (lip > 0.0 && floor > 0.0) h = std::min(h, floor / lip);
  auto per_axis = static_cast<std::size_t>(std::ceil(kTwoPi / h - 1e-9));
  const auto cap = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(budget), 1.0 / static_cast<double>(k.rank())) + 1e-9));
  per_axis = std::clamp<std::size_t>(per_axis, 1, std::max<std::size_t>(cap, 1));
  const DualGrid grid(k.rank(), per_axis);
  RangeSample out;
  out.values = grid.evaluate(k);
  out.step = grid.step();
  out.tolerance = std::max({floor, lip * out.step, 1e-12});
  return out;
}

LambdaClass classify_lambda(const TrigPolynomial& k, const OrderedGroup& group, Complex lambda,
                            const RangeSample& range) {
  LambdaClass out{};
  out.range_distance = distance_to_samples(lambda, range.values);
  if (out.range_distance <= 2.0 * range.tolerance) {
    out.label = CellLabel::Range;
    out.boundary_ambiguous = out.range_distance > range.tolerance;
    return out;
  }
  const FredholmVerdict v = is_fredholm(sub_scalar(k, lambda), group);
  if (const auto* f = std::get_if<Fredholm>(&v)) {
    out.label = f->index == 0 ? CellLabel::Resolvent : CellLabel::FredholmHole;
    out.index = f->index;
  } else if (std::holds_alternative<InfiniteCharacterIndex>(v)) {
    out.label = CellLabel::EssentialHole;
  } else {
    // The symbol minus lambda vanishes between range samples: lambda is in
    // the range after all.
    out.label = CellLabel::Range;
    out.boundary_ambiguous = true;
  }
  return out;
}

LambdaClass classify_lambda(const TrigPolynomial& k, const OrderedGroup& group, Complex lambda,
                            const ClassifyOptions& opts) {
  RangeSample rs = sample_range(k, 0.0, opts.grid_step, kMaxGridPoints);
  if (opts.range_tolerance > 0.0) rs.tolerance = opts.range_tolerance;
  return classify_lambda(k, group, lambda, rs);
}

double SpectrumGrid::cell_diagonal() const noexcept { return std::hypot(dx(), dy()); }

Complex SpectrumGrid::center(std::size_t cell) const {
  const auto ix = cell % nx_;
  const auto iy = cell / nx_;
  return {box_.re0 + (static_cast<double>(ix) + 0.5) * dx(), box_.im0 + (static_cast<double>(iy) + 0.5) * dy()};
}

std::string SpectrumGrid::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "re,im,label,index\n";
  std::vector<std::int64_t> comp_index(holes_.empty() ? 0 : static_cast<std::size_t>(holes_.back().component) + 1, 0);
  for (const auto& h : holes_) comp_index[static_cast<std::size_t>(h.component)] = h.index;
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    const Complex z = center(c);
    const int comp = components_[c];
    const std::int64_t idx = (labels_[c] == CellLabel::FredholmHole && comp >= 0) ? comp_index[static_cast<std::size_t>(comp)] : 0;
    os << z.real() << ',' << z.imag() << ',' << static_cast<int>(labels_[c]) << ',' << idx << '\n';
  }
  return os.str();
}

Box auto_box(const TrigPolynomial& k) {
  const RangeSample rs = sample_range(k, 0.0);
  double re0 = std::numeric_limits<double>::infinity(), re1 = -re0, im0 = re0, im1 = -re0;
  for (const auto& v : rs.values) {
    re0 = std::min(re0, v.real());
    re1 = std::max(re1, v.real());
    im0 = std::min(im0, v.imag());
    im1 = std::max(im1, v.imag());
  }
  const double margin = std::max(0.1 * std::max(re1 - re0, im1 - im0), 0.25);
  return Box{re0 - margin, re1 + margin, im0 - margin, im1 + margin};
}

SpectrumGrid spectrum_grid(const TrigPolynomial& k, const OrderedGroup& group, std::optional<Box> box_opt,
                           std::size_t nx, std::size_t ny) {
  if (nx < 16 || ny < 16) throw ResolutionError("spectrum grid resolution must be at least 16x16");
  SpectrumGrid g;
  g.box_ = box_opt ? *box_opt : auto_box(k);
  if (!(g.box_.re1 > g.box_.re0 && g.box_.im1 > g.box_.im0)) throw PreconditionError("spectrum box is empty");
  g.nx_ = nx;
  g.ny_ = ny;
  const std::size_t n = nx * ny;
  const double dx = g.dx();
  const double dy = g.dy();

  const RangeSample rs = sample_range(k, g.cell_diagonal());
  g.range_tolerance_ = rs.tolerance;
  g.dual_step_ = rs.step;
  const double thick = 2.0 * rs.tolerance;

  // Range cells.
  std::vector<bool> range(n, false);
  const auto clamp_idx = [](double v, std::size_t hi) {
    return static_cast<std::size_t>(std::clamp(v, 0.0, static_cast<double>(hi - 1)));
  };
  for (const auto& v : rs.values) {
    if (v.real() < g.box_.re0 || v.real() > g.box_.re1 || v.imag() < g.box_.im0 || v.imag() > g.box_.im1) {
      throw PreconditionError("spectrum box does not contain the symbol range");
    }
    const std::size_t x0 = clamp_idx(std::floor((v.real() - thick - g.box_.re0) / dx - 0.5), nx);
    const std::size_t x1 = clamp_idx(std::ceil((v.real() + thick - g.box_.re0) / dx - 0.5), nx);
    const std::size_t y0 = clamp_idx(std::floor((v.imag() - thick - g.box_.im0) / dy - 0.5), ny);
    const std::size_t y1 = clamp_idx(std::ceil((v.imag() + thick - g.box_.im0) / dy - 0.5), ny);
    for (std::size_t iy = y0; iy <= y1; ++iy) {
      for (std::size_t ix = x0; ix <= x1; ++ix) {
        const std::size_t c = iy * nx + ix;
        if (!range[c] && std::abs(g.center(c) - v) <= thick) range[c] = true;
      }
    }
  }

  // Components of the complement.
  g.components_.assign(n, -1);
  std::vector<bool> touches_border;
  int next_id = 0;
  std::deque<std::size_t> queue;
  const auto neighbours = [nx, ny](std::size_t c, auto&& visit) {
    const std::size_t ix = c % nx;
    const std::size_t iy = c / nx;
    if (ix > 0) visit(c - 1);
    if (ix + 1 < nx) visit(c + 1);
    if (iy > 0) visit(c - nx);
    if (iy + 1 < ny) visit(c + nx);
  };
  const auto on_border = [nx, ny](std::size_t c) {
    const std::size_t ix = c % nx;
    const std::size_t iy = c / nx;
    return ix == 0 || iy == 0 || ix + 1 == nx || iy + 1 == ny;
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (range[s] || g.components_[s] >= 0) continue;
    const int id = next_id++;
    touches_border.push_back(false);
    g.components_[s] = id;
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t c = queue.front();
      queue.pop_front();
      if (on_border(c)) touches_border[static_cast<std::size_t>(id)] = true;
      neighbours(c, [&](std::size_t m) {
        if (!range[m] && g.components_[m] < 0) {
          g.components_[m] = id;
          queue.push_back(m);
        }
      });
    }
  }

  // Distance (in 4-steps) from the range, for choosing interior cells.
  std::vector<int> depth(n, -1);
  for (std::size_t c = 0; c < n; ++c) {
    if (range[c]) {
      depth[c] = 0;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    neighbours(c, [&](std::size_t m) {
      if (depth[m] < 0) {
        depth[m] = depth[c] + 1;
        queue.push_back(m);
      }
    });
  }
  std::vector<std::size_t> rep(static_cast<std::size_t>(next_id), n);
  for (std::size_t c = 0; c < n; ++c) {
    const int id = g.components_[c];
    if (id < 0) continue;
    auto& r = rep[static_cast<std::size_t>(id)];
    if (r == n || depth[c] > depth[r]) r = c;
  }

  std::vector<int> bounded;
  for (int id = 0; id < next_id; ++id) {
    if (!touches_border[static_cast<std::size_t>(id)]) bounded.push_back(id);
  }
  std::vector<LambdaClass> verdicts(bounded.size());
  parallel_for(bounded.size(), [&](std::size_t i) {
    const Complex lambda = g.center(rep[static_cast<std::size_t>(bounded[i])]);
    verdicts[i] = classify_lambda(k, group, lambda, rs);
  });

  std::vector<CellLabel> comp_label(static_cast<std::size_t>(next_id), CellLabel::Unbounded);
  for (std::size_t i = 0; i < bounded.size(); ++i) {
    const int id = bounded[i];
    LambdaClass v = verdicts[i];
    // A representative that turns out to sit on the range makes the whole
    // hole part of the essential spectrum.
    if (v.label == CellLabel::Range) v.label = CellLabel::EssentialHole;
    comp_label[static_cast<std::size_t>(id)] = v.label;
    const std::size_t r = rep[static_cast<std::size_t>(id)];
    g.holes_.push_back(Hole{id, v.label, v.label == CellLabel::FredholmHole ? v.index : 0, r, g.center(r),
                            v.boundary_ambiguous});
  }

  g.labels_.resize(n);
  g.sigma_e_.assign(n, false);
  g.sigma_.assign(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    const CellLabel l = range[c] ? CellLabel::Range : comp_label[static_cast<std::size_t>(g.components_[c])];
    g.labels_[c] = l;
    g.sigma_e_[c] = l == CellLabel::Range || l == CellLabel::EssentialHole;
    g.sigma_[c] = g.sigma_e_[c] || l == CellLabel::FredholmHole;
  }
  return g;
}

std::size_t count_components(const std::vector<bool>& mask, std::size_t nx, std::size_t ny) {
  std::vector<bool> seen(mask.size(), false);
  std::size_t count = 0;
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < mask.size(); ++s) {
    if (!mask[s] || seen[s]) continue;
    ++count;
    seen[s] = true;
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t c = queue.front();
      queue.pop_front();
      const std::size_t ix = c % nx;
      const std::size_t iy = c / nx;
      const auto visit = [&](std::size_t m) {
        if (mask[m] && !seen[m]) {
          seen[m] = true;
          queue.push_back(m);
        }
      };
      if (ix > 0) visit(c - 1);
      if (ix + 1 < nx) visit(c + 1);
      if (iy > 0) visit(c - nx);
      if (iy + 1 < ny) visit(c + nx);
    }
  }
  return count;
}

InclusionReport hull_and_inclusion_report(const TrigPolynomial& k, const OrderedGroup& group, const SpectrumGrid& grid) {
  group.check_rank(GroupElement::zero(k.rank()));
  InclusionReport rep;
  const auto& labels = grid.labels();
  const auto& sigma = grid.spectrum();
  const auto& sigma_e = grid.essential_spectrum();

  const RangeSample rs = sample_range(k, grid.cell_diagonal());
  const auto hull = convex_hull(rs.values);
  // Range cells lie within 2 tol of a sample, hence of the hull.
  const double inflate = 2.0 * std::max(grid.cell_diagonal(), rs.tolerance) + 1e-12;

  for (std::size_t c = 0; c < labels.size(); ++c) {
    if (labels[c] == CellLabel::Range && !sigma[c]) ++rep.range_outside_sigma;
    if (sigma[c] && hull_distance(grid.center(c), hull) > inflate) ++rep.sigma_outside_hull;
  }
  rep.sigma_e_connected = count_components(sigma_e, grid.nx(), grid.ny()) == 1;
  rep.sigma_connected = count_components(sigma, grid.nx(), grid.ny()) == 1;

  if (rep.range_outside_sigma) rep.violations.push_back(std::to_string(rep.range_outside_sigma) + " range cells outside sigma");
  if (rep.sigma_outside_hull) rep.violations.push_back(std::to_string(rep.sigma_outside_hull) + " sigma cells outside the inflated hull");
  if (!rep.sigma_e_connected) rep.violations.push_back("essential spectrum is not connected");
  if (!rep.sigma_connected) rep.violations.push_back("spectrum is not connected");
  return rep;
}

}  // namespace wh
