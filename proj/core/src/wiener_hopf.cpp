// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include "wh/wiener_hopf.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "wh/error.hpp"

namespace wh {

namespace {

constexpr std::size_t kMaxWindow = 2048;

void check_window_size(std::size_t n) {
  if (n == 0) throw PreconditionError("window is empty");
  if (n > kMaxWindow) {
    throw CapacityError("window of " + std::to_string(n) + " elements exceeds the dense cap " +
                        std::to_string(kMaxWindow));
  }
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << 'i';
  return os.str();
}

}  // namespace

PositiveVector::PositiveVector(OrderedGroup group, EntryMap entries) : group_(std::move(group)) {
  for (auto& [chi, v] : entries) {
    if (!group_.is_positive(chi)) throw PreconditionError("vector key " + chi.to_string() + " is outside X_+");
    if (v != Complex(0.0, 0.0)) entries_.emplace(chi, v);
  }
}

PositiveVector PositiveVector::indicator(OrderedGroup group, GroupElement chi) {
  EntryMap m;
  m.emplace(std::move(chi), Complex(1.0, 0.0));
  return PositiveVector(std::move(group), std::move(m));
}

Complex PositiveVector::at(const GroupElement& chi) const {
  const auto it = entries_.find(chi);
  return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
}

double PositiveVector::norm() const noexcept {
  double s = 0.0;
  for (const auto& kv : entries_) s += std::norm(kv.second);
  return std::sqrt(s);
}

PositiveVector apply(const TrigPolynomial& k, const PositiveVector& g) {
  if (!(k.group() == g.group())) throw DimensionError("kernel and vector belong to different groups");
  PositiveVector::EntryMap out;
  for (const auto& [xi, gv] : g.entries()) {
    for (const auto& [eta, kv] : k.coeffs()) {
      GroupElement chi = eta + xi;
      if (k.group().is_positive(chi)) out[std::move(chi)] += kv * gv;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == Complex(0.0, 0.0); });
  return PositiveVector(g.group(), std::move(out));
}

Window Window::omega_prefix(const OrderedGroup& group, std::size_t n) {
  check_window_size(n);
  return Window(Kind::OmegaPrefix, group.positive_prefix(n), "OmegaPrefix(" + std::to_string(n) + ")");
}

Window Window::box(const OrderedGroup& group, GroupElement lo, GroupElement hi) {
  group.check_rank(lo);
  group.check_rank(hi);
  const std::size_t r = group.rank();
  for (std::size_t j = 0; j < r; ++j) {
    if (lo[j] > hi[j]) throw PreconditionError("box window has lo > hi on axis " + std::to_string(j));
  }
  std::vector<GroupElement> elems;
  std::vector<std::int64_t> cur(lo.exponents());
  for (;;) {
    GroupElement e(cur);
    if (group.is_positive(e)) {
      elems.push_back(std::move(e));
      if (elems.size() > kMaxWindow) check_window_size(elems.size());
    }
    std::size_t j = r;
    while (j-- > 0) {
      if (++cur[j] <= hi[j]) break;
      cur[j] = lo[j];
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  check_window_size(elems.size());
  return Window(Kind::Box, std::move(elems), "Box(" + lo.to_string() + "," + hi.to_string() + ")");
}

std::string Window::describe() const { return description_; }

std::string TruncationMatrix::to_csv() const {
  std::ostringstream os;
  for (const auto& e : window.elements()) os << ",\"" << e.to_string() << '"';
  os << '\n';
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    os << '"' << window[static_cast<std::size_t>(i)].to_string() << '"';
    for (Eigen::Index j = 0; j < entries.cols(); ++j) os << ',' << format_complex(entries(i, j));
    os << '\n';
  }
  return os.str();
}

TruncationMatrix truncation_matrix(const TrigPolynomial& k, const Window& window) {
  check_window_size(window.size());
  const auto n = static_cast<Eigen::Index>(window.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = k.coeff(window[static_cast<std::size_t>(i)] - window[static_cast<std::size_t>(j)]);
    }
  }
  return TruncationMatrix{window, std::move(m)};
}

ColumnSection column_section(const TrigPolynomial& k, const Window& window) {
  check_window_size(window.size());
  const OrderedGroup& g = k.group();
  std::set<GroupElement> reach;
  for (const auto& xi : window.elements()) {
    for (const auto& kv : k.coeffs()) {
      GroupElement chi = kv.first + xi;
      if (g.is_positive(chi)) reach.insert(std::move(chi));
    }
  }
  std::vector<GroupElement> rows(reach.begin(), reach.end());
  std::sort(rows.begin(), rows.end(),
            [&g](const GroupElement& a, const GroupElement& b) { return g.compare(a, b) < 0; });
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(window.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < window.size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = k.coeff(rows[i] - window[j]);
    }
  }
  return ColumnSection{std::move(rows), window, std::move(m)};
}

TrigPolynomial adjoint_coeffs(const TrigPolynomial& k) { return conjugate(k); }

std::vector<double> operator_norm_lower(const TrigPolynomial& k, const std::vector<std::size_t>& sizes) {
  std::vector<Window> windows;
  windows.reserve(sizes.size());
  for (auto n : sizes) windows.push_back(Window::omega_prefix(k.group(), n));
  return operator_norm_lower(k, windows);
}

std::vector<double> operator_norm_lower(const TrigPolynomial& k, const std::vector<Window>& windows) {
  std::vector<double> out;
  out.reserve(windows.size());
  for (const auto& w : windows) out.push_back(linalg::largest_singular_value(truncation_matrix(k, w).entries));
  return out;
}

QuadratureEntry quadrature_entry_check(const TrigPolynomial& k, const GroupElement& chi, const GroupElement& xi,
                                       std::size_t nodes_per_axis) {
  k.group().check_rank(chi);
  k.group().check_rank(xi);
  const std::int64_t need = 2 * (k.bandwidth() + std::max(chi.max_abs(), xi.max_abs()));
  if (static_cast<std::int64_t>(nodes_per_axis) <= need) {
    throw AliasingError("quadrature needs more than " + std::to_string(need) + " nodes per axis, got " +
                        std::to_string(nodes_per_axis));
  }
  const DualGrid grid(k.rank(), nodes_per_axis);
  const auto phi = grid.evaluate(k);
  const GroupElement shift = xi - chi;
  Complex sum(0.0, 0.0);
  for (std::size_t f = 0; f < grid.size(); ++f) {
    const DualPoint pt = grid.point(f);
    double phase = 0.0;
    for (std::size_t j = 0; j < pt.rank(); ++j) phase += static_cast<double>(shift[j]) * pt.angles[j];
    sum += phi[f] * std::polar(1.0, phase);
  }
  return QuadratureEntry{k.coeff(chi - xi), sum / static_cast<double>(grid.size())};
}

namespace linalg {

std::vector<double> singular_values(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return {};
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

double largest_singular_value(const Eigen::MatrixXcd& m) {
  const auto s = singular_values(m);
  return s.empty() ? 0.0 : s.front();
}

double smallest_singular_value(const Eigen::MatrixXcd& m) {
  const auto s = singular_values(m);
  return s.empty() ? 0.0 : s.back();
}

}  // namespace linalg

}  // namespace wh
