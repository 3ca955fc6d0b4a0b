// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WH_WIENER_HOPF_HPP
#define WH_WIENER_HOPF_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wh/group.hpp"
#include "wh/symbol.hpp"

namespace wh {

/// A finitely supported vector of l_2(X_+). Keys are positive; zeros are
/// not stored.
class PositiveVector {
 public:
  using EntryMap = std::map<GroupElement, Complex>;

  explicit PositiveVector(OrderedGroup group) : group_(std::move(group)) {}
  /// Throws PreconditionError if a key lies outside X_+.
  PositiveVector(OrderedGroup group, EntryMap entries);

  static PositiveVector indicator(OrderedGroup group, GroupElement chi);

  const OrderedGroup& group() const noexcept { return group_; }
  const EntryMap& entries() const noexcept { return entries_; }
  Complex at(const GroupElement& chi) const;
  bool empty() const noexcept { return entries_.empty(); }
  double norm() const noexcept;

  friend bool operator==(const PositiveVector&, const PositiveVector&) = default;

 private:
  OrderedGroup group_;
  EntryMap entries_;
};

/// (W_k g)(chi) = sum_xi k(chi - xi) g(xi), kept only for chi in X_+.
PositiveVector apply(const TrigPolynomial& k, const PositiveVector& g);

/// A finite set of X_+ with a fixed enumeration order.
class Window {
 public:
  enum class Kind { OmegaPrefix, Box };

  /// The n smallest elements of X_+ (rank 1), increasing.
  static Window omega_prefix(const OrderedGroup& group, std::size_t n);
  /// {xi in X_+ : lo <= xi <= hi componentwise}, lexicographic in the
  /// coordinates.
  static Window box(const OrderedGroup& group, GroupElement lo, GroupElement hi);

  Kind kind() const noexcept { return kind_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  std::string describe() const;

 private:
  Window(Kind kind, std::vector<GroupElement> elements, std::string description)
      : kind_(kind), elements_(std::move(elements)), description_(std::move(description)) {}

  Kind kind_;
  std::vector<GroupElement> elements_;
  std::string description_;
};

/// Matrix of W_k compressed to a window: M(i, j) = k(chi_i - chi_j).
struct TruncationMatrix {
  Window window;
  Eigen::MatrixXcd entries;

  /// Header row of quoted window elements, then one line per row: the row
  /// element followed by entries written as re+imi.
  std::string to_csv() const;
};

TruncationMatrix truncation_matrix(const TrigPolynomial& k, const Window& window);

/// The restriction of W_k to vectors supported in the window, as a map into
/// l_2(X_+): columns indexed by the window, rows by every positive element
/// the image can reach. Its smallest singular value is the lower bound of
/// W_k on the window subspace.
struct ColumnSection {
  std::vector<GroupElement> rows;
  Window columns;
  Eigen::MatrixXcd entries;
};

ColumnSection column_section(const TrigPolynomial& k, const Window& window);

/// conjugate(k); its truncations are the adjoints of those of k.
TrigPolynomial adjoint_coeffs(const TrigPolynomial& k);

/// Largest singular value of the truncation on each OmegaPrefix(N).
std::vector<double> operator_norm_lower(const TrigPolynomial& k, const std::vector<std::size_t>& sizes);
/// Same over caller-supplied windows.
std::vector<double> operator_norm_lower(const TrigPolynomial& k, const std::vector<Window>& windows);

struct QuadratureEntry {
  Complex toeplitz;    ///< k(chi - xi)
  Complex quadrature;  ///< <phi xi, chi> by the M^r-point trapezoid rule
};

/// Computes <symbol * e_xi, e_chi> in L^2(T^r) by the uniform product
/// trapezoid rule with M nodes per axis, alongside k(chi - xi). Throws
/// AliasingError unless M > 2 (bandwidth(k) + max(|chi|, |xi|)).
QuadratureEntry quadrature_entry_check(const TrigPolynomial& k, const GroupElement& chi, const GroupElement& xi,
                                       std::size_t nodes_per_axis);

namespace linalg {

/// Singular values in decreasing order.
std::vector<double> singular_values(const Eigen::MatrixXcd& m);
double largest_singular_value(const Eigen::MatrixXcd& m);
double smallest_singular_value(const Eigen::MatrixXcd& m);

}  // namespace linalg

}  // namespace wh

#endif  // WH_WIENER_HOPF_HPP
