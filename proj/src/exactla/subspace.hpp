#pragma once

#include "exactla/matrix.hpp"

namespace stratakit::la {

/// Linear subspace of F^n, stored as the nonzero rows of an RREF matrix so
/// that equal subspaces have equal representations.
class Subspace {
 public:
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace whole(const Field& f, std::size_t ambient);
  static Subspace from_rows(const Matrix& rows);
  static Subspace from_columns(const Matrix& cols) { return from_rows(cols.transpose()); }

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient(); }

  /// Rows = canonical basis vectors.
  const Matrix& basis() const { return basis_; }
  /// Columns = canonical basis vectors (ambient x dim).
  Matrix basis_columns() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Each column of `v` in the subspace?
  bool contains(const Matrix& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates (dim x k) of the columns of `v` with respect to basis();
  /// throws if some column lies outside.
  Matrix coordinates(const Matrix& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Reduce the columns of `v` against the basis (zero the pivot coordinates).
  Matrix reduce(const Matrix& v) const;

  struct Quotient {
    Matrix projection;  ///< (ambient - dim) x ambient
    Matrix section;     ///< ambient x (ambient - dim); projection*section = I
  };
  /// F^n / this, with the canonical complement spanned by the non-pivot
  /// coordinate vectors.
  Quotient quotient() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  void check_ambient(const Subspace& o) const;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace stratakit::la
