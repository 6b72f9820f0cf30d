#pragma once

#include "exactla/field.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stratakit::la {

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RrefResult;
struct Solution;

/// Dense row-major matrix over a Field.  Storage is int64 residues for GF(p)
/// and reduced GMP fractions for Q.
class Matrix {
 public:
  Matrix() : Matrix(Field::gf(2), 0, 0) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  /// Integer entries, reduced into the field.
  Matrix(const Field& f, const std::vector<std::vector<long>>& rows);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_scalars(const Field& f, std::size_t rows, std::size_t cols,
                             const std::vector<Scalar>& entries);
  static Matrix unit_column(const Field& f, std::size_t n, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set(std::size_t r, std::size_t c, long v);
  bool entry_is_zero(std::size_t r, std::size_t c) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  /// this += s * o
  void add_scaled(const Matrix& o, const Scalar& s);

  Matrix transpose() const;
  Matrix kron(const Matrix& o) const;
  Matrix hcat(const Matrix& o) const;
  Matrix vcat(const Matrix& o) const;
  Matrix block_diag(const Matrix& o) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix col(std::size_t j) const { return select_cols({j}); }
  Matrix row(std::size_t i) const { return select_rows({i}); }
  /// Column-major vectorisation (vec(A X B) = (B^T kron A) vec(X)).
  Matrix vec() const;
  static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  RrefResult rref() const;
  std::size_t rank() const;
  /// Columns form a basis of {x : this * x = 0}, in canonical order.
  Matrix null_space() const;
  std::optional<Solution> solve(const Matrix& b) const;
  std::optional<Matrix> inverse() const;
  bool is_invertible() const;

  std::string to_string() const;
  std::vector<std::vector<std::string>> to_strings() const;

  // raw access used by the kernels
  std::vector<std::int64_t>& gf_data() { return g_; }
  const std::vector<std::int64_t>& gf_data() const { return g_; }
  std::vector<mpq_class>& q_data() { return q_; }
  const std::vector<mpq_class>& q_data() const { return q_; }

 private:
  void check_same_shape(const Matrix& o, const char* op) const;
  void check_field(const Matrix& o) const;

  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> g_;
  std::vector<mpq_class> q_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// a * x = b.  `particular` has b.cols() columns; `kernel` columns span
/// the null space of a.
struct Solution {
  Matrix particular;
  Matrix kernel;
};

/// Greedy independent subset of the columns, in order.
std::vector<std::size_t> independent_columns(const Matrix& m);

}  // namespace stratakit::la
