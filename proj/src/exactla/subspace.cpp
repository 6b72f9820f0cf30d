#include "exactla/subspace.hpp"

#include <numeric>

namespace stratakit::la {

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  return Subspace(Matrix(f, 0, ambient), {});
}

Subspace Subspace::whole(const Field& f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  std::iota(piv.begin(), piv.end(), 0);
  return Subspace(Matrix::identity(f, ambient), std::move(piv));
}

Subspace Subspace::from_rows(const Matrix& rows) {
  RrefResult rr = rows.rref();
  std::vector<std::size_t> keep(rr.rank);
  std::iota(keep.begin(), keep.end(), 0);
  return Subspace(rr.reduced.select_rows(keep), std::move(rr.pivots));
}

void Subspace::check_ambient(const Subspace& o) const {
  if (ambient() != o.ambient())
    throw DimensionError("subspaces of different ambient dimension (" + std::to_string(ambient()) +
                         " vs " + std::to_string(o.ambient()) + ")");
}

Matrix Subspace::reduce(const Matrix& v) const {
  if (v.rows() != ambient()) throw DimensionError("vector length does not match ambient");
  Matrix r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Matrix coeffs = r.select_rows({pivots_[i]});  // 1 x k
    if (coeffs.is_zero()) continue;
    r = r - basis_.row(i).transpose() * coeffs;
  }
  return r;
}

bool Subspace::contains(const Matrix& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  check_ambient(other);
  return other.dim() == 0 || contains(other.basis_columns());
}

Matrix Subspace::coordinates(const Matrix& v) const {
  if (!contains(v)) throw DimensionError("vector not in subspace");
  return v.select_rows(pivots_);
}

Subspace Subspace::sum(const Subspace& other) const {
  check_ambient(other);
  return from_rows(basis_.vcat(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_ambient(other);
  if (dim() == 0 || other.dim() == 0) return zero(field(), ambient());
  // x U = y V  <=>  [x y] [U; -V] = 0
  Matrix stacked = basis_.vcat(-other.basis_);
  Matrix left_null = stacked.transpose().null_space();  // (dimU+dimV) x k
  std::vector<std::size_t> xs(dim());
  std::iota(xs.begin(), xs.end(), 0);
  Matrix x = left_null.select_rows(xs);  // dimU x k
  return from_rows(x.transpose() * basis_);
}

Subspace::Quotient Subspace::quotient() const {
  const std::size_t n = ambient();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) rest.push_back(c);
  // projection(v) = rest-coordinates of reduce(v)
  Matrix reducer = Matrix::identity(field(), n);
  if (dim() > 0) reducer = reducer - basis_.transpose() * Matrix::identity(field(), n).select_rows(pivots_);
  Matrix proj = reducer.select_rows(rest);
  Matrix sec = Matrix::identity(field(), n).select_cols(rest);
  return {std::move(proj), std::move(sec)};
}

}  // namespace stratakit::la
