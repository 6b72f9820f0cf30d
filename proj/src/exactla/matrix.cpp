#include "exactla/matrix.hpp"

#include <sstream>
#include <utility>

namespace stratakit::la {

namespace {

struct GfOps {
  std::int64_t p;
  using T = std::int64_t;
  bool zero(T a) const { return a == 0; }
  T mul(T a, T b) const { return a * b % p; }
  T inv(T a) const { return mod_inverse(a, p); }
  // a - b*c
  T sub_mul(T a, T b, T c) const {
    T r = (a - b * c % p) % p;
    return r < 0 ? r + p : r;
  }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T one() const { return 1; }
};

struct QOps {
  using T = mpq_class;
  bool zero(const T& a) const { return sgn(a) == 0; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  T sub_mul(const T& a, const T& b, const T& c) const { return a - b * c; }
  T neg(const T& a) const { return -a; }
  T one() const { return 1; }
};

template <class Ops>
std::vector<std::size_t> rref_in_place(std::vector<typename Ops::T>& d, std::size_t rows,
                                       std::size_t cols, const Ops& ops,
                                       std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.zero(d[i * cols + c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(d[piv * cols + j], d[r * cols + j]);
    auto inv = ops.inv(d[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) d[r * cols + j] = ops.mul(d[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto f = d[i * cols + c];
      if (ops.zero(f)) continue;
      for (std::size_t j = c; j < cols; ++j)
        d[i * cols + j] = ops.sub_mul(d[i * cols + j], f, d[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_matrix(Matrix& m, std::size_t col_limit) {
  if (m.field().is_prime())
    return rref_in_place(m.gf_data(), m.rows(), m.cols(), GfOps{m.field().characteristic()},
                         col_limit);
  return rref_in_place(m.q_data(), m.rows(), m.cols(), QOps{}, col_limit);
}

}  // namespace

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime())
    g_.assign(rows * cols, 0);
  else
    q_.assign(rows * cols, mpq_class(0));
}

Matrix::Matrix(const Field& f, const std::vector<std::vector<long>>& rows)
    : Matrix(f, rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols_) throw DimensionError("ragged matrix literal");
    for (std::size_t j = 0; j < cols_; ++j) set(i, j, rows[i][j]);
  }
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_scalars(const Field& f, std::size_t rows, std::size_t cols,
                            const std::vector<Scalar>& entries) {
  if (entries.size() != rows * cols) throw DimensionError("entry count does not match shape");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entries[i * cols + j]);
  return m;
}

Matrix Matrix::unit_column(const Field& f, std::size_t n, std::size_t i) {
  Matrix m(f, n, 1);
  m.set(i, 0, 1);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return Scalar(field_, g_[r * cols_ + c]);
  return Scalar(field_, q_[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (!(v.field() == field_)) throw FieldError("scalar from a different field");
  if (field_.is_prime())
    g_[r * cols_ + c] = v.residue();
  else
    q_[r * cols_ + c] = v.rational();
}

void Matrix::set(std::size_t r, std::size_t c, long v) { set(r, c, Scalar(field_, v)); }

bool Matrix::entry_is_zero(std::size_t r, std::size_t c) const {
  return field_.is_prime() ? g_[r * cols_ + c] == 0 : sgn(q_[r * cols_ + c]) == 0;
}

void Matrix::check_field(const Matrix& o) const {
  if (!(field_ == o.field_)) throw FieldError("matrices over different fields");
}

void Matrix::check_same_shape(const Matrix& o, const char* op) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError(std::string("shape mismatch in ") + op);
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_field(o);
  if (cols_ != o.rows_)
    throw DimensionError("shape mismatch in product: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                         std::to_string(o.cols_));
  Matrix r(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    const std::int64_t p = field_.characteristic();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::int64_t a = g_[i * cols_ + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.g_[i * o.cols_ + j] = (r.g_[i * o.cols_ + j] + a * o.g_[k * o.cols_ + j]) % p;
      }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = q_[i * cols_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.q_[i * o.cols_ + j] += a * o.q_[k * o.cols_ + j];
      }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r.add_scaled(o, Scalar::one(field_));
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  r.add_scaled(o, -Scalar::one(field_));
  return r;
}

Matrix Matrix::operator-() const { return scaled(-Scalar::one(field_)); }

void Matrix::add_scaled(const Matrix& o, const Scalar& s) {
  check_same_shape(o, "sum");
  if (s.is_zero()) return;
  if (field_.is_prime()) {
    const std::int64_t p = field_.characteristic(), c = s.residue();
    for (std::size_t i = 0; i < g_.size(); ++i) g_[i] = (g_[i] + c * o.g_[i]) % p;
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) q_[i] += s.rational() * o.q_[i];
  }
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(field_, rows_, cols_);
  r.add_scaled(*this, s);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        r.g_[j * rows_ + i] = g_[i * cols_ + j];
      else
        r.q_[j * rows_ + i] = q_[i * cols_ + j];
    }
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  check_field(o);
  Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (entry_is_zero(i, j)) continue;
      Scalar a = at(i, j);
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l) {
          if (o.entry_is_zero(k, l)) continue;
          r.set(i * o.rows_ + k, j * o.cols_ + l, a * o.at(k, l));
        }
    }
  return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_) throw DimensionError("row mismatch in hcat");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
  }
  return r;
}

Matrix Matrix::vcat(const Matrix& o) const {
  check_field(o);
  if (cols_ != o.cols_) throw DimensionError("column mismatch in vcat");
  Matrix r = *this;
  r.rows_ += o.rows_;
  if (field_.is_prime())
    r.g_.insert(r.g_.end(), o.g_.begin(), o.g_.end());
  else
    r.q_.insert(r.q_.end(), o.q_.begin(), o.q_.end());
  return r;
}

Matrix Matrix::block_diag(const Matrix& o) const {
  check_field(o);
  Matrix r(field_, rows_ + o.rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) r.set(rows_ + i, cols_ + j, o.at(i, j));
  return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw DimensionError("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(idx[i], j));
  }
  return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw DimensionError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
  }
  return r;
}

Matrix Matrix::vec() const {
  Matrix r(field_, rows_ * cols_, 1);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) r.set(j * rows_ + i, 0, at(i, j));
  return r;
}

Matrix Matrix::unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1) throw DimensionError("unvec shape mismatch");
  Matrix r(v.field(), rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) r.set(i, j, v.at(j * rows + i, 0));
  return r;
}

bool Matrix::is_zero() const {
  if (field_.is_prime()) {
    for (auto v : g_)
      if (v != 0) return false;
  } else {
    for (const auto& v : q_)
      if (sgn(v) != 0) return false;
  }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && g_ == o.g_ && q_ == o.q_;
}

RrefResult Matrix::rref() const {
  RrefResult res{*this, 0, {}};
  res.pivots = rref_matrix(res.reduced, cols_);
  res.rank = res.pivots.size();
  return res;
}

std::size_t Matrix::rank() const { return rref().rank; }

Matrix Matrix::null_space() const {
  RrefResult rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(field_, cols_, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k.set(free[f], f, 1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      if (!rr.reduced.entry_is_zero(i, free[f])) k.set(rr.pivots[i], f, -rr.reduced.at(i, free[f]));
  }
  return k;
}

std::optional<Solution> Matrix::solve(const Matrix& b) const {
  check_field(b);
  if (b.rows() != rows_) throw DimensionError("solve: a.rows != b.rows");
  Matrix aug = hcat(b);
  auto piv = rref_matrix(aug, cols_);
  // inconsistent iff a zero row of the reduced `a` part has a nonzero b part
  for (std::size_t i = piv.size(); i < rows_; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!aug.entry_is_zero(i, cols_ + j)) return std::nullopt;
  Matrix x(field_, cols_, b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(piv[i], j, aug.at(i, cols_ + j));
  return Solution{std::move(x), null_space()};
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto s = solve(identity(field_, rows_));
  if (!s || s->kernel.cols() != 0) return std::nullopt;
  return s->particular;
}

bool Matrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).to_string();
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

std::vector<std::size_t> independent_columns(const Matrix& m) { return m.rref().pivots; }

}  // namespace stratakit::la
