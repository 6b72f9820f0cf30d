#pragma once

#include "exactla/subspace.hpp"

#include <memory>
#include <string>
#include <vector>

namespace stratakit::alg {

using la::Field;
using la::Matrix;
using la::Scalar;
using la::Subspace;

class AlgebraError : public std::runtime_error {
 public:
  enum class Code { NonAdmissible, PossiblyInfinite, InvalidQuiver, InvalidIdempotent, InvalidData };
  AlgebraError(Code c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

const char* to_string(AlgebraError::Code c);

/// Sorted set of vertex indices; names the idempotent sum of those vertices.
using VertexSet = std::vector<std::size_t>;

/// Finite-dimensional split basic algebra given by structure constants.
///
/// Elements are column coordinate vectors.  `right_mult(j)` is the matrix of
/// x -> x * b_j, so the regular right module acts by these matrices; they
/// compose contravariantly: R(ab) = R(b) R(a).
class Algebra {
 public:
  struct Data {
    Field field = Field::gf(2);
    std::vector<std::string> labels;
    std::vector<std::string> vertex_names;
    std::vector<std::size_t> idempotents;  ///< basis index of each vertex idempotent
    std::vector<Matrix> right_mult;
    Matrix unit;
    Subspace radical = Subspace::zero(Field::gf(2), 0);
    std::vector<Matrix> generators;  ///< coordinate vectors generating the algebra
  };

  Algebra() = default;
  /// Takes raw data; generators are derived when `d.generators` is empty.
  /// Only shapes are checked here; see validate_algebra.
  explicit Algebra(Data d);

  static Algebra zero(const Field& f);

  const Field& field() const { return d_->field; }
  std::size_t dim() const { return d_->labels.size(); }
  std::size_t vertex_count() const { return d_->idempotents.size(); }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::vector<std::string>& vertex_names() const { return d_->vertex_names; }
  const std::vector<std::size_t>& idempotents() const { return d_->idempotents; }
  const Matrix& right_mult(std::size_t j) const { return d_->right_mult[j]; }
  const Matrix& left_mult(std::size_t i) const { return (*left_)[i]; }
  const Matrix& unit() const { return d_->unit; }
  const Subspace& radical() const { return d_->radical; }
  const std::vector<Matrix>& generators() const { return d_->generators; }
  const Data& data() const { return *d_; }

  Matrix basis_vector(std::size_t i) const { return Matrix::unit_column(field(), dim(), i); }
  Matrix idempotent(std::size_t v) const { return basis_vector(d_->idempotents[v]); }
  Matrix idempotent_sum(const VertexSet& vs) const;
  std::size_t vertex_index(const std::string& name) const;

  /// Matrix of x -> x * y for an element y (coordinate column).
  Matrix right_action(const Matrix& y) const;
  /// Matrix of x -> y * x.
  Matrix left_action(const Matrix& y) const;
  Matrix multiply(const Matrix& x, const Matrix& y) const { return right_action(y) * x; }

  /// dim e_v A e_w
  std::size_t cartan_entry(std::size_t v, std::size_t w) const;

  bool same_structure(const Algebra& o) const;
  bool is_null() const { return !impl_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  const Data* d_ = nullptr;
  const std::vector<Matrix>* left_ = nullptr;
};

struct Violation {
  std::string check;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_algebra(const Algebra& a);

/// Checks that `vs` names a subset of vertices (sorted, unique, in range).
void check_vertex_set(const Algebra& a, const VertexSet& vs);
VertexSet complement(const Algebra& a, const VertexSet& vs);

struct CornerAlgebra {
  Algebra algebra;
  Matrix embedding;                     ///< dim(A) x dim(eAe); columns = basis of eAe in A
  std::vector<std::size_t> vertex_map;  ///< corner vertex -> vertex of A
};
CornerAlgebra corner_algebra(const Algebra& a, const VertexSet& vs);

struct QuotientAlgebra {
  Algebra algebra;
  Matrix projection;                    ///< dim(A/AeA) x dim(A)
  Matrix section;                       ///< dim(A) x dim(A/AeA)
  Subspace ideal = Subspace::zero(Field::gf(2), 0);  ///< AeA inside A
  std::vector<std::size_t> vertex_map;  ///< quotient vertex -> vertex of A
};
QuotientAlgebra quotient_by_idempotent_ideal(const Algebra& a, const VertexSet& vs);

/// Span of {x e y}; equals the two-sided ideal generated by e.
Subspace idempotent_ideal(const Algebra& a, const VertexSet& vs);

Algebra opposite(const Algebra& a);

}  // namespace stratakit::alg
