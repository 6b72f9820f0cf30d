#pragma once

#include "algcore/algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace stratakit::mod {

using alg::Algebra;
using la::Field;
using la::Matrix;
using la::Scalar;
using la::Subspace;

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional right module.  `action(j)` is the matrix of m -> m * b_j
/// on column vectors, so action(xy) = action(y) action(x).
class Module {
 public:
  Module() = default;
  /// One dim x dim matrix per basis element of `a`.  Shapes are checked,
  /// module axioms are not (see check_module).
  Module(Algebra a, std::size_t dim, std::vector<Matrix> action);

  static Module zero(const Algebra& a);
  /// The regular module A_A.
  static Module regular(const Algebra& a);

  const Algebra& algebra() const { return alg_; }
  const Field& field() const { return alg_.field(); }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  const Matrix& action(std::size_t j) const { return (*action_)[j]; }
  const std::vector<Matrix>& actions() const { return *action_; }
  /// Action of an algebra element given in coordinates.
  Matrix act(const Matrix& element) const;
  /// Projection onto M e_v.
  const Matrix& vertex_action(std::size_t v) const { return action(alg_.idempotents()[v]); }
  /// dim M e_v for each vertex.
  std::vector<std::size_t> dimension_vector() const;

  /// Same algebra and identical action matrices.
  bool operator==(const Module& o) const;

 private:
  Algebra alg_;
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<Matrix>> action_;
};

class ModuleMap {
 public:
  ModuleMap() = default;
  /// `matrix` is dim(target) x dim(source).
  ModuleMap(Module source, Module target, Matrix matrix);

  static ModuleMap identity(const Module& m);
  static ModuleMap zero(const Module& source, const Module& target);

  const Module& source() const { return src_; }
  const Module& target() const { return tgt_; }
  const Matrix& matrix() const { return m_; }

  bool is_zero() const { return m_.is_zero(); }
  bool is_injective() const { return m_.rank() == src_.dim(); }
  bool is_surjective() const { return m_.rank() == tgt_.dim(); }
  bool is_iso() const { return src_.dim() == tgt_.dim() && is_injective(); }

  /// Composition: (g * f)(x) = g(f(x)).
  ModuleMap operator*(const ModuleMap& f) const;
  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap operator-(const ModuleMap& o) const;
  ModuleMap scaled(const Scalar& s) const;
  bool operator==(const ModuleMap& o) const;

 private:
  Module src_, tgt_;
  Matrix m_;
};

struct ModuleReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ModuleReport check_module(const Module& m);
/// Does the matrix intertwine the generator actions?
bool is_homomorphism(const Module& source, const Module& target, const Matrix& m);

void require_same_algebra(const Module& a, const Module& b);

struct Submodule {
  Module module;
  ModuleMap inclusion;
};

struct QuotientModule {
  Module module;
  ModuleMap projection;
  Matrix section;  ///< linear right inverse of the projection
};

struct DirectSum {
  Module module;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};

struct Image {
  Module module;
  ModuleMap coimage;    ///< source -> image, surjective
  ModuleMap inclusion;  ///< image -> target, injective
};

/// Submodule with the given basis columns, which must span an invariant subspace.
Submodule submodule(const Module& m, const Matrix& basis);
/// Smallest submodule containing the columns of `vectors`.
Submodule generated_submodule(const Module& m, const Matrix& vectors);
Subspace generated_subspace(const Module& m, const Matrix& vectors);
QuotientModule quotient(const Module& m, const Subspace& sub);

DirectSum direct_sum(const Algebra& a, const std::vector<Module>& parts);
ModuleMap direct_sum(const std::vector<ModuleMap>& maps);

Submodule kernel(const ModuleMap& f);
QuotientModule cokernel(const ModuleMap& f);
Image image(const ModuleMap& f);

/// Basis of Hom_A(m, n): intertwiners for the algebra generators.
std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

struct StructuralSeries {
  Submodule radical;
  QuotientModule top;
  Submodule socle;
};
Subspace radical_subspace(const Module& m);
Subspace socle_subspace(const Module& m);
StructuralSeries structural_series(const Module& m);

/// Matrix X with basis * X = vectors (basis has full column rank).
Matrix coordinates_in(const Matrix& basis, const Matrix& vectors);

}  // namespace stratakit::mod
