#pragma once

#include "modcat/modcat.hpp"

namespace stratakit::mod {

/// P_n -> ... -> P_1 -> P_0 -> M -> 0, each P_i a projective cover of the
/// previous kernel.
struct Resolution {
  Module module;
  std::vector<ProjectiveSum> terms;      ///< P_0 .. P_n
  std::vector<ModuleMap> differentials;  ///< differentials[i] : P_{i+1} -> P_i
  ModuleMap augmentation;                ///< P_0 -> M

  std::size_t length() const { return terms.size() - 1; }
  /// d_i : P_i -> P_{i-1}, i >= 1
  const ModuleMap& d(std::size_t i) const { return differentials.at(i - 1); }
};

Resolution minimal_resolution(const ModCat& cat, const Module& m, std::size_t length);

/// h : P -> M with g * h = f, for P a projective sum and im f inside im g.
ModuleMap lift_through(const ModCat& cat, const ProjectiveSum& p, const ModuleMap& f, const ModuleMap& g);

/// Ext^k(M, N) computed as cohomology of Hom(P_*, N).  Cochains are stored in
/// Yoneda coordinates: a map P_k -> N is the tuple of images of the summand
/// generators, each expanded in the canonical basis of N e_v.
class ExtSpace {
 public:
  ExtSpace(const ModCat& cat, const Module& m, const Module& n, std::size_t degree);
  /// Uses `res`, which must have length at least degree + 1.
  ExtSpace(const ModCat& cat, std::shared_ptr<const Resolution> res, const Module& n, std::size_t degree);

  const ModCat& category() const { return cat_; }
  const Module& source() const { return m_; }
  const Module& target() const { return n_; }
  std::size_t degree() const { return k_; }
  std::size_t dim() const { return classes_.dim(); }
  const Resolution& resolution() const { return *res_; }
  std::size_t cochain_dim() const { return cochain_dim_; }

  /// Cochain (column) -> map P_k -> N.
  ModuleMap cochain_map(const Matrix& cochain) const;
  /// Map P_k -> N -> cochain.
  Matrix cochain_of(const ModuleMap& f) const;
  bool is_cocycle(const Matrix& cochain) const;
  /// Coordinates (dim x 1) of the class of a cocycle.
  Matrix class_of(const Matrix& cocycle) const;
  /// Canonical representative cocycle: reduced against the coboundaries.
  Matrix representative(const Matrix& coords) const;
  const Subspace& coboundaries() const { return coboundaries_; }

 private:
  std::size_t term_dim(std::size_t term) const;
  Matrix cochain_in_term(std::size_t term, const ModuleMap& f) const;
  ModuleMap map_in_term(std::size_t term, const Matrix& cochain) const;
  Matrix coboundary_matrix(std::size_t term) const;  // C^{term-1} -> C^term

  ModCat cat_;
  Module m_, n_;
  std::size_t k_;
  std::shared_ptr<const Resolution> res_;
  std::vector<Matrix> vertex_basis_;  // basis of N e_v, per vertex
  std::size_t cochain_dim_ = 0;
  Matrix next_coboundary_;  // C^k -> C^{k+1}
  Subspace coboundaries_ = Subspace::zero(Field::gf(2), 0);
  Subspace classes_ = Subspace::zero(Field::gf(2), 0);  // reduced representatives
};

std::shared_ptr<const ExtSpace> ext(const ModCat& cat, const Module& m, const Module& n, std::size_t degree);

struct ExtClass {
  std::shared_ptr<const ExtSpace> space;
  Matrix coords;  ///< dim x 1

  std::size_t degree() const { return space->degree(); }
  bool is_zero() const { return coords.is_zero(); }
  Matrix cocycle() const { return space->representative(coords); }
  ModuleMap cocycle_map() const { return space->cochain_map(cocycle()); }
};

/// Basis classes of the space, in canonical order.
std::vector<ExtClass> ext_basis(const std::shared_ptr<const ExtSpace>& space);

/// 0 -> N --in--> E --out--> M -> 0
struct ShortExact {
  ModuleMap in;
  ModuleMap out;
  const Module& middle() const { return in.target(); }
};

bool is_short_exact(const ShortExact& s);

/// Pushout of 0 -> Omega M -> P_0 -> M -> 0 along a 1-cocycle P_1 -> X.
ShortExact pushout_extension(const Resolution& res, const ModuleMap& cocycle);
ShortExact realize_ext1(const ExtClass& c);
/// Class in `space` (degree 1, source M, target N) of an extension of M by N.
ExtClass extension_class(const std::shared_ptr<const ExtSpace>& space, const ShortExact& s);

struct UniversalExtension {
  ShortExact ses;
  std::vector<std::size_t> multiplicities;  ///< d_i = dim Ext^1(M, B_i)
};

/// 0 -> (+) B_i^{d_i} -> E -> M -> 0 built from bases of each Ext^1(M, B_i).
UniversalExtension universal_extension(const ModCat& cat, const Module& m, const std::vector<Module>& targets);

/// True when End(b) is certainly local: one-dimensional, or simple top or socle.
bool has_local_endomorphisms(const ModCat& cat, const Module& b);

}  // namespace stratakit::mod
