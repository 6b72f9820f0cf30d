#pragma once

#include "modcat/module.hpp"

#include <optional>

namespace stratakit::mod {

/// Direct sum of indecomposable projectives P(v_1) + ... + P(v_r).  The
/// generator e_{v_i} of the i-th summand sits at column `offsets[i]`.
struct ProjectiveSum {
  Module module;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> offsets;
};

struct Cover {
  ProjectiveSum projective;
  ModuleMap map;  ///< P -> M, essential surjection
};

struct Envelope {
  Module injective;
  std::vector<std::size_t> vertices;
  ModuleMap map;  ///< M -> I, essential injection
};

enum class Decision { Yes, No, Unknown };
const char* to_string(Decision d);

struct IsoResult {
  Decision decision = Decision::Unknown;
  std::optional<ModuleMap> iso;  ///< set when Yes
  std::string reason;            ///< distinguishing invariant when No
};

struct Resolution;

/// Module category mod-A together with its opposite side.  Cheap to copy; all
/// copies share one cache.
class ModCat {
 public:
  explicit ModCat(const Algebra& a);

  const Algebra& algebra() const;
  /// mod-A^op, whose opposite is this category again.
  ModCat opposite() const { return ModCat(state_, !flipped_); }

  Module regular() const { return Module::regular(algebra()); }
  /// e_v A; the first basis vector is e_v itself.
  const Module& projective(std::size_t v) const;
  /// Columns: basis of e_v A inside A.
  const Matrix& projective_basis(std::size_t v) const;
  const Module& simple(std::size_t v) const;
  /// D(e_v A^op)
  const Module& injective(std::size_t v) const;

  /// chi_v(x) = coefficient of e_v in x modulo the radical.
  Scalar vertex_character(std::size_t v, const Matrix& x) const;

  ProjectiveSum projective_sum(const std::vector<std::size_t>& vertices) const;
  /// The map P -> M sending the i-th generator to images[i] (in M e_{v_i}).
  ModuleMap yoneda_map(const ProjectiveSum& p, const Module& m, const std::vector<Matrix>& images) const;

  /// Vector-space dual: an A-module becomes an A^op-module (and back).
  Module dual(const Module& m) const;
  ModuleMap dual(const ModuleMap& f) const;

  Cover projective_cover(const Module& m) const;
  Envelope injective_envelope(const Module& m) const;
  /// Vertices of the simple summands of top(m), with multiplicity.
  std::vector<std::size_t> top_vertices(const Module& m) const;
  std::vector<std::size_t> socle_vertices(const Module& m) const;

  bool is_projective(const Module& m) const;
  bool is_injective(const Module& m) const;
  bool is_simple(const Module& m) const { return m.dim() == 1; }

  IsoResult is_isomorphic(const Module& m, const Module& n) const;

  /// Minimal projective resolution with terms P_0 .. P_length.
  std::shared_ptr<const Resolution> resolution(const Module& m, std::size_t length) const;

 private:
  struct State;
  ModCat(std::shared_ptr<State> s, bool flipped) : state_(std::move(s)), flipped_(flipped) {}
  struct Side;
  Side& side() const;
  std::shared_ptr<State> state_;
  bool flipped_ = false;
};

}  // namespace stratakit::mod
