#pragma once

#include "recol/recollement.hpp"

namespace stratakit::recol {

/// mod-A seen through the Category concept.
class ModuleCategory {
 public:
  using Object = mod::Module;
  using Morphism = mod::ModuleMap;

  explicit ModuleCategory(mod::ModCat cat) : cat_(std::move(cat)) {}
  explicit ModuleCategory(const alg::Algebra& a) : cat_(a) {}

  const mod::ModCat& modcat() const { return cat_; }
  const alg::Algebra& algebra() const { return cat_.algebra(); }

  Morphism identity(const Object& x) const { return Morphism::identity(x); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return g * f; }
  Object source(const Morphism& f) const { return f.source(); }
  Object target(const Morphism& f) const { return f.target(); }
  bool is_zero(const Object& x) const { return x.is_zero(); }
  bool is_zero(const Morphism& f) const { return f.is_zero(); }
  bool is_identity(const Morphism& f) const {
    return f.source().dim() == f.target().dim() && f.matrix() == la::Matrix::identity(f.matrix().field(), f.source().dim());
  }
  bool is_mono(const Morphism& f) const { return f.is_injective(); }
  bool is_epi(const Morphism& f) const { return f.is_surjective(); }
  bool equal(const Morphism& f, const Morphism& g) const {
    return f.source().dim() == g.source().dim() && f.target().dim() == g.target().dim() && f.matrix() == g.matrix();
  }
  Morphism inverse(const Morphism& f) const;
  KernelOf<Object, Morphism> kernel(const Morphism& f) const;
  KernelOf<Object, Morphism> cokernel(const Morphism& f) const;
  ImageOf<Object, Morphism> image(const Morphism& f) const;
  /// u with mono * u = f.
  Morphism factor_through_mono(const Morphism& mono, const Morphism& f) const;
  std::vector<Morphism> hom_basis(const Object& x, const Object& y) const { return mod::hom_basis(x, y); }
  Decision is_isomorphic(const Object& x, const Object& y) const { return cat_.is_isomorphic(x, y).decision; }
  std::string describe(const Object& x) const;
  std::size_t dim(const Object& x) const { return x.dim(); }

 private:
  mod::ModCat cat_;
};

static_assert(Category<ModuleCategory>);

}  // namespace stratakit::recol
