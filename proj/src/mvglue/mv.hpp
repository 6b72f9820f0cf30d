#pragma once

#include "recol/intermediate.hpp"
#include "recol/module_category.hpp"

namespace stratakit::mv {

using alg::Algebra;
using la::Field;
using la::Matrix;
using mod::Decision;
using mod::Module;
using mod::ModuleMap;

class MVError : public std::runtime_error {
 public:
  enum class Code { InvalidData, NotCommuting };
  MVError(Code c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Finite-dimensional bimodule given by action matrices on column vectors.
struct Bimodule {
  std::size_t dim = 0;
  std::vector<Matrix> left;   ///< per basis element a of the left algebra: v -> a v
  std::vector<Matrix> right;  ///< per basis element b of the right algebra: v -> v b
};

/// Gluing data: F = - (x)_S M, G = Hom_S(N, -), eps from theta : M (x)_R N -> S.
struct MVData {
  Algebra r;  ///< Z side
  Algebra s;  ///< U side
  Bimodule m; ///< S-R
  Bimodule n; ///< R-S
  /// dim S x (dim M * dim N); column l * dim N + j holds theta(m_l (x) n_j).
  Matrix theta;
};

/// Bimodule axioms, balance and S-S equivariance of theta, naturality of eps
/// on the regular S-module and its left multiplications.
std::vector<std::string> validate(const MVData& d);
void require_valid(const MVData& d);
/// The family on which naturality of eps is certified.
inline const char* naturality_family() { return "S_S with left multiplications by the basis of S"; }

struct Tensor {
  Module module;   ///< X (x)_S M over R
  Matrix project;  ///< X (x)_k M -> module
  Matrix section;
};

struct Hom {
  Module module;  ///< Hom_S(N, X) over R
  Matrix basis;   ///< columns: vec(phi) in X (x)_k N^*, column-major
};

Tensor apply_f(const MVData& d, const Module& x);
ModuleMap apply_f(const MVData& d, const ModuleMap& f);
Hom apply_g(const MVData& d, const Module& x);
ModuleMap apply_g(const MVData& d, const ModuleMap& f);
/// eps_X : F X -> G X
ModuleMap eps(const MVData& d, const Module& x);

struct MVObject {
  Module u;      ///< over S
  Module z;      ///< over R
  Matrix alpha;  ///< F u -> z
  Matrix beta;   ///< z -> G u
};

struct MVMorphism {
  MVObject source, target;
  ModuleMap fu, fz;
};

/// The glued category A(eps).
class MVCategory {
 public:
  using Object = MVObject;
  using Morphism = MVMorphism;

  explicit MVCategory(MVData d);

  const MVData& data() const { return *d_; }
  const mod::ModCat& r_cat() const { return rcat_; }
  const mod::ModCat& s_cat() const { return scat_; }

  /// Checks linearity of alpha, beta and beta alpha = eps.
  Object object(Module u, Module z, Matrix alpha, Matrix beta) const;
  std::string object_violation(const Object& x) const;
  /// Checks that both squares of the prism commute.
  Morphism morphism(const Object& x, const Object& y, const Matrix& fu, const Matrix& fz) const;
  std::string morphism_violation(const Morphism& f) const;

  Morphism identity(const Object& x) const;
  Morphism zero(const Object& x, const Object& y) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism add(const Morphism& f, const Morphism& g) const;
  Morphism scaled(const Morphism& f, const la::Scalar& c) const;
  Object source(const Morphism& f) const { return f.source; }
  Object target(const Morphism& f) const { return f.target; }
  bool is_zero(const Object& x) const { return x.u.is_zero() && x.z.is_zero(); }
  bool is_zero(const Morphism& f) const { return f.fu.is_zero() && f.fz.is_zero(); }
  bool is_identity(const Morphism& f) const;
  bool is_mono(const Morphism& f) const { return f.fu.is_injective() && f.fz.is_injective(); }
  bool is_epi(const Morphism& f) const { return f.fu.is_surjective() && f.fz.is_surjective(); }
  bool equal(const Morphism& f, const Morphism& g) const;
  Morphism inverse(const Morphism& f) const;
  recol::KernelOf<Object, Morphism> kernel(const Morphism& f) const;
  recol::KernelOf<Object, Morphism> cokernel(const Morphism& f) const;
  recol::ImageOf<Object, Morphism> image(const Morphism& f) const;
  Morphism factor_through_mono(const Morphism& mono, const Morphism& f) const;
  /// u with u epi = f, for f vanishing on the kernel of `epi`.
  Morphism factor_through_epi(const Morphism& epi, const Morphism& f) const;
  std::vector<Morphism> hom_basis(const Object& x, const Object& y) const;
  /// Yes with an invertible hom; No from invariants or, over small fields,
  /// exhaustive search of Hom; otherwise Unknown.
  Decision is_isomorphic(const Object& x, const Object& y) const;
  std::string describe(const Object& x) const;
  std::size_t dim(const Object& x) const { return x.u.dim() + x.z.dim(); }

  struct Sum {
    Object object;
    std::vector<Morphism> injections, projections;
  };
  Sum direct_sum(const Object& x, const Object& y) const;

  /// No nonzero proper subobject: u = 0 with z simple, or u simple with
  /// alpha onto and beta injective.
  bool is_simple(const Object& x) const;

 private:
  std::shared_ptr<const MVData> d_;
  mod::ModCat rcat_, scat_;
};

static_assert(recol::Category<MVCategory>);

using MVRecollement = recol::Recollement<MVCategory, recol::ModuleCategory, recol::ModuleCategory>;

/// i^*X = cok alpha, i^!X = ker beta, j^*X = X_U, j_!Y = (Y, FY, 1, eps),
/// j_*Y = (Y, GY, eps, 1).
MVRecollement mv_recollement(const MVData& d);

/// (Y, im eps_Y, eps onto its image, inclusion).
recol::IntermediateExtension<MVCategory> mv_intermediate(const MVCategory& c, const Module& y);

/// i^{!*}(X) = X_Z, an exact retraction of i_*.
recol::Functor<MVCategory, recol::ModuleCategory> exact_retraction(const MVCategory& c);

struct MVSimple {
  std::string label;  ///< "i_*L(v)" or "j_!*L(v)"
  MVObject object;
};

struct MVSimples {
  std::vector<MVSimple> simples;
  std::vector<std::string> failures;  ///< non-simple members or isomorphic pairs
  bool ok() const { return failures.empty(); }
};

MVSimples mv_simples(const MVCategory& c);

/// Objects for verify_recollement: images of the simples and regular modules.
struct MVSamples {
  recol::Samples<MVObject> center;
  recol::Samples<Module> left, right;
};
MVSamples mv_samples(const MVRecollement& r);

struct ProbeReport {
  std::size_t probes = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Random morphisms f between random objects; each probe checks that the
/// kernel and cokernel of f are objects, that they factor a random competing
/// morphism uniquely, and that i^{!*} sends them to ker/cok of f_Z.
ProbeReport universal_property_probes(const MVCategory& c, std::size_t count, std::uint64_t seed);

struct MVSuiteReport {
  recol::RecollementReport recollement;
  std::size_t intermediate_checked = 0;
  std::vector<std::string> intermediate_failures;  ///< table j_!* vs the generic image
  MVSimples simples;
  ProbeReport probes;
  bool ok() const { return recollement.ok() && intermediate_failures.empty() && simples.ok() && probes.ok(); }
};

MVSuiteReport mv_suite(const MVData& d, std::uint64_t seed, std::size_t probes = 100);

/// Bundled gluing data: "zero" (R = A2, S = k, M = N = 0), "id" and "null"
/// (R = S = k, M = N = k, theta = 1 or 0), "dual" (R = k, S = dual numbers,
/// M = N = S, theta = multiplication), "simple" (R = A2, S = k, M = N the
/// simple at vertex 1, theta = 1).
MVData mv_fixture(const std::string& name, const Field& f = Field::gf(2));
const std::vector<std::string>& mv_fixture_names();

/// The one-vertex algebra k.
Algebra ground_algebra(const Field& f);

}  // namespace stratakit::mv
