#pragma once

#include "modcat/modcat.hpp"

#include <concepts>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace stratakit::recol {

using mod::Decision;

class RecollementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Obj, class Mor>
struct KernelOf {
  Obj object;
  Mor map;  ///< inclusion, or projection for cokernels
};

template <class Obj, class Mor>
struct ImageOf {
  Obj object;
  Mor coimage;
  Mor inclusion;
};

/// What the recollement engine needs from an abelian category.
template <class C>
concept Category = requires(const C& c, const typename C::Object& x, const typename C::Morphism& f) {
  { c.identity(x) } -> std::convertible_to<typename C::Morphism>;
  { c.compose(f, f) } -> std::convertible_to<typename C::Morphism>;
  { c.source(f) } -> std::convertible_to<typename C::Object>;
  { c.target(f) } -> std::convertible_to<typename C::Object>;
  { c.is_zero(x) } -> std::convertible_to<bool>;
  { c.is_zero(f) } -> std::convertible_to<bool>;
  { c.is_identity(f) } -> std::convertible_to<bool>;
  { c.is_mono(f) } -> std::convertible_to<bool>;
  { c.is_epi(f) } -> std::convertible_to<bool>;
  { c.equal(f, f) } -> std::convertible_to<bool>;
  { c.inverse(f) } -> std::convertible_to<typename C::Morphism>;
  { c.kernel(f) } -> std::convertible_to<KernelOf<typename C::Object, typename C::Morphism>>;
  { c.cokernel(f) } -> std::convertible_to<KernelOf<typename C::Object, typename C::Morphism>>;
  { c.image(f) } -> std::convertible_to<ImageOf<typename C::Object, typename C::Morphism>>;
  { c.factor_through_mono(f, f) } -> std::convertible_to<typename C::Morphism>;
  { c.hom_basis(x, x) } -> std::convertible_to<std::vector<typename C::Morphism>>;
  { c.is_isomorphic(x, x) } -> std::convertible_to<Decision>;
  { c.describe(x) } -> std::convertible_to<std::string>;
  { c.dim(x) } -> std::convertible_to<std::size_t>;
};

template <Category From, Category To>
struct Functor {
  std::function<typename To::Object(const typename From::Object&)> obj;
  std::function<typename To::Morphism(const typename From::Morphism&)> map;

  typename To::Object operator()(const typename From::Object& x) const { return obj(x); }
  typename To::Morphism operator()(const typename From::Morphism& f) const { return map(f); }
};

template <Category C>
using Component = std::function<typename C::Morphism(const typename C::Object&)>;

/// A_Z --i_*--> A --j^*--> A_U with adjoint triples (i^*, i_*, i^!) and
/// (j_!, j^*, j_*), together with all eight units and counits.
template <Category A, Category Z, Category U>
struct Recollement {
  A center;
  Z left;
  U right;

  Functor<A, Z> i_pull;    ///< i^*
  Functor<Z, A> i_push;    ///< i_*
  Functor<A, Z> i_shriek;  ///< i^!
  Functor<U, A> j_shriek;  ///< j_!
  Functor<A, U> j_pull;    ///< j^*
  Functor<U, A> j_push;    ///< j_*

  Component<A> unit_i;           ///< X -> i_* i^* X
  Component<Z> counit_i;         ///< i^* i_* Z -> Z
  Component<Z> unit_i_shriek;    ///< Z -> i^! i_* Z
  Component<A> counit_i_shriek;  ///< i_* i^! X -> X
  Component<U> unit_j_shriek;    ///< Y -> j^* j_! Y
  Component<A> counit_j_shriek;  ///< j_! j^* X -> X
  Component<A> unit_j;           ///< X -> j_* j^* X
  Component<U> counit_j;         ///< j^* j_* Y -> Y
};

template <class Obj>
using Samples = std::vector<std::pair<std::string, Obj>>;

struct AxiomViolation {
  std::string axiom;
  std::string witness;
  std::string detail;
};

struct RecollementReport {
  std::vector<AxiomViolation> violations;
  std::vector<std::string> samples;  ///< labels of the objects checked
  std::size_t checks = 0;
  bool ok() const { return violations.empty(); }
};

struct VerifyOptions {
  bool naturality = true;
  std::size_t max_morphisms = 4;  ///< hom-basis elements per sample pair
};

namespace detail {

class Checker {
 public:
  explicit Checker(RecollementReport& r) : rep_(r) {}

  template <class F>
  void run(const std::string& axiom, const std::string& witness, F&& body) {
    ++rep_.checks;
    try {
      std::string failure = body();
      if (!failure.empty()) rep_.violations.push_back({axiom, witness, failure});
    } catch (const std::exception& e) {
      rep_.violations.push_back({axiom, witness, std::string("raised: ") + e.what()});
    }
  }

 private:
  RecollementReport& rep_;
};

inline std::string fail_unless(bool ok, const char* what) { return ok ? std::string() : std::string(what); }

/// eta_{X'} f == G F(f) eta_X for morphisms between the samples.
template <Category C, Category D>
void check_natural(Checker& chk, const std::string& name, const C& cat, const D& tcat,
                   const Samples<typename C::Object>& samples, const Component<D>& eta,
                   const std::function<typename D::Morphism(const typename C::Morphism&)>& along,
                   const std::function<typename D::Morphism(const typename C::Morphism&)>& image_of,
                   std::size_t max_morphisms) {
  for (const auto& [lx, x] : samples)
    for (const auto& [ly, y] : samples) {
      chk.run(name + " naturality", lx + " -> " + ly, [&] {
        auto homs = cat.hom_basis(x, y);
        if (homs.size() > max_morphisms) homs.resize(max_morphisms);
        for (const auto& f : homs) {
          auto lhs = tcat.compose(eta(y), along(f));
          auto rhs = tcat.compose(image_of(f), eta(x));
          if (!tcat.equal(lhs, rhs)) return std::string("square does not commute");
        }
        return std::string();
      });
    }
}

}  // namespace detail

/// Checks (R1)-(R4) on finite sample families: triangle identities, the
/// (R2) isomorphisms, vanishing of j^* i_*, i^* j_!, i^! j_*, the two exact
/// sequences with their kernels in the image of i_*, and naturality.
template <Category A, Category Z, Category U>
RecollementReport verify_recollement(const Recollement<A, Z, U>& r, const Samples<typename A::Object>& xs,
                                     const Samples<typename Z::Object>& zs, const Samples<typename U::Object>& ys,
                                     const VerifyOptions& opt = {}) {
  using detail::fail_unless;
  RecollementReport rep;
  for (const auto& s : xs) rep.samples.push_back("A:" + s.first);
  for (const auto& s : zs) rep.samples.push_back("Z:" + s.first);
  for (const auto& s : ys) rep.samples.push_back("U:" + s.first);
  detail::Checker chk(rep);
  const A& ca = r.center;
  const Z& cz = r.left;
  const U& cu = r.right;

  for (const auto& [label, x] : xs) {
    chk.run("R1 triangle i^* -| i_*", label, [&] {
      auto t = cz.compose(r.counit_i(r.i_pull(x)), r.i_pull(r.unit_i(x)));
      return fail_unless(cz.is_identity(t), "counit(i^*X) . i^*(unit X) is not the identity");
    });
    chk.run("R1 triangle i_* -| i^!", label, [&] {
      auto t = cz.compose(r.i_shriek(r.counit_i_shriek(x)), r.unit_i_shriek(r.i_shriek(x)));
      return fail_unless(cz.is_identity(t), "i^!(counit X) . unit(i^!X) is not the identity");
    });
    chk.run("R1 triangle j_! -| j^*", label, [&] {
      auto t = cu.compose(r.j_pull(r.counit_j_shriek(x)), r.unit_j_shriek(r.j_pull(x)));
      return fail_unless(cu.is_identity(t), "j^*(counit X) . unit(j^*X) is not the identity");
    });
    chk.run("R1 triangle j^* -| j_*", label, [&] {
      auto t = cu.compose(r.counit_j(r.j_pull(x)), r.j_pull(r.unit_j(x)));
      return fail_unless(cu.is_identity(t), "counit(j^*X) . j^*(unit X) is not the identity");
    });
    chk.run("R4 j_!j^*X -> X -> i_*i^*X -> 0", label, [&] {
      auto eps = r.counit_j_shriek(x);
      auto eta = r.unit_i(x);
      if (ca.dim(ca.source(eps)) != ca.dim(r.j_shriek(r.j_pull(x))))
        return std::string("counit does not start at j_!j^*X");
      if (!ca.is_epi(eta)) return std::string("X -> i_*i^*X is not epi");
      if (!ca.is_zero(ca.compose(eta, eps))) return std::string("composite is not zero");
      auto k = ca.kernel(eta);
      auto im = ca.image(eps);
      if (ca.dim(k.object) != ca.dim(im.object)) return std::string("not exact at X");
      auto kk = ca.kernel(eps);
      if (!cu.is_zero(r.j_pull(kk.object))) return std::string("kernel of j_!j^*X -> X is not killed by j^*");
      if (!ca.is_epi(r.unit_i(kk.object)) || !ca.is_mono(r.unit_i(kk.object)))
        return std::string("kernel of j_!j^*X -> X is not in the image of i_*");
      return std::string();
    });
    chk.run("R4 0 -> i_*i^!X -> X -> j_*j^*X", label, [&] {
      auto eps = r.counit_i_shriek(x);
      auto eta = r.unit_j(x);
      if (ca.dim(ca.target(eta)) != ca.dim(r.j_push(r.j_pull(x))))
        return std::string("unit does not land in j_*j^*X");
      if (!ca.is_mono(eps)) return std::string("i_*i^!X -> X is not mono");
      if (!ca.is_zero(ca.compose(eta, eps))) return std::string("composite is not zero");
      auto k = ca.kernel(eta);
      auto im = ca.image(eps);
      if (ca.dim(k.object) != ca.dim(im.object)) return std::string("not exact at X");
      auto cc = ca.cokernel(eta);
      if (!cu.is_zero(r.j_pull(cc.object))) return std::string("cokernel of X -> j_*j^*X is not killed by j^*");
      auto c = r.counit_i_shriek(cc.object);
      if (!ca.is_epi(c) || !ca.is_mono(c)) return std::string("cokernel of X -> j_*j^*X is not in the image of i_*");
      return std::string();
    });
  }

  for (const auto& [label, z] : zs) {
    chk.run("R1 triangle i^* -| i_*", label, [&] {
      auto t = ca.compose(r.i_push(r.counit_i(z)), r.unit_i(r.i_push(z)));
      return fail_unless(ca.is_identity(t), "i_*(counit Z) . unit(i_*Z) is not the identity");
    });
    chk.run("R1 triangle i_* -| i^!", label, [&] {
      auto t = ca.compose(r.counit_i_shriek(r.i_push(z)), r.i_push(r.unit_i_shriek(z)));
      return fail_unless(ca.is_identity(t), "counit(i_*Z) . i_*(unit Z) is not the identity");
    });
    chk.run("R2 i_* fully faithful", label, [&] {
      auto c = r.counit_i(z);
      auto u = r.unit_i_shriek(z);
      bool ok = cz.is_mono(c) && cz.is_epi(c) && cz.is_mono(u) && cz.is_epi(u);
      return fail_unless(ok, "i^*i_*Z -> Z -> i^!i_*Z are not isomorphisms");
    });
    chk.run("R3 j^* i_* = 0", label, [&] { return fail_unless(cu.is_zero(r.j_pull(r.i_push(z))), "j^*i_*Z != 0"); });
  }

  for (const auto& [label, y] : ys) {
    chk.run("R1 triangle j_! -| j^*", label, [&] {
      auto t = ca.compose(r.counit_j_shriek(r.j_shriek(y)), r.j_shriek(r.unit_j_shriek(y)));
      return fail_unless(ca.is_identity(t), "counit(j_!Y) . j_!(unit Y) is not the identity");
    });
    chk.run("R1 triangle j^* -| j_*", label, [&] {
      auto t = ca.compose(r.j_push(r.counit_j(y)), r.unit_j(r.j_push(y)));
      return fail_unless(ca.is_identity(t), "j_*(counit Y) . unit(j_*Y) is not the identity");
    });
    chk.run("R2 j_! fully faithful", label, [&] {
      auto u = r.unit_j_shriek(y);
      if (cu.dim(cu.target(u)) != cu.dim(r.j_pull(r.j_shriek(y)))) return std::string("unit does not land in j^*j_!Y");
      return fail_unless(cu.is_mono(u) && cu.is_epi(u), "Y -> j^*j_!Y is not an isomorphism");
    });
    chk.run("R2 j_* fully faithful", label, [&] {
      auto c = r.counit_j(y);
      if (cu.dim(cu.source(c)) != cu.dim(r.j_pull(r.j_push(y)))) return std::string("counit does not start at j^*j_*Y");
      return fail_unless(cu.is_mono(c) && cu.is_epi(c), "j^*j_*Y -> Y is not an isomorphism");
    });
    chk.run("R3 i^* j_! = 0", label, [&] { return fail_unless(cz.is_zero(r.i_pull(r.j_shriek(y))), "i^*j_!Y != 0"); });
    chk.run("R3 i^! j_* = 0", label, [&] { return fail_unless(cz.is_zero(r.i_shriek(r.j_push(y))), "i^!j_*Y != 0"); });
  }

  if (opt.naturality) {
    const std::size_t mm = opt.max_morphisms;
    using MA = typename A::Morphism;
    using MZ = typename Z::Morphism;
    using MU = typename U::Morphism;
    std::function<MA(const MA&)> id_a = [](const MA& f) { return f; };
    std::function<MZ(const MZ&)> id_z = [](const MZ& f) { return f; };
    std::function<MU(const MU&)> id_u = [](const MU& f) { return f; };
    detail::check_natural<A, A>(chk, "unit i_*i^*", ca, ca, xs, r.unit_i, id_a,
                                [&](const MA& f) { return r.i_push(r.i_pull(f)); }, mm);
    detail::check_natural<A, A>(chk, "counit i_*i^!", ca, ca, xs, r.counit_i_shriek,
                                [&](const MA& f) { return r.i_push(r.i_shriek(f)); }, id_a, mm);
    detail::check_natural<A, A>(chk, "counit j_!j^*", ca, ca, xs, r.counit_j_shriek,
                                [&](const MA& f) { return r.j_shriek(r.j_pull(f)); }, id_a, mm);
    detail::check_natural<A, A>(chk, "unit j_*j^*", ca, ca, xs, r.unit_j, id_a,
                                [&](const MA& f) { return r.j_push(r.j_pull(f)); }, mm);
    detail::check_natural<Z, Z>(chk, "counit i^*i_*", cz, cz, zs, r.counit_i,
                                [&](const MZ& f) { return r.i_pull(r.i_push(f)); }, id_z, mm);
    detail::check_natural<Z, Z>(chk, "unit i^!i_*", cz, cz, zs, r.unit_i_shriek, id_z,
                                [&](const MZ& f) { return r.i_shriek(r.i_push(f)); }, mm);
    detail::check_natural<U, U>(chk, "unit j^*j_!", cu, cu, ys, r.unit_j_shriek, id_u,
                                [&](const MU& f) { return r.j_pull(r.j_shriek(f)); }, mm);
    detail::check_natural<U, U>(chk, "counit j^*j_*", cu, cu, ys, r.counit_j,
                                [&](const MU& f) { return r.j_pull(r.j_push(f)); }, id_u, mm);
  }
  return rep;
}

}  // namespace stratakit::recol
