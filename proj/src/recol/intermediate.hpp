#pragma once

#include "recol/recollement.hpp"

namespace stratakit::recol {

template <Category A>
struct IntermediateExtension {
  typename A::Object object;
  typename A::Morphism theta;      ///< canonical j_! x -> j_* x
  typename A::Morphism from_left;  ///< j_! x -> object, epi
  typename A::Morphism to_right;   ///< object -> j_* x, mono
};

template <Category A>
struct CanonicalSes {
  typename A::Morphism in;
  typename A::Morphism out;
};

/// j_!* x: the image of the transpose of (j^* j_* x -> x)^{-1} under j_! -| j^*.
/// Throws if i^*, i^! of the result are nonzero or j^* of it is not iso to x.
template <Category A, Category Z, Category U>
IntermediateExtension<A> intermediate_extension(const Recollement<A, Z, U>& r, const typename U::Object& x) {
  auto back = r.right.inverse(r.counit_j(x));
  auto theta = r.center.compose(r.counit_j_shriek(r.j_push(x)), r.j_shriek(back));
  auto im = r.center.image(theta);
  if (!r.left.is_zero(r.i_pull(im.object))) throw RecollementError("i^* j_!* x is not zero");
  if (!r.left.is_zero(r.i_shriek(im.object))) throw RecollementError("i^! j_!* x is not zero");
  if (r.right.is_isomorphic(r.j_pull(im.object), x) != Decision::Yes)
    throw RecollementError("j^* j_!* x is not certified isomorphic to x");
  return {im.object, theta, im.coimage, im.inclusion};
}

/// j_!* on a morphism g : x -> y.
template <Category A, Category Z, Category U>
typename A::Morphism intermediate_extension_map(const Recollement<A, Z, U>& r, const typename U::Morphism& g) {
  auto ex = intermediate_extension(r, r.right.source(g));
  auto ey = intermediate_extension(r, r.right.target(g));
  auto along = r.center.compose(r.j_push(g), ex.to_right);
  return r.center.factor_through_mono(ey.to_right, along);
}

enum class SesSide { NoZQuotients, NoZSubobjects };

/// NoZQuotients (needs i^* m = 0): 0 -> i_*i^! m -> m -> j_!* j^* m -> 0.
/// NoZSubobjects (needs i^! m = 0): 0 -> j_!* j^* m -> m -> i_*i^* m -> 0.
template <Category A, Category Z, Category U>
CanonicalSes<A> canonical_ses(const Recollement<A, Z, U>& r, const typename A::Object& m, SesSide side) {
  if (side == SesSide::NoZQuotients) {
    auto q = r.i_pull(m);
    if (!r.left.is_zero(q)) throw RecollementError("precondition i^* m = 0 fails: i^* m is " + r.left.describe(q));
    auto im = r.center.image(r.unit_j(m));
    return {r.counit_i_shriek(m), im.coimage};
  }
  auto s = r.i_shriek(m);
  if (!r.left.is_zero(s)) throw RecollementError("precondition i^! m = 0 fails: i^! m is " + r.left.describe(s));
  auto im = r.center.image(r.counit_j_shriek(m));
  return {im.inclusion, r.unit_i(m)};
}

}  // namespace stratakit::recol
