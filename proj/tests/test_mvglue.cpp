#include "algcore/fixtures.hpp"
#include "doctest.h"
#include "modcat/sampling.hpp"
#include "mvglue/mv.hpp"

using namespace stratakit;
using namespace stratakit::mv;

namespace {

Matrix one(const Field& f, long v) { return Matrix(f, {{v}}); }

Module k_module(const MVCategory& c, std::size_t dim) {
  std::vector<Module> parts(dim, c.s_cat().simple(0));
  if (dim == 0) return Module::zero(c.data().s);
  return mod::direct_sum(c.data().s, parts).module;
}

}  // namespace

TEST_CASE("fixtures validate") {
  for (const auto& f : {Field::gf(2), Field::gf(3), Field::rationals()})
    for (const auto& name : mv_fixture_names()) {
      CAPTURE(name);
      CHECK(validate(mv_fixture(name, f)).empty());
    }
}

TEST_CASE("broken gluing data is rejected") {
  const Field f = Field::gf(3);
  auto d = mv_fixture("id", f);
  d.theta = Matrix(f, 1, 2);
  CHECK_THROWS_AS(require_valid(d), MVError);

  auto broken = mv_fixture("simple", f);
  broken.n.left = {one(f, 1), one(f, 1), one(f, 0)};
  CHECK_FALSE(validate(broken).empty());

  auto bad_action = mv_fixture("dual", f);
  bad_action.m.left[1] = Matrix::identity(f, 2);
  auto errs = validate(bad_action);
  REQUIRE_FALSE(errs.empty());
  CHECK(errs.front().find("M:") == 0);
}

TEST_CASE("F and G on the dual numbers") {
  const Field f = Field::gf(2);
  MVCategory c(mv_fixture("dual", f));
  const auto& d = c.data();
  // M = N = S, so F and G are the forgetful functor up to iso.
  for (const auto& x : {Module::regular(d.s), c.s_cat().simple(0)}) {
    CHECK(apply_f(d, x).module.dim() == x.dim());
    CHECK(apply_g(d, x).module.dim() == x.dim());
    CHECK(eps(d, x).is_iso());
  }
}

TEST_CASE("objects and morphisms are checked") {
  const Field f = Field::gf(5);
  MVCategory c(mv_fixture("id", f));
  Module k = k_module(c, 1);
  Module r0 = c.r_cat().simple(0);
  CHECK_NOTHROW(c.object(k, r0, one(f, 2), one(f, 3)));
  CHECK_THROWS_AS(c.object(k, r0, one(f, 2), one(f, 2)), MVError);

  auto x = c.object(k, r0, one(f, 1), one(f, 1));
  auto y = c.object(k, r0, one(f, 2), one(f, 3));
  CHECK_NOTHROW(c.morphism(x, y, one(f, 2), one(f, 4)));
  CHECK_THROWS_AS(c.morphism(x, y, one(f, 1), one(f, 1)), MVError);
  CHECK(c.hom_basis(x, y).size() == 1);
  CHECK(c.is_isomorphic(x, y) == Decision::Yes);
}

TEST_CASE("identity has zero kernel and cokernel") {
  for (const auto& name : mv_fixture_names()) {
    CAPTURE(name);
    auto r = mv_recollement(mv_fixture(name));
    for (const auto& [label, x] : mv_samples(r).center) {
      CAPTURE(label);
      auto id = r.center.identity(x);
      CHECK(r.center.is_zero(r.center.kernel(id).object));
      CHECK(r.center.is_zero(r.center.cokernel(id).object));
    }
  }
}

TEST_CASE("zero gluing is the product category") {
  auto r = mv_recollement(mv_fixture("zero"));
  const auto& c = r.center;
  for (const auto& [label, y] : mv_samples(r).right) {
    CHECK(r.j_shriek(y).z.dim() == 0);
    CHECK(r.j_push(y).z.dim() == 0);
  }
  auto simples = mv_simples(c);
  CHECK(simples.ok());
  CHECK(simples.simples.size() == c.data().r.vertex_count() + c.data().s.vertex_count());
  for (const auto& s : simples.simples)
    if (s.label.rfind("j_!*", 0) == 0) CHECK(s.object.z.dim() == 0);
}

TEST_CASE("theta = 0 over k") {
  const Field f = Field::gf(3);
  auto r = mv_recollement(mv_fixture("null", f));
  Module k = r.center.s_cat().simple(0);
  auto lo = r.j_shriek(k);
  auto hi = r.j_push(k);
  CHECK(lo.z.dim() == 1);
  CHECK(lo.alpha == one(f, 1));
  CHECK(lo.beta == one(f, 0));
  CHECK(hi.z.dim() == 1);
  CHECK(hi.alpha == one(f, 0));
  CHECK(hi.beta == one(f, 1));
  auto mid = mv_intermediate(r.center, k).object;
  CHECK(mid.u.dim() == 1);
  CHECK(mid.z.dim() == 0);
  CHECK(r.center.is_simple(mid));
  CHECK(r.center.is_isomorphic(mid, recol::intermediate_extension(r, k).object) == Decision::Yes);
}

TEST_CASE("theta = 1 over k") {
  const Field f = Field::gf(3);
  auto r = mv_recollement(mv_fixture("id", f));
  Module k = r.center.s_cat().simple(0);
  auto mid = mv_intermediate(r.center, k).object;
  CHECK(mid.z.dim() == 1);
  CHECK(mid.alpha.rank() == 1);
  CHECK(mid.beta.rank() == 1);
  CHECK(r.center.is_isomorphic(mid, r.j_shriek(k)) == Decision::Yes);
  CHECK(r.center.is_isomorphic(mid, r.j_push(k)) == Decision::Yes);
  auto simples = mv_simples(r.center);
  CHECK(simples.ok());
  CHECK(simples.simples.size() == 2);
}

TEST_CASE("kernels over k with theta = 1 are universal at small dimension") {
  const Field f = Field::gf(2);
  MVCategory c(mv_fixture("id", f));
  // (V, W, alpha, beta) with beta alpha = 1: V is a summand of W.
  std::vector<MVObject> objs;
  for (std::size_t v = 0; v <= 2; ++v)
    for (std::size_t w = v; w <= 2; ++w) {
      Module u = k_module(c, v);
      std::vector<Module> zs(w, c.r_cat().simple(0));
      Module z = w ? mod::direct_sum(c.data().r, zs).module : Module::zero(c.data().r);
      Matrix a(f, w, v), b(f, v, w);
      for (std::size_t i = 0; i < v; ++i) {
        a.set(i, i, 1);
        b.set(i, i, 1);
      }
      objs.push_back(c.object(u, z, a, b));
    }
  std::size_t checked = 0;
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& g : c.hom_basis(x, y)) {
        auto k = c.kernel(g);
        CHECK(c.object_violation(k.object).empty());
        CHECK(c.morphism_violation(k.map).empty());
        CHECK(c.is_zero(c.compose(g, k.map)));
        for (const auto& w : objs)
          for (const auto& h : c.hom_basis(w, x))
            if (c.is_zero(c.compose(g, h))) {
              auto u = c.factor_through_mono(k.map, h);
              CHECK(c.morphism_violation(u).empty());
              CHECK(c.equal(c.compose(k.map, u), h));
              ++checked;
            }
      }
  CHECK(checked > 0);
}

TEST_CASE("MV recollement passes the generic verifier") {
  for (const auto& f : {Field::gf(2), Field::gf(3), Field::rationals()})
    for (const auto& name : mv_fixture_names()) {
      CAPTURE(name);
      auto r = mv_recollement(mv_fixture(name, f));
      auto s = mv_samples(r);
      auto rep = recol::verify_recollement(r, s.center, s.left, s.right);
      for (const auto& v : rep.violations) INFO(v.axiom << " @ " << v.witness << ": " << v.detail);
      CHECK(rep.ok());
      CHECK(rep.checks > 0);
    }
}

TEST_CASE("i_* and j^* vanish as the table says") {
  auto r = mv_recollement(mv_fixture("simple"));
  for (const auto& [label, z] : mv_samples(r).left) {
    auto x = r.i_push(z);
    CHECK(x.u.dim() == 0);
    CHECK(x.z.dim() == z.dim());
    CHECK(r.j_pull(x).is_zero());
  }
}

TEST_CASE("table intermediate extension matches the generic one") {
  for (const auto& name : mv_fixture_names()) {
    CAPTURE(name);
    auto r = mv_recollement(mv_fixture(name, Field::gf(3)));
    mod::Sampler rng(11);
    std::vector<Module> ys;
    for (const auto& [l, y] : mv_samples(r).right) ys.push_back(y);
    for (int i = 0; i < 4; ++i) ys.push_back(rng.module(r.center.s_cat(), 4));
    for (const auto& y : ys) {
      auto table = mv_intermediate(r.center, y);
      auto generic = recol::intermediate_extension(r, y);
      CHECK(r.center.object_violation(table.object).empty());
      CHECK(r.center.morphism_violation(table.theta).empty());
      CHECK(r.center.morphism_violation(table.from_left).empty());
      CHECK(r.center.morphism_violation(table.to_right).empty());
      CHECK(r.center.is_isomorphic(table.object, generic.object) == Decision::Yes);
    }
  }
}

TEST_CASE("simples are simple and pairwise distinct") {
  for (const auto& name : mv_fixture_names()) {
    CAPTURE(name);
    MVCategory c(mv_fixture(name));
    auto s = mv_simples(c);
    for (const auto& e : s.failures) INFO(e);
    CHECK(s.ok());
    CHECK(s.simples.size() == c.data().r.vertex_count() + c.data().s.vertex_count());
  }
}

TEST_CASE("non-simple objects are detected") {
  auto r = mv_recollement(mv_fixture("id"));
  Module k = r.center.s_cat().simple(0);
  // theta = 1: j_! k is simple, j_! of k + k is not, i_* of a simple is.
  CHECK(r.center.is_simple(r.j_shriek(k)));
  CHECK_FALSE(r.center.is_simple(r.j_shriek(mod::direct_sum(k.algebra(), {k, k}).module)));
  auto nul = mv_recollement(mv_fixture("null"));
  CHECK_FALSE(nul.center.is_simple(nul.j_shriek(k)));
  CHECK_FALSE(nul.center.is_simple(nul.j_push(k)));
}

TEST_CASE("randomized universal property probes") {
  for (const auto& f : {Field::gf(2), Field::gf(3)})
    for (const auto& name : mv_fixture_names()) {
      CAPTURE(name);
      MVCategory c(mv_fixture(name, f));
      auto rep = universal_property_probes(c, 100, 20261018);
      for (const auto& e : rep.failures) INFO(e);
      CHECK(rep.probes == 100);
      CHECK(rep.ok());
    }
}

TEST_CASE("retraction is exact on kernels and cokernels") {
  auto r = mv_recollement(mv_fixture("dual", Field::gf(3)));
  const auto& c = r.center;
  auto ret = exact_retraction(c);
  auto s = mv_samples(r);
  for (const auto& [lx, x] : s.center)
    for (const auto& [ly, y] : s.center)
      for (const auto& g : c.hom_basis(x, y)) {
        auto k = c.kernel(g);
        auto q = c.cokernel(g);
        CHECK(ret(k.object).dim() == mod::kernel(ret(g)).module.dim());
        CHECK(ret(q.object).dim() == mod::cokernel(ret(g)).module.dim());
        CHECK(ret(c.compose(q.map, g)).is_zero());
      }
  for (const auto& [l, z] : s.left) CHECK(ret(r.i_push(z)) == z);
}

TEST_CASE("direct sums") {
  MVCategory c(mv_fixture("dual", Field::gf(2)));
  auto r = mv_recollement(c.data());
  Module p = c.s_cat().projective(0);
  auto a = r.j_shriek(p);
  auto b = mv_intermediate(c, c.s_cat().simple(0)).object;
  auto s = c.direct_sum(a, b);
  CHECK(c.object_violation(s.object).empty());
  for (const auto& m : s.injections) CHECK(c.morphism_violation(m).empty());
  for (const auto& m : s.projections) CHECK(c.morphism_violation(m).empty());
  CHECK(c.is_identity(c.compose(s.projections[0], s.injections[0])));
  CHECK(c.is_zero(c.compose(s.projections[1], s.injections[0])));
  CHECK(c.is_isomorphic(s.object, c.direct_sum(b, a).object) == Decision::Yes);
  CHECK(c.is_isomorphic(a, b) == Decision::No);
}

TEST_CASE("suite report") {
  auto rep = mv_suite(mv_fixture("dual"), 7, 20);
  CHECK(rep.ok());
  CHECK(rep.intermediate_checked >= 2);
  CHECK(rep.probes.probes == 20);
}
