#include "algcore/fixtures.hpp"
#include "doctest.h"
#include "modcat/homological.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <cmath>
#include <set>

using namespace stratakit;
using namespace stratakit::mod;
using alg::fixture_algebra;
using la::Field;

namespace {

bool iso(const ModCat& c, const Module& m, const Module& n) { return c.is_isomorphic(m, n).decision == Decision::Yes; }

}  // namespace

TEST_CASE("projectives, simples and injectives") {
  ModCat a2(fixture_algebra("A2"));
  CHECK(a2.projective(0).dim() == 2);
  CHECK(a2.projective(1).dim() == 1);
  CHECK(a2.injective(0).dim() == 1);
  CHECK(a2.injective(1).dim() == 2);

  ModCat ss(testing::quiver_algebra(Field::gf(3), {"1", "2"}, {}));
  for (std::size_t v = 0; v < 2; ++v) {
    CHECK(ss.projective(v).dim() == 1);
    CHECK(iso(ss, ss.projective(v), ss.simple(v)));
    CHECK(iso(ss, ss.injective(v), ss.simple(v)));
  }

  ModCat nak(fixture_algebra("NAK"));
  for (std::size_t v = 0; v < 2; ++v) {
    CHECK(nak.projective(v).dim() == 2);
    CHECK(nak.injective(v).dim() == 2);
  }
  for (const auto& name : alg::fixture_names()) {
    ModCat c(fixture_algebra(name, Field::gf(3)));
    for (std::size_t v = 0; v < c.algebra().vertex_count(); ++v) {
      CHECK(check_module(c.projective(v)).ok());
      CHECK(check_module(c.simple(v)).ok());
      CHECK(check_module(c.injective(v)).ok());
      CHECK(c.top_vertices(c.projective(v)) == std::vector<std::size_t>{v});
      CHECK(c.socle_vertices(c.injective(v)) == std::vector<std::size_t>{v});
      CHECK(c.is_projective(c.projective(v)));
      CHECK(c.is_injective(c.injective(v)));
    }
  }
}

TEST_CASE("module axioms are checked") {
  ModCat a2(fixture_algebra("A2"));
  auto acts = a2.projective(0).actions();
  acts[2] = la::Matrix::identity(Field::gf(2), 2);  // a acting as identity
  CHECK_FALSE(check_module(Module(a2.algebra(), 2, acts)).ok());
  CHECK_THROWS_AS(Module(a2.algebra(), 2, {}), ModuleError);
}

TEST_CASE("hom spaces") {
  ModCat a2(fixture_algebra("A2"));
  CHECK(hom_dim(a2.projective(0), a2.projective(0)) == 1);
  CHECK(hom_dim(a2.projective(1), a2.projective(0)) == 1);
  CHECK(hom_dim(a2.projective(0), a2.projective(1)) == 0);
  CHECK(hom_dim(a2.simple(0), a2.simple(1)) == 0);
  for (const auto& f : hom_basis(a2.projective(1), a2.projective(0)))
    CHECK(is_homomorphism(f.source(), f.target(), f.matrix()));
}

TEST_CASE("Yoneda and projective-simple duality on random modules") {
  std::mt19937_64 rng(23);
  for (const auto& name : alg::fixture_names()) {
    for (auto f : {Field::gf(2), Field::gf(3)}) {
      ModCat c(fixture_algebra(name, f));
      const std::size_t nv = c.algebra().vertex_count();
      for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t w = 0; w < nv; ++w) CHECK(hom_dim(c.projective(v), c.simple(w)) == (v == w ? 1u : 0u));
      for (int trial = 0; trial < 8; ++trial) {
        Module m = testing::random_module(c, rng);
        CHECK(check_module(m).ok());
        auto dv = m.dimension_vector();
        for (std::size_t v = 0; v < nv; ++v) CHECK(hom_dim(c.projective(v), m) == dv[v]);
      }
    }
  }
}

TEST_CASE("kernel, cokernel and image examples") {
  ModCat a2(fixture_algebra("A2"));
  const Module& p1 = a2.projective(0);
  auto id = ModuleMap::identity(p1);
  CHECK(kernel(id).module.dim() == 0);
  CHECK(image(id).module.dim() == 2);
  CHECK(cokernel(id).module.dim() == 0);
  auto z = ModuleMap::zero(p1, p1);
  CHECK(kernel(z).module.dim() == 2);
  CHECK(image(z).module.dim() == 0);

  auto f = hom_basis(a2.projective(1), p1).front();
  Image im = image(f);
  CHECK(iso(a2, im.module, a2.simple(1)));
  auto soc = structural_series(p1).socle;
  CHECK(la::Subspace::from_columns(im.inclusion.matrix()) == la::Subspace::from_columns(soc.inclusion.matrix()));
  CHECK(iso(a2, cokernel(f).module, a2.simple(0)));
}

TEST_CASE("kernel and cokernel universal properties on random maps") {
  std::mt19937_64 rng(29);
  for (const auto& name : alg::fixture_names()) {
    ModCat c(fixture_algebra(name, Field::gf(3)));
    for (int trial = 0; trial < 10; ++trial) {
      Module m = testing::random_module(c, rng), n = testing::random_module(c, rng), x = testing::random_module(c, rng);
      ModuleMap f = testing::random_map(m, n, rng);
      Submodule k = kernel(f);
      QuotientModule q = cokernel(f);
      CHECK((f * k.inclusion).is_zero());
      CHECK((q.projection * f).is_zero());
      CHECK(check_module(k.module).ok());
      CHECK(check_module(q.module).ok());
      // every g : X -> M with f g = 0 factors uniquely through the kernel
      auto homs = hom_basis(x, m);
      la::Matrix comp(x.field(), n.dim() * x.dim(), 0);
      for (const auto& g : homs) comp = comp.hcat((f * g).matrix().vec());
      la::Matrix killers = homs.empty() ? la::Matrix(x.field(), 0, 0) : comp.null_space();
      for (std::size_t col = 0; col < killers.cols(); ++col) {
        la::Matrix g(x.field(), m.dim(), x.dim());
        for (std::size_t i = 0; i < homs.size(); ++i) g.add_scaled(homs[i].matrix(), killers.at(i, col));
        auto u = k.inclusion.matrix().solve(g);
        REQUIRE(u);
        CHECK(u->kernel.cols() == 0);
        CHECK(is_homomorphism(x, k.module, u->particular));
      }
      // every h : N -> X with h f = 0 factors through the cokernel
      ModuleMap h = testing::random_map(n, x, rng);
      if ((h * f).is_zero()) {
        la::Matrix u = h.matrix() * q.section;
        CHECK(u * q.projection.matrix() == h.matrix());
        CHECK(is_homomorphism(q.module, x, u));
      }
      // image = kernel of cokernel
      Image im = image(f);
      CHECK(im.module.dim() == kernel(q.projection).module.dim());
      CHECK(im.inclusion * im.coimage == f);
    }
  }
}

TEST_CASE("structural series") {
  ModCat ss(testing::quiver_algebra(Field::gf(2), {"1", "2"}, {}));
  Module m = direct_sum(ss.algebra(), {ss.simple(0), ss.simple(1)}).module;
  auto s = structural_series(m);
  CHECK(s.radical.module.dim() == 0);
  CHECK(s.top.module.dim() == 2);
  CHECK(s.socle.module.dim() == 2);

  ModCat a2(fixture_algebra("A2"));
  auto p = structural_series(a2.projective(0));
  CHECK(iso(a2, p.top.module, a2.simple(0)));
  CHECK(iso(a2, p.socle.module, a2.simple(1)));

  ModCat dual(fixture_algebra("DUAL"));
  auto d = structural_series(dual.regular());
  CHECK(d.radical.module.dim() == 1);
  CHECK(la::Subspace::from_columns(d.radical.inclusion.matrix()) ==
        la::Subspace::from_columns(d.socle.inclusion.matrix()));
}

TEST_CASE("projective covers and injective envelopes") {
  ModCat a2(fixture_algebra("A2"));
  Cover c = a2.projective_cover(a2.projective(0));
  CHECK(c.map.is_iso());
  Cover s1 = a2.projective_cover(a2.simple(0));
  CHECK(s1.projective.vertices == std::vector<std::size_t>{0});
  CHECK(iso(a2, kernel(s1.map).module, a2.simple(1)));
  Module both = direct_sum(a2.algebra(), {a2.simple(0), a2.simple(1)}).module;
  CHECK(a2.projective_cover(both).projective.vertices == std::vector<std::size_t>{0, 1});

  Envelope e2 = a2.injective_envelope(a2.simple(1));
  CHECK(e2.injective.dim() == 2);
  CHECK(e2.map.is_injective());
  CHECK(is_homomorphism(e2.map.source(), e2.map.target(), e2.map.matrix()));
  CHECK(a2.injective_envelope(a2.simple(0)).injective.dim() == 1);
  CHECK(a2.injective_envelope(a2.injective(1)).map.is_iso());

  std::mt19937_64 rng(31);
  for (const auto& name : alg::fixture_names()) {
    ModCat cat(fixture_algebra(name, Field::gf(3)));
    for (int trial = 0; trial < 6; ++trial) {
      Module m = testing::random_module(cat, rng);
      Cover cv = cat.projective_cover(m);
      CHECK(cv.map.is_surjective());
      CHECK(cv.projective.vertices == cat.top_vertices(m));
      // essential: the kernel sits in the radical
      CHECK(radical_subspace(cv.projective.module).contains(kernel(cv.map).inclusion.matrix()));
      Envelope ev = cat.injective_envelope(m);
      CHECK(ev.map.is_injective());
      CHECK(ev.vertices == cat.socle_vertices(m));
      CHECK(is_homomorphism(m, ev.injective, ev.map.matrix()));
    }
  }
}

TEST_CASE("isomorphism decisions") {
  ModCat a2(fixture_algebra("A2"));
  auto same = a2.is_isomorphic(a2.projective(0), a2.projective(0));
  CHECK(same.decision == Decision::Yes);
  REQUIRE(same.iso);
  CHECK(same.iso->is_iso());
  auto diff = a2.is_isomorphic(a2.simple(0), a2.simple(1));
  CHECK(diff.decision == Decision::No);
  CHECK_FALSE(diff.reason.empty());

  // a twisted copy of P(1) over Q is found
  ModCat q(fixture_algebra("A3", Field::rationals()));
  const Module& p = q.projective(0);
  la::Matrix t(p.field(), {{1, 2, 0}, {0, 3, 1}, {1, 0, 1}});
  auto ti = *t.inverse();
  std::vector<la::Matrix> acts;
  for (const auto& r : p.actions()) acts.push_back(ti * r * t);
  Module twisted(p.algebra(), p.dim(), acts);
  auto r = q.is_isomorphic(p, twisted);
  CHECK(r.decision == Decision::Yes);

  // same dimension vector, different structure: S(1) + S(2) versus P(1)
  Module split = direct_sum(a2.algebra(), {a2.simple(0), a2.simple(1)}).module;
  CHECK(a2.is_isomorphic(split, a2.projective(0)).decision == Decision::No);
}

TEST_CASE("minimal resolutions") {
  ModCat a2(fixture_algebra("A2"));
  auto rp = a2.resolution(a2.projective(0), 3);
  CHECK(rp->terms[0].vertices == std::vector<std::size_t>{0});
  for (std::size_t i = 1; i <= 3; ++i) CHECK(rp->terms[i].vertices.empty());

  auto rs = a2.resolution(a2.simple(0), 3);
  CHECK(rs->terms[1].vertices == std::vector<std::size_t>{1});
  CHECK(rs->terms[2].vertices.empty());

  ModCat nak(fixture_algebra("NAK"));
  auto rn = nak.resolution(nak.simple(0), 5);
  for (std::size_t i = 0; i <= 5; ++i) CHECK(rn->terms[i].vertices == std::vector<std::size_t>{i % 2});

  std::mt19937_64 rng(37);
  for (const auto& name : alg::fixture_names()) {
    ModCat c(fixture_algebra(name, Field::gf(3)));
    for (int trial = 0; trial < 5; ++trial) {
      Module m = testing::random_module(c, rng);
      auto r = c.resolution(m, 3);
      CHECK((r->augmentation * r->d(1)).is_zero());
      for (std::size_t i = 1; i < 3; ++i) {
        CHECK((r->d(i) * r->d(i + 1)).is_zero());
        // exact at P_i and minimal
        CHECK(kernel(r->d(i)).module.dim() == image(r->d(i + 1)).module.dim());
        CHECK(radical_subspace(r->terms[i - 1].module).contains(r->d(i).matrix()));
      }
      CHECK(kernel(r->augmentation).module.dim() == image(r->d(1)).module.dim());
    }
  }
}

TEST_CASE("ext examples") {
  ModCat a2(fixture_algebra("A2"));
  CHECK(ext(a2, a2.simple(0), a2.simple(1), 1)->dim() == 1);
  CHECK(ext(a2, a2.simple(1), a2.simple(0), 1)->dim() == 0);
  for (std::size_t v = 0; v < 2; ++v)
    for (std::size_t w = 0; w < 2; ++w) CHECK(ext(a2, a2.projective(v), a2.simple(w), 1)->dim() == 0);
  ModCat nak(fixture_algebra("NAK"));
  CHECK(ext(nak, nak.simple(0), nak.simple(0), 2)->dim() == 1);
  CHECK(ext(nak, nak.simple(0), nak.simple(1), 2)->dim() == 0);

  std::mt19937_64 rng(41);
  for (const auto& name : alg::fixture_names()) {
    ModCat c(fixture_algebra(name, Field::gf(3)));
    for (int trial = 0; trial < 5; ++trial) {
      Module m = testing::random_module(c, rng, 4), n = testing::random_module(c, rng, 4);
      CHECK(ext(c, m, n, 0)->dim() == hom_dim(m, n));
    }
  }
}

TEST_CASE("ext^1 matches exhaustive extension enumeration over GF(2)") {
  for (const auto& name : {"A2", "NAK", "DUAL"}) {
    ModCat c(fixture_algebra(name));
    const std::size_t nv = c.algebra().vertex_count();
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t w = 0; w < nv; ++w)
        CHECK(ext(c, c.simple(v), c.simple(w), 1)->dim() == testing::brute_force_ext1(c.simple(v), c.simple(w)));
  }
  std::mt19937_64 rng(43);
  for (const auto& name : {"A2", "A3", "NAK", "DUAL"}) {
    ModCat c(fixture_algebra(name));
    int done = 0;
    for (int trial = 0; trial < 40 && done < 6; ++trial) {
      Module m = testing::random_module(c, rng, 3), n = testing::random_module(c, rng, 3);
      if (c.algebra().dim() * m.dim() * n.dim() > 18) continue;
      ++done;
      CHECK(ext(c, m, n, 1)->dim() == testing::brute_force_ext1(m, n));
    }
    CHECK(done > 0);
  }
}

TEST_CASE("realizing extension classes") {
  ModCat a2(fixture_algebra("A2"));
  auto space = ext(a2, a2.simple(0), a2.simple(1), 1);
  ShortExact split = realize_ext1(ExtClass{space, la::Matrix(Field::gf(2), 1, 1)});
  CHECK(is_short_exact(split));
  Module sum = direct_sum(a2.algebra(), {a2.simple(0), a2.simple(1)}).module;
  CHECK(iso(a2, split.middle(), sum));
  ShortExact gen = realize_ext1(ext_basis(space).front());
  CHECK(is_short_exact(gen));
  CHECK(iso(a2, gen.middle(), a2.projective(0)));

  std::mt19937_64 rng(47);
  for (const auto& name : alg::fixture_names()) {
    ModCat c(fixture_algebra(name, Field::gf(3)));
    for (int trial = 0; trial < 6; ++trial) {
      Module m = testing::random_module(c, rng, 4), n = testing::random_module(c, rng, 4);
      auto sp = ext(c, m, n, 1);
      la::Matrix coords = testing::random_matrix(m.field(), sp->dim(), 1, rng);
      ExtClass cls{sp, coords};
      ShortExact s = realize_ext1(cls);
      CHECK(is_short_exact(s));
      CHECK(check_module(s.middle()).ok());
      CHECK(extension_class(sp, s).coords == coords);
    }
  }
}

TEST_CASE("universal extensions") {
  ModCat a2(fixture_algebra("A2"));
  auto u = universal_extension(a2, a2.simple(0), {a2.simple(1)});
  CHECK(u.multiplicities == std::vector<std::size_t>{1});
  CHECK(iso(a2, u.ses.middle(), a2.projective(0)));
  auto trivial = universal_extension(a2, a2.simple(1), {a2.simple(0)});
  CHECK(trivial.multiplicities == std::vector<std::size_t>{0});
  CHECK(iso(a2, trivial.ses.middle(), a2.simple(1)));

  ModCat nak(fixture_algebra("NAK"));
  auto un = universal_extension(nak, nak.simple(0), {nak.simple(1)});
  CHECK(is_short_exact(un.ses));
  CHECK(iso(nak, un.ses.middle(), nak.projective(0)));

  ModCat a3(fixture_algebra("A3", Field::gf(3)));
  auto u3 = universal_extension(a3, a3.simple(0), {a3.simple(1), a3.simple(2)});
  CHECK(u3.multiplicities == std::vector<std::size_t>{1, 0});
  CHECK(u3.ses.middle().dim() == 2);
}
