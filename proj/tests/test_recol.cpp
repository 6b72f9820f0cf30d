#include "algcore/fixtures.hpp"
#include "doctest.h"
#include "recol/idempotent.hpp"
#include "support.hpp"

using namespace stratakit;
using namespace stratakit::recol;
using alg::fixture_algebra;
using la::Field;
using mod::Module;
using mod::ModuleMap;

namespace {

std::vector<alg::VertexSet> subsets(std::size_t n) {
  std::vector<alg::VertexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    alg::VertexSet s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    out.push_back(s);
  }
  return out;
}

la::Subspace span(const Module& m, const la::Matrix& cols) {
  return cols.cols() ? la::Subspace::from_columns(cols) : la::Subspace::zero(m.field(), m.dim());
}

std::string show(const RecollementReport& rep) {
  std::string s;
  for (const auto& v : rep.violations) s += v.axiom + " @ " + v.witness + ": " + v.detail + "\n";
  return s;
}

}  // namespace

TEST_CASE("idempotent recollement axioms hold on every fixture and vertex subset") {
  for (const auto& name : alg::fixture_names()) {
    mod::ModCat cat(fixture_algebra(name));
    for (const auto& u : subsets(cat.algebra().vertex_count())) {
      CAPTURE(name);
      CAPTURE(u.size());
      auto ir = make_idempotent_recollement(cat, u);
      auto s = standard_samples(ir);
      auto rep = verify_recollement(ir.r, s.center, s.left, s.right);
      INFO(show(rep));
      CHECK(rep.ok());
      CHECK(rep.checks > 0);
    }
  }
}

namespace {

struct Setup {
  mod::ModCat cat;
  IdempotentRecollement ir;
  std::size_t vertex(const std::string& n) const { return cat.algebra().vertex_index(n); }
};

Setup setup(const std::string& fixture, const std::vector<std::string>& u_names) {
  mod::ModCat cat(fixture_algebra(fixture));
  alg::VertexSet u;
  for (const auto& n : u_names) u.push_back(cat.algebra().vertex_index(n));
  std::sort(u.begin(), u.end());
  return {cat, make_idempotent_recollement(cat, u)};
}

bool iso(const mod::ModCat& c, const Module& m, const Module& n) {
  return c.is_isomorphic(m, n).decision == Decision::Yes;
}

Module trivial_corner_module(const IdempotentRecollement& ir) { return ir.r.right.modcat().simple(0); }

}  // namespace

TEST_CASE("A2 with e = e2: functors on P(1) and on the trivial corner module") {
  auto s = setup("A2", {"2"});
  const auto& r = s.ir.r;
  const Module p1 = s.cat.projective(s.vertex("1"));
  CHECK(r.j_pull(p1).dim() == 1);
  CHECK(r.i_pull(p1).dim() == 1);
  CHECK(iso(s.cat, r.i_push(r.i_pull(p1)), s.cat.simple(s.vertex("1"))));
  CHECK(r.i_shriek(p1).is_zero());

  CHECK(s.ir.data->corner.algebra.dim() == 1);
  const Module k = trivial_corner_module(s.ir);
  CHECK(iso(s.cat, r.j_shriek(k), s.cat.simple(s.vertex("2"))));
  CHECK(r.j_push(k).dim() == 2);
  CHECK(iso(s.cat, r.j_push(k), s.cat.injective(s.vertex("2"))));
}

TEST_CASE("modules killed by e lie in the image of i_*") {
  std::mt19937_64 rng(11);
  for (const auto& name : alg::fixture_names()) {
    mod::ModCat cat(fixture_algebra(name));
    for (const auto& u : subsets(cat.algebra().vertex_count())) {
      auto ir = make_idempotent_recollement(cat, u);
      const auto& r = ir.r;
      if (ir.data->z_vertices.empty()) continue;
      for (int t = 0; t < 4; ++t) {
        Module m = r.i_push(testing::random_module(r.left.modcat(), rng));
        CHECK(m.act(ir.data->e).is_zero());
        CHECK(r.unit_i(m).is_iso());
        CHECK(r.counit_i_shriek(m).is_iso());
        CHECK(r.j_pull(m).is_zero());
      }
    }
  }
}

TEST_CASE("verify_recollement reports a corrupted j_*") {
  for (const auto& [name, u] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"A2", {"2"}}, {"NAK", {"2"}}, {"A3", {"1", "3"}}}) {
    CAPTURE(name);
    auto s = setup(name, u);
    auto bad = s.ir.r;
    bad.j_push = bad.j_shriek;
    auto ss = standard_samples(s.ir);
    auto rep = verify_recollement(bad, ss.center, ss.left, ss.right);
    REQUIRE_FALSE(rep.ok());
    for (const auto& v : rep.violations) {
      CAPTURE(v.axiom);
      CHECK(v.axiom.find("j_*") != std::string::npos);
    }
    if (name != "NAK") {
      bool exact = false;
      for (const auto& v : rep.violations) exact = exact || v.axiom.rfind("R4", 0) == 0;
      CHECK(exact);
    }
  }
}

TEST_CASE("degenerate idempotents give trivial recollements") {
  for (const auto& name : alg::fixture_names()) {
    CAPTURE(name);
    mod::ModCat cat(fixture_algebra(name));
    const std::size_t n = cat.algebra().vertex_count();
    auto one = make_idempotent_recollement(cat, subsets(n).back());
    auto zero = make_idempotent_recollement(cat, {});
    CHECK(one.data->degenerate());
    CHECK(zero.data->degenerate());
    CHECK(one.data->quotient.algebra.dim() == 0);
    CHECK(zero.data->corner.algebra.dim() == 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (const Module& m : {cat.projective(v), cat.simple(v), cat.injective(v)}) {
        CHECK(one.r.i_pull(m).is_zero());
        CHECK(one.r.i_shriek(m).is_zero());
        CHECK(one.r.counit_j_shriek(m).is_iso());
        CHECK(one.r.unit_j(m).is_iso());
        CHECK(zero.r.j_pull(m).is_zero());
        CHECK(zero.r.unit_i(m).is_iso());
        CHECK(zero.r.counit_i_shriek(m).is_iso());
      }
    }
    auto s1 = standard_samples(one);
    CHECK(s1.left.empty());
    CHECK(verify_recollement(one.r, s1.center, s1.left, s1.right).ok());
  }
}

TEST_CASE("intermediate extension of the trivial corner module") {
  for (const std::string name : {"A2", "NAK"}) {
    CAPTURE(name);
    auto s = setup(name, {"2"});
    const Module k = trivial_corner_module(s.ir);
    auto ie = intermediate_extension(s.ir.r, k);
    CHECK(ie.object.dim() == 1);
    CHECK(iso(s.cat, ie.object, s.cat.simple(s.vertex("2"))));
    CHECK(ie.from_left.is_surjective());
    CHECK(ie.to_right.is_injective());
    CHECK(ie.theta.source().dim() == 2 - (name == "A2" ? 1 : 0));
    CHECK(ie.theta.target().dim() == 2);
  }
}

TEST_CASE("intermediate extension recovers modules without Z-subobjects or Z-quotients") {
  std::mt19937_64 rng(5);
  int hits = 0;
  for (const auto& name : alg::fixture_names()) {
    mod::ModCat cat(fixture_algebra(name));
    for (const auto& u : subsets(cat.algebra().vertex_count())) {
      if (u.empty()) continue;
      auto ir = make_idempotent_recollement(cat, u);
      for (int t = 0; t < 12; ++t) {
        Module m = testing::random_module(cat, rng);
        if (!ir.r.i_pull(m).is_zero() || !ir.r.i_shriek(m).is_zero()) continue;
        ++hits;
        auto ie = intermediate_extension(ir.r, ir.r.j_pull(m));
        CHECK(iso(cat, ie.object, m));
      }
      for (std::size_t v = 0; v < ir.r.right.algebra().vertex_count(); ++v) {
        auto ie = intermediate_extension(ir.r, ir.r.right.modcat().simple(v));
        CHECK(ie.object.dim() == 1);
      }
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("canonical short exact sequences") {
  SUBCASE("A2, e = e2, m = j_* k") {
    auto s = setup("A2", {"2"});
    const auto& r = s.ir.r;
    Module m = r.j_push(trivial_corner_module(s.ir));
    CHECK_THROWS_AS(canonical_ses(r, m, SesSide::NoZQuotients), RecollementError);
    auto ses = canonical_ses(r, m, SesSide::NoZSubobjects);
    CHECK(iso(s.cat, ses.in.source(), s.cat.simple(s.vertex("2"))));
    CHECK(iso(s.cat, ses.out.target(), s.cat.simple(s.vertex("1"))));
    CHECK(ses.in.is_injective());
    CHECK(ses.out.is_surjective());
    CHECK((ses.out * ses.in).is_zero());
    CHECK(ses.in.source().dim() + ses.out.target().dim() == m.dim());
  }
  SUBCASE("modules in the image of j_!* have zero flanks") {
    for (const auto& name : alg::fixture_names()) {
      mod::ModCat cat(fixture_algebra(name));
      for (const auto& u : subsets(cat.algebra().vertex_count())) {
        auto ir = make_idempotent_recollement(cat, u);
        for (std::size_t v = 0; v < ir.r.right.algebra().vertex_count(); ++v) {
          Module m = intermediate_extension(ir.r, ir.r.right.modcat().simple(v)).object;
          for (auto side : {SesSide::NoZQuotients, SesSide::NoZSubobjects}) {
            auto ses = canonical_ses(ir.r, m, side);
            if (side == SesSide::NoZQuotients) {
              CHECK(ses.in.source().is_zero());
              CHECK(ses.out.is_iso());
            } else {
              CHECK(ses.in.is_iso());
              CHECK(ses.out.target().is_zero());
            }
          }
        }
      }
    }
  }
  SUBCASE("i_* z fails both preconditions") {
    auto s = setup("A3", {"2"});
    Module m = s.ir.r.i_push(s.ir.r.left.modcat().simple(0));
    CHECK_THROWS_AS(canonical_ses(s.ir.r, m, SesSide::NoZQuotients), RecollementError);
    CHECK_THROWS_AS(canonical_ses(s.ir.r, m, SesSide::NoZSubobjects), RecollementError);
  }
}

TEST_CASE("cover transport") {
  for (const std::string name : {"A2", "NAK"}) {
    CAPTURE(name);
    auto s = setup(name, {"2"});
    const Module k = trivial_corner_module(s.ir);
    auto tc = cover_transport(s.ir, k, s.ir.r.right.modcat().projective_cover(k));
    CHECK(tc.essential);
    CHECK(tc.projective.dim() == (name == "A2" ? 1 : 2));
    CHECK(iso(s.cat, tc.projective, s.cat.projective(s.vertex("2"))));
  }
  SUBCASE("projectives with no Z-quotient are their own transport") {
    for (const auto& name : alg::fixture_names()) {
      mod::ModCat cat(fixture_algebra(name));
      for (const auto& u : subsets(cat.algebra().vertex_count())) {
        auto ir = make_idempotent_recollement(cat, u);
        for (auto v : u) {
          const Module& p = cat.projective(v);
          REQUIRE(ir.r.i_pull(p).is_zero());
          Module x = ir.r.j_pull(p);
          auto tc = cover_transport(ir, x, ir.r.right.modcat().projective_cover(x));
          CHECK(iso(cat, tc.projective, p));
        }
      }
    }
  }
}

TEST_CASE("i^* is the largest quotient killed by e and i^! the largest submodule killed by e") {
  mod::Sampler smp(21);
  for (const auto& name : alg::fixture_names()) {
    mod::ModCat cat(fixture_algebra(name));
    for (const auto& u : subsets(cat.algebra().vertex_count())) {
      auto ir = make_idempotent_recollement(cat, u);
      const auto& e = ir.data->e;
      for (int t = 0; t < 6; ++t) {
        Module m = smp.module(cat);
        la::Subspace top_kernel = span(m, mod::kernel(ir.r.unit_i(m)).inclusion.matrix());
        la::Subspace soc = span(m, ir.r.counit_i_shriek(m).matrix());
        CHECK(ir.r.i_push(ir.r.i_pull(m)).act(e).is_zero());
        CHECK(m.act(e) * ir.r.counit_i_shriek(m).matrix() == la::Matrix(m.field(), m.dim(), soc.dim()));
        for (int k = 0; k < 4; ++k) {
          auto sub = mod::generated_submodule(m, smp.matrix(m.field(), m.dim(), 1 + smp.below(2), -1, 1));
          la::Subspace n = span(m, sub.inclusion.matrix());
          auto q = mod::quotient(m, n);
          CHECK(q.module.act(e).is_zero() == n.contains(top_kernel));
          CHECK(sub.module.act(e).is_zero() == soc.contains(n));
        }
      }
    }
  }
}

TEST_CASE("Hom between modules without Z-quotients and Z-subobjects is seen by j^*") {
  mod::Sampler smp(8);
  int pairs = 0;
  for (const auto& name : alg::fixture_names()) {
    mod::ModCat cat(fixture_algebra(name));
    for (const auto& u : subsets(cat.algebra().vertex_count())) {
      auto ir = make_idempotent_recollement(cat, u);
      const auto& r = ir.r;
      std::vector<Module> xs, ys;
      for (int t = 0; t < 3; ++t) {
        Module y = smp.module(r.right.modcat());
        xs.push_back(r.j_shriek(y));
        ys.push_back(r.j_push(y));
      }
      for (int t = 0; t < 8; ++t) {
        Module m = smp.module(cat);
        if (r.i_pull(m).is_zero()) xs.push_back(m);
        if (r.i_shriek(m).is_zero()) ys.push_back(m);
      }
      for (const auto& x : xs)
        for (const auto& y : ys) {
          ++pairs;
          CHECK(mod::hom_dim(x, y) == mod::hom_dim(r.j_pull(x), r.j_pull(y)));
        }
    }
  }
  CHECK(pairs > 100);
}

TEST_CASE("j_!* preserves monomorphisms and epimorphisms") {
  mod::Sampler smp(3);
  for (const auto& name : alg::fixture_names()) {
    mod::ModCat cat(fixture_algebra(name));
    const std::size_t n = cat.algebra().vertex_count();
    for (const auto& u : subsets(n)) {
      if (u.empty()) continue;
      auto ir = make_idempotent_recollement(cat, u);
      const auto& uc = ir.r.right.modcat();
      for (int t = 0; t < 10; ++t) {
        Module y = smp.module(uc, 5);
        for (const ModuleMap& g : {smp.mono_into(y), smp.epi_from(y)}) {
          ModuleMap h = intermediate_extension_map(ir.r, g);
          CHECK(mod::is_homomorphism(h.source(), h.target(), h.matrix()));
          if (g.is_injective()) CHECK(h.is_injective());
          if (g.is_surjective()) CHECK(h.is_surjective());
        }
      }
    }
  }
}

TEST_CASE("simples of A are i_* of Z-simples together with j_!* of U-simples") {
  for (const auto& name : alg::fixture_names()) {
    mod::ModCat cat(fixture_algebra(name));
    const std::size_t n = cat.algebra().vertex_count();
    for (const auto& u : subsets(n)) {
      auto ir = make_idempotent_recollement(cat, u);
      std::vector<Module> found;
      for (std::size_t v = 0; v < ir.r.left.algebra().vertex_count(); ++v)
        found.push_back(ir.r.i_push(ir.r.left.modcat().simple(v)));
      for (std::size_t v = 0; v < ir.r.right.algebra().vertex_count(); ++v)
        found.push_back(intermediate_extension(ir.r, ir.r.right.modcat().simple(v)).object);
      REQUIRE(found.size() == n);
      std::vector<int> hit(n, 0);
      for (const auto& m : found) {
        CHECK(m.dim() == 1);
        for (std::size_t v = 0; v < n; ++v)
          if (iso(cat, m, cat.simple(v))) ++hit[v];
      }
      for (std::size_t v = 0; v < n; ++v) CHECK(hit[v] == 1);
    }
  }
}

TEST_CASE("opposite algebras give the same verdicts") {
  for (const auto& name : alg::fixture_names()) {
    mod::ModCat cat(fixture_algebra(name));
    mod::ModCat op(alg::opposite(cat.algebra()));
    for (const auto& u : subsets(cat.algebra().vertex_count())) {
      auto a = make_idempotent_recollement(cat, u);
      auto b = make_idempotent_recollement(op, u);
      auto sa = standard_samples(a), sb = standard_samples(b);
      auto ra = verify_recollement(a.r, sa.center, sa.left, sa.right);
      auto rb = verify_recollement(b.r, sb.center, sb.left, sb.right);
      CHECK(ra.ok() == rb.ok());
      CHECK(ra.violations.size() == rb.violations.size());
      CHECK(a.data->corner.algebra.dim() == b.data->corner.algebra.dim());
      CHECK(a.data->quotient.algebra.dim() == b.data->quotient.algebra.dim());
      auto bad_a = a.r, bad_b = b.r;
      bad_a.j_push = bad_a.j_shriek;
      bad_b.j_push = bad_b.j_shriek;
      CHECK(verify_recollement(bad_a, sa.center, sa.left, sa.right).ok() ==
            verify_recollement(bad_b, sb.center, sb.left, sb.right).ok());
    }
  }
}
