#include "algcore/quiver.hpp"
#include "doctest.h"
#include "support.hpp"

#include <set>

using namespace stratakit;
using namespace stratakit::alg;
using la::Field;
using la::Matrix;
using testing::quiver_algebra;

namespace {

Algebra a2(Field f = Field::gf(2)) { return quiver_algebra(f, {"1", "2"}, {{"a", "1", "2"}}); }

Algebra nak(Field f = Field::gf(2)) {
  return quiver_algebra(f, {"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}, {{{1, "a*b"}}, {{1, "b*a"}}});
}

Algebra dual(Field f = Field::gf(2)) { return quiver_algebra(f, {"1"}, {{"x", "1", "1"}}, {{{1, "x*x"}}}); }

AlgebraError::Code build_error(const Presentation& p) {
  try {
    build_bound_quiver_algebra(p);
  } catch (const AlgebraError& e) {
    return e.code();
  }
  FAIL("expected an AlgebraError");
  return AlgebraError::Code::InvalidData;
}

std::string violated(const Algebra& a) {
  auto rep = validate_algebra(a);
  return rep.ok() ? "" : rep.violations.front().check;
}

// Paths avoiding every forbidden subpath; independent count for monomial relations.
std::size_t count_monomial_basis(std::size_t nv, const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
                                 const std::vector<std::vector<std::size_t>>& zero_paths) {
  std::vector<std::vector<std::size_t>> layer;
  std::size_t total = nv;
  for (std::size_t a = 0; a < arrows.size(); ++a) layer.push_back({a});
  for (std::size_t len = 1; len < 64 && !layer.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (auto& p : layer) {
      bool dead = false;
      for (auto& z : zero_paths)
        if (z.size() <= p.size() && std::search(p.begin(), p.end(), z.begin(), z.end()) != p.end()) dead = true;
      if (dead) continue;
      ++total;
      for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].first == arrows[p.back()].second) {
          auto q = p;
          q.push_back(a);
          next.push_back(q);
        }
    }
    layer = std::move(next);
  }
  return total;
}

}  // namespace

TEST_CASE("bound quiver examples") {
  Algebra a = a2();
  CHECK(a.dim() == 3);
  CHECK(a.labels() == std::vector<std::string>{"e1", "e2", "a"});
  CHECK(a.radical().dim() == 1);
  CHECK(dual().dim() == 2);
  CHECK(nak().dim() == 4);

  Field gf2 = Field::gf(2);
  CHECK(build_error(testing::presentation(gf2, {"1"}, {{"x", "1", "1"}})) == AlgebraError::Code::PossiblyInfinite);
  CHECK(build_error(testing::presentation(gf2, {"1", "2"}, {{"a", "1", "2"}}, {{{1, "a"}}})) ==
        AlgebraError::Code::NonAdmissible);
  CHECK(build_error(testing::presentation(gf2, {"1", "1"}, {})) == AlgebraError::Code::InvalidQuiver);
  CHECK(build_error(testing::presentation(gf2, {"1"}, {{"a", "1", "3"}})) == AlgebraError::Code::InvalidQuiver);
  CHECK(build_error(testing::presentation(gf2, {"1", "2"}, {{"a", "1", "2"}}, {{{1, "a*a"}}})) ==
        AlgebraError::Code::InvalidQuiver);
  // cancelling terms leave nothing behind
  CHECK(testing::presentation(gf2, {"1"}, {{"x", "1", "1"}}, {{{1, "x"}, {1, "x"}, {1, "x*x"}}}).relations.size() == 1);
  CHECK(quiver_algebra(gf2, {"1"}, {{"x", "1", "1"}}, {{{1, "x"}, {1, "x"}, {1, "x*x"}}}).dim() == 2);
}

TEST_CASE("bound quiver with commutativity relation") {
  // square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd
  Field q = Field::rationals();
  Algebra sq = quiver_algebra(q, {"1", "2", "3", "4"},
                              {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}},
                              {{{1, "a*b"}, {-1, "c*d"}}});
  CHECK(sq.dim() == 9);
  CHECK(validate_algebra(sq).ok());
  Matrix ab = sq.multiply(sq.generators()[4], sq.generators()[5]);
  Matrix cd = sq.multiply(sq.generators()[6], sq.generators()[7]);
  CHECK(ab == cd);
  CHECK_FALSE(ab.is_zero());
}

TEST_CASE("building is deterministic") {
  auto p = testing::presentation(Field::gf(3), {"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}},
                                 {{{1, "a*b*a"}}, {{1, "b*a*b"}}});
  Algebra x = build_bound_quiver_algebra(p), y = build_bound_quiver_algebra(p);
  CHECK(x.labels() == y.labels());
  CHECK(x.same_structure(y));
}

TEST_CASE("validation accepts fixtures and names violations") {
  for (const auto& a : {a2(), nak(), dual(), a2(Field::rationals())}) CHECK(validate_algebra(a).ok());

  Algebra base = a2();
  Algebra::Data broken = base.data();
  // a * a := e1 breaks associativity: (a a) e2 = 0 but a (a e2) = e1
  broken.right_mult[2].set(0, 2, 1);
  auto rep = validate_algebra(Algebra(broken));
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().check == "associativity");
  CHECK(rep.violations.front().witness.find("(") != std::string::npos);

  Algebra::Data bad_rad = base.data();
  bad_rad.radical = la::Subspace::from_columns(Matrix::unit_column(base.field(), 3, 0));
  auto rep2 = validate_algebra(Algebra(bad_rad));
  bool ideal = false;
  for (const auto& v : rep2.violations) ideal |= v.check == "radical-ideal";
  CHECK(ideal);

  Algebra::Data bad_unit = base.data();
  bad_unit.unit = Matrix::unit_column(base.field(), 3, 0);
  CHECK_FALSE(validate_algebra(Algebra(bad_unit)).ok());
}

TEST_CASE("corner algebra examples") {
  Algebra a = a2();
  auto full = corner_algebra(a, {0, 1});
  CHECK(full.algebra.dim() == 3);
  CHECK(full.algebra.same_structure(a));

  auto c = corner_algebra(a, {1});
  CHECK(c.algebra.dim() == 1);
  CHECK(c.embedding == Matrix::unit_column(a.field(), 3, 1));
  CHECK(corner_algebra(nak(), {1}).algebra.dim() == 1);
  CHECK(validate_algebra(c.algebra).ok());
  CHECK_THROWS_AS(corner_algebra(a, {2}), AlgebraError);
  CHECK_THROWS_AS(corner_algebra(a, {1, 0}), AlgebraError);
}

TEST_CASE("quotient by idempotent ideal examples") {
  Algebra a = a2();
  CHECK(quotient_by_idempotent_ideal(a, {0, 1}).algebra.dim() == 0);

  auto q = quotient_by_idempotent_ideal(a, {1});
  CHECK(q.algebra.dim() == 1);
  CHECK(q.ideal.dim() == 2);
  CHECK(q.vertex_map == std::vector<std::size_t>{0});
  CHECK(validate_algebra(q.algebra).ok());

  auto qn = quotient_by_idempotent_ideal(nak(), {1});
  CHECK(qn.algebra.dim() == 1);
  CHECK(qn.ideal.dim() == 3);
}

TEST_CASE("opposite algebra") {
  Algebra d = dual();
  CHECK(opposite(d).same_structure(d));
  Algebra n = nak(Field::gf(3));
  CHECK(opposite(opposite(n)).same_structure(n));
  // reversing 1 -> 2 gives the path algebra of 2 -> 1 with the same labels
  Algebra rev = quiver_algebra(Field::gf(2), {"1", "2"}, {{"a", "2", "1"}});
  CHECK(opposite(a2()).data().right_mult == rev.data().right_mult);
  CHECK(validate_algebra(opposite(n)).ok());
}

TEST_CASE("random monomial presentations: dimension oracle and invariants") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t nv = 1 + rng() % 3, na = rng() % 5;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < nv; ++v) names.push_back("v" + std::to_string(v));
    std::vector<Arrow> arrows;
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (std::size_t a = 0; a < na; ++a) {
      std::size_t s = rng() % nv, t = rng() % nv;
      arrows.push_back({"x" + std::to_string(a), names[s], names[t]});
      ends.push_back({s, t});
    }
    // kill every path of length L plus a few random length-2 paths
    std::size_t L = 2 + rng() % 2;
    std::vector<std::vector<std::size_t>> zero;
    std::vector<std::vector<std::size_t>> frontier;
    for (std::size_t a = 0; a < na; ++a) frontier.push_back({a});
    for (std::size_t len = 1; len < L; ++len) {
      std::vector<std::vector<std::size_t>> next;
      for (auto& p : frontier)
        for (std::size_t a = 0; a < na; ++a)
          if (ends[a].first == ends[p.back()].second) {
            auto q = p;
            q.push_back(a);
            next.push_back(q);
          }
      frontier = next;
    }
    zero = frontier;
    if (L == 3)
      for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < na; ++b)
          if (ends[a].second == ends[b].first && rng() % 3 == 0) zero.push_back({a, b});

    Presentation p;
    p.field = trial % 2 ? Field::gf(3) : Field::rationals();
    p.quiver = {names, arrows};
    for (auto& z : zero) {
      RelationTerm t{la::Scalar::one(p.field), {}};
      for (auto a : z) t.path.push_back(arrows[a].name);
      p.relations.push_back({{t}});
    }
    Algebra a = build_bound_quiver_algebra(p);
    CHECK(a.dim() == count_monomial_basis(nv, ends, zero));
    CHECK(validate_algebra(a).ok());
    std::size_t cartan = 0;
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t w = 0; w < nv; ++w) cartan += a.cartan_entry(v, w);
    CHECK(cartan == a.dim());
    // every vertex subset: corner and quotient stay valid, dimensions add up
    for (std::size_t mask = 0; mask < (std::size_t{1} << nv); ++mask) {
      VertexSet vs;
      for (std::size_t v = 0; v < nv; ++v)
        if (mask >> v & 1) vs.push_back(v);
      auto c = corner_algebra(a, vs);
      auto q = quotient_by_idempotent_ideal(a, vs);
      CHECK(violated(c.algebra) == "");
      CHECK(violated(q.algebra) == "");
      CHECK(q.algebra.dim() + q.ideal.dim() == a.dim());
      std::size_t corner_dim = 0;
      for (auto v : vs)
        for (auto w : vs) corner_dim += a.cartan_entry(v, w);
      CHECK(c.algebra.dim() == corner_dim);
    }
  }
}
