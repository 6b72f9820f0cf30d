#include "doctest.h"
#include "exactla/subspace.hpp"
#include "support.hpp"

using namespace stratakit::la;
using stratakit::testing::for_each_vector;
using stratakit::testing::random_matrix;

TEST_CASE("rref fixed examples") {
  Field gf2 = Field::gf(2), q = Field::rationals();

  auto id = Matrix::identity(gf2, 2).rref();
  CHECK(id.reduced == Matrix::identity(gf2, 2));
  CHECK(id.rank == 2);

  auto z = Matrix(gf2, 3, 3).rref();
  CHECK(z.reduced.is_zero());
  CHECK(z.rank == 0);

  auto r = Matrix(q, {{1, 2}, {2, 4}}).rref();
  CHECK(r.reduced == Matrix(q, {{1, 2}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rationals stay exact") {
  Field q = Field::rationals();
  Scalar a = Scalar::parse(q, "3/4"), b = Scalar::parse(q, "-1/4");
  CHECK((a + b).to_string() == "1/2");
  CHECK((a / b).to_string() == "-3");
  Matrix m(q, {{3, 1}, {1, 3}});
  auto inv = m.inverse();
  REQUIRE(inv);
  CHECK((m * *inv) == Matrix::identity(q, 2));
  CHECK(inv->at(0, 0).to_string() == "3/8");
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(Field::gf(4), FieldError);
  CHECK_THROWS_AS(Scalar::parse(Field::gf(3), "1/3"), FieldError);
  CHECK(Scalar::parse(Field::gf(5), "1/2").residue() == 3);
  CHECK_THROWS_AS(Scalar::parse(Field::rationals(), "1/"), FieldError);
}

TEST_CASE("solve fixed examples") {
  Field gf2 = Field::gf(2), gf3 = Field::gf(3);
  Matrix b(gf3, {{1, 2}, {0, 1}, {2, 2}});
  auto s = Matrix::identity(gf3, 3).solve(b);
  REQUIRE(s);
  CHECK(s->particular == b);
  CHECK(s->kernel.cols() == 0);

  CHECK_FALSE(Matrix(gf3, 2, 2).solve(Matrix(gf3, {{1}, {0}})));

  auto t = Matrix(gf2, {{1, 1}}).solve(Matrix(gf2, {{0}}));
  REQUIRE(t);
  CHECK(t->particular == Matrix(gf2, {{0}, {0}}));
  CHECK(t->kernel == Matrix(gf2, {{1}, {1}}));
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
  std::mt19937_64 rng(7);
  for (auto f : {Field::gf(2), Field::gf(3), Field::gf(7), Field::rationals()}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Matrix m = random_matrix(f, r, c, rng);
      auto once = m.rref();
      CHECK(once.reduced.rref().reduced == once.reduced);
      Matrix k = m.null_space();
      CHECK(c == once.rank + k.cols());
      CHECK((m * k).is_zero());
      CHECK(k.rank() == k.cols());
    }
  }
}

TEST_CASE("solve agrees with exhaustive enumeration over small fields") {
  std::mt19937_64 rng(11);
  for (auto f : {Field::gf(2), Field::gf(3)}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      Matrix a = random_matrix(f, r, c, rng);
      Matrix b = random_matrix(f, r, 1, rng);
      // oracle: brute force over F^c
      std::size_t count = 0;
      for_each_vector(f, c, [&](const Matrix& x) {
        if (a * x == b) ++count;
      });
      auto s = a.solve(b);
      if (count == 0) {
        CHECK_FALSE(s);
        continue;
      }
      REQUIRE(s);
      CHECK(a * s->particular == b);
      std::size_t expect = 1;
      for (std::size_t i = 0; i < s->kernel.cols(); ++i) expect *= f.characteristic();
      CHECK(count == expect);
    }
  }
}

TEST_CASE("subspace algebra") {
  Field gf2 = Field::gf(2);
  auto whole = Subspace::whole(gf2, 3), zero = Subspace::zero(gf2, 3);
  CHECK(whole.sum(zero) == whole);
  CHECK(whole.intersect(zero) == zero);
  CHECK(whole.sum(whole) == whole);
  CHECK(whole.intersect(whole) == whole);

  auto u = Subspace::from_rows(Matrix(gf2, {{1, 0, 0}, {0, 1, 0}}));
  auto v = Subspace::from_rows(Matrix(gf2, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(u.intersect(v) == Subspace::from_rows(Matrix(gf2, {{0, 1, 0}})));
  CHECK(u.sum(v) == whole);
  CHECK_THROWS_AS(u.sum(Subspace::zero(gf2, 4)), DimensionError);
}

TEST_CASE("subspace intersection matches enumeration over GF(2)") {
  std::mt19937_64 rng(3);
  Field gf2 = Field::gf(2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 4;
    auto u = Subspace::from_rows(random_matrix(gf2, 1 + rng() % 3, n, rng));
    auto v = Subspace::from_rows(random_matrix(gf2, 1 + rng() % 3, n, rng));
    auto w = u.intersect(v);
    std::size_t common = 0;
    for_each_vector(gf2, n, [&](const Matrix& x) {
      bool in_u = u.contains(x), in_v = v.contains(x);
      if (in_u && in_v) ++common;
      CHECK(w.contains(x) == (in_u && in_v));
    });
    CHECK(common == (std::size_t{1} << w.dim()));
  }
}

TEST_CASE("dimension formula and quotient section on random subspaces") {
  std::mt19937_64 rng(5);
  for (auto f : {Field::gf(3), Field::rationals()}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 1 + rng() % 6;
      auto u = Subspace::from_rows(random_matrix(f, rng() % 5, n, rng));
      auto v = Subspace::from_rows(random_matrix(f, rng() % 5, n, rng));
      CHECK(u.dim() + v.dim() == u.sum(v).dim() + u.intersect(v).dim());
      auto q = u.quotient();
      CHECK(q.projection.rows() == n - u.dim());
      CHECK(q.projection * q.section == Matrix::identity(f, n - u.dim()));
      if (u.dim() > 0) CHECK((q.projection * u.basis_columns()).is_zero());
    }
  }
}
