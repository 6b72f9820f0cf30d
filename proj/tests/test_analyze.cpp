#include "algcore/fixtures.hpp"
#include "analyze/analyze.hpp"
#include "doctest.h"
#include "strat/corpus.hpp"

using namespace stratakit;
using namespace stratakit::analyze;
using alg::fixture_algebra;
using strat::Poset;

namespace {

Stratification chain(const std::string& fixture, const std::vector<std::string>& order) {
  alg::Algebra a = fixture_algebra(fixture);
  std::vector<std::size_t> rho(a.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) rho[a.vertex_index(order[i])] = i;
  return Stratification(a, Poset::chain(order), rho);
}

Stratification single(const std::string& fixture) {
  alg::Algebra a = fixture_algebra(fixture);
  return Stratification(a, Poset({"*"}, {}), std::vector<std::size_t>(a.vertex_count(), 0));
}

strat::SearchOptions oracle() {
  strat::SearchOptions o;
  o.oracle = true;
  return o;
}

SignMap signs(const std::string& s) {
  SignMap e;
  for (char c : s) e.push_back(c == '+' ? Sign::Plus : Sign::Minus);
  return e;
}

std::size_t element(const Stratification& s, const std::string& v) { return s.rho(s.algebra().vertex_index(v)); }

}  // namespace

TEST_CASE("exactness of j_! and j_*") {
  auto a2 = chain("A2", {"1", "2"});
  for (std::size_t l = 0; l < 2; ++l)
    for (auto side : {Side::JShriek, Side::JPush}) {
      auto r = exactness_check(a2, l, side);
      CHECK(r.exact);
      CHECK_FALSE(r.certificate.empty());
    }

  auto kro = chain("KRO", {"2", "1"});
  const auto top = element(kro, "1");
  auto shriek = exactness_check(kro, top, Side::JShriek);
  CHECK_FALSE(shriek.exact);
  CHECK(shriek.certificate.find("rank") != std::string::npos);
  CHECK(exactness_check(kro, top, Side::JPush).exact);

  auto dual = single("DUAL");
  CHECK(exactness_check(dual, 0, Side::JShriek).exact);
  CHECK(exactness_check(dual, 0, Side::JPush).exact);
}

TEST_CASE("Ext comparison along the lower-set inclusion") {
  auto a2 = chain("A2", {"1", "2"});
  const Mask x = 1;
  const auto& z = a2.lower(x)->cat;
  for (std::size_t n = 0; n <= 3; ++n) {
    auto c = ext_comparison(a2, x, z.simple(0), z.simple(0), n);
    CHECK(c.iso());
    if (n == 0) CHECK(c.source_dim == 1);
    if (n == 2) CHECK(c.target_dim == 0);
  }

  auto nak = chain("NAK", {"1", "2"});
  const auto& nz = nak.lower(x)->cat;
  CHECK(ext_comparison(nak, x, nz.simple(0), nz.simple(0), 0).iso());
  CHECK(ext_comparison(nak, x, nz.simple(0), nz.simple(0), 1).iso());
  auto c = ext_comparison(nak, x, nz.simple(0), nz.simple(0), 2);
  CHECK(c.source_dim == 0);
  CHECK(c.target_dim == 1);
  CHECK_FALSE(c.iso());
}

TEST_CASE("the comparison map is injective, not only dimension-matched") {
  auto kro = chain("KRO", {"1", "2"});
  const Mask x = 1;
  const auto& z = kro.lower(x)->cat;
  for (std::size_t n = 0; n <= 3; ++n) {
    auto c = ext_comparison(kro, x, z.simple(0), z.simple(0), n);
    CAPTURE(n);
    CHECK(c.source_dim == 1);
    CHECK(c.rank == c.source_dim);
  }
}

TEST_CASE("Ext comparison in degrees 0 and 1 is an isomorphism everywhere") {
  for (const auto& ns : strat::fixture_stratifications()) {
    CAPTURE(ns.name);
    const auto& s = ns.strat;
    for (const auto& [mask, el] : s.layer_keys()) {
      const Mask z = mask & ~(Mask{1} << el);
      if (z == 0) continue;
      const auto& zc = s.lower(z)->cat;
      for (std::size_t a = 0; a < zc.algebra().vertex_count(); ++a)
        for (std::size_t b = 0; b < zc.algebra().vertex_count(); ++b)
          for (std::size_t n = 0; n <= 1; ++n) CHECK(ext_comparison(s, z, mask, zc.simple(a), zc.simple(b), n).iso());
    }
  }
}

TEST_CASE("k-homological stratifications") {
  for (const auto& name : alg::fixture_names()) {
    auto h = is_k_homological(single(name), 5);
    CHECK(h.holds);
    CHECK(h.comparisons == 0);
  }
  for (const auto& order : std::vector<std::vector<std::string>>{{"1", "2"}, {"2", "1"}})
    CHECK(is_k_homological(chain("A2", order), 2).holds);

  auto nak = chain("NAK", {"1", "2"});
  auto h = is_k_homological(nak, 2, 3);
  REQUIRE_FALSE(h.holds);
  REQUIRE(h.witness);
  CHECK(nak.vertex_name(h.witness->x) == "1");
  CHECK(nak.vertex_name(h.witness->y) == "1");
  CHECK(h.witness->comparison.degree == 2);
  CHECK_FALSE(h.justification.empty());
  REQUIRE(h.auxiliary);
  CHECK_FALSE(*h.auxiliary);

  auto a3 = is_k_homological(chain("A3", {"1", "2", "3"}), 2, 3);
  CHECK(a3.holds);
  CHECK(a3.auxiliary.value_or(false));
}

TEST_CASE("epsilon-stratified examples") {
  auto a2 = chain("A2", {"1", "2"});
  for (const auto& e : strat::all_sign_maps(2)) {
    auto r = epsilon_all_routes(a2, e, oracle());
    CHECK(r.verdict() == Decision::Yes);
  }
  auto nak = chain("NAK", {"1", "2"});
  for (const auto& e : strat::all_sign_maps(2)) {
    auto r = epsilon_all_routes(nak, e, oracle());
    CHECK(r.verdict() == Decision::No);
    bool witness = false;
    for (const auto& w : r.routes[0].witnesses) witness = witness || w.find("Ext^2(S(1), S(1))") != std::string::npos;
    CHECK(witness);
  }
  for (const auto& name : alg::fixture_names())
    for (const auto& e : strat::all_sign_maps(1)) CHECK(epsilon_all_routes(single(name), e, oracle()).verdict() == Decision::Yes);
}

TEST_CASE("Kronecker-type fixture depends on the sign at the top") {
  auto kro = chain("KRO", {"2", "1"});
  const auto top = element(kro, "1");
  for (const auto& e : strat::all_sign_maps(2)) {
    auto r = epsilon_all_routes(kro, e, oracle());
    CHECK(r.verdict() == (e[top] == Sign::Plus ? Decision::Yes : Decision::No));
  }
  auto up = chain("KRO", {"1", "2"});
  for (const auto& e : strat::all_sign_maps(2)) CHECK(epsilon_all_routes(up, e, oracle()).verdict() == Decision::Yes);
}

TEST_CASE("theorem and direct routes agree on every corpus stratification and sign") {
  for (const auto& ns : strat::fixture_stratifications()) {
    if (ns.strat.poset().size() > 3) continue;
    CAPTURE(ns.name);
    for (const auto& e : strat::all_sign_maps(ns.strat.poset().size())) {
      CAPTURE(strat::describe(e));
      auto r = epsilon_all_routes(ns.strat, e, oracle(), false);
      CHECK(r.agree());
      CHECK(r.verdict() != Decision::Unknown);
    }
  }
}

TEST_CASE("route disagreement is raised, never resolved") {
  // a disagreement can only be staged by comparing different stratifications
  auto a = is_epsilon_stratified(chain("A2", {"1", "2"}), signs("++"), Route::Theorem);
  auto b = is_epsilon_stratified(chain("NAK", {"1", "2"}), signs("++"), Route::DirectDelta, oracle());
  EpsAgreement mixed{signs("++"), {a, b}};
  CHECK_FALSE(mixed.agree());
  CHECK(mixed.verdict() == Decision::Unknown);
}

TEST_CASE("split lemma for projectives") {
  auto a2 = chain("A2", {"1", "2"});
  const auto top = element(a2, "2");
  auto r = lemma_split_check(a2, top, a2.modcat().projective(a2.algebra().vertex_index("1")));
  REQUIRE(r.exact);
  CHECK(r.ses->in.source().dim() == 1);
  CHECK(r.ses->out.target().dim() == 1);

  auto p2 = lemma_split_check(a2, top, a2.modcat().projective(a2.algebra().vertex_index("2")));
  REQUIRE(p2.exact);
  CHECK(p2.ses->out.target().dim() == 0);

  auto nak = chain("NAK", {"1", "2"});
  auto n = lemma_split_check(nak, element(nak, "2"), nak.modcat().projective(nak.algebra().vertex_index("1")));
  CHECK_FALSE(n.exact);
  CHECK(n.obstruction.find("dim j_!j^*P = 2") != std::string::npos);

  CHECK_THROWS_AS(lemma_split_check(a2, element(a2, "1"), a2.modcat().projective(0)), strat::StratError);
}

TEST_CASE("Ext vanishing between epsilon standards and costandards") {
  auto a2 = chain("A2", {"1", "2"});
  strat::StandardFamily f(a2);
  auto t = bs_vanishing_check(a2, f, signs("++"), 1);
  CHECK(t.violations().empty());
  for (const auto& e : t.entries)
    if (e.n == 0) CHECK(e.dim == (e.b == e.c ? 1u : 0u));

  for (const auto& ns : strat::fixture_stratifications()) {
    if (ns.strat.poset().size() > 3) continue;
    CAPTURE(ns.name);
    strat::StandardFamily g(ns.strat);
    for (const auto& e : strat::all_sign_maps(ns.strat.poset().size())) {
      if (is_epsilon_stratified(ns.strat, e, Route::Theorem).verdict != Decision::Yes) continue;
      CAPTURE(strat::describe(e));
      CHECK(bs_vanishing_check(ns.strat, g, e, 4).violations().empty());
    }
  }

  auto nak = chain("NAK", {"1", "2"});
  strat::StandardFamily h(nak);
  CHECK_FALSE(bs_vanishing_check(nak, h, signs("++"), 4).violations().empty());
}

TEST_CASE("highest weight detection") {
  for (const auto& order : std::vector<std::vector<std::string>>{{"1", "2"}, {"2", "1"}}) {
    auto r = is_highest_weight(chain("A2", order), oracle());
    CHECK(r.verdict() == Decision::Yes);
  }
  for (const auto& ns : strat::fixture_stratifications()) {
    if (ns.fixture != "A3" || ns.strat.poset().size() != 3) continue;
    CAPTURE(ns.name);
    CHECK(is_highest_weight(ns.strat, oracle()).verdict() == Decision::Yes);
  }
  for (const auto& fx : {"DUAL", "NAK"})
    for (const auto& ns : strat::chain_labelings(fx)) {
      CAPTURE(ns.name);
      auto r = is_highest_weight(ns.strat, oracle());
      CHECK(r.agree());
      CHECK(r.verdict() == Decision::No);
    }
  auto d = is_highest_weight(single("DUAL"), oracle());
  CHECK(d.structure.witnesses.front().find("dimension 2") != std::string::npos);
}

TEST_CASE("highest weight routes agree on every chain labeling") {
  for (const auto& fx : alg::fixture_names())
    for (const auto& ns : strat::chain_labelings(fx)) {
      CAPTURE(ns.name);
      auto r = is_highest_weight(ns.strat, oracle(), false);
      CHECK(r.agree());
    }
}

TEST_CASE("both constant signs stratified with one-dimensional strata gives highest weight") {
  for (const auto& fx : alg::fixture_names())
    for (const auto& ns : strat::chain_labelings(fx)) {
      const auto& s = ns.strat;
      const std::size_t n = s.poset().size();
      bool all_k = true;
      for (std::size_t l = 0; l < n; ++l) all_k = all_k && s.stratum_algebra(l).dim() == 1;
      if (!all_k || !is_k_homological(s, 2).holds) continue;
      CAPTURE(ns.name);
      auto plus = is_epsilon_stratified(s, SignMap(n, Sign::Plus), Route::DirectDelta, oracle());
      auto minus = is_epsilon_stratified(s, SignMap(n, Sign::Minus), Route::DirectDelta, oracle());
      if (plus.verdict == Decision::Yes && minus.verdict == Decision::Yes)
        CHECK(is_highest_weight(s, oracle()).verdict() == Decision::Yes);
    }
}
