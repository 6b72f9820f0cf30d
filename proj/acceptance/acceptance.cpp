#include "algcore/fixtures.hpp"
#include "analyze/analyze.hpp"
#include "cli/commands.hpp"
#include "modcat/homological.hpp"
#include "modcat/sampling.hpp"
#include "mvglue/mv.hpp"
#include "oracles.hpp"
#include "recol/idempotent.hpp"
#include "recol/intermediate.hpp"
#include "strat/corpus.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace stratakit;
using la::Field;
using mod::Decision;

namespace {

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

const std::vector<Field>& fields() {
  static const std::vector<Field> fs{Field::gf(2), Field::gf(3)};
  return fs;
}

std::vector<alg::VertexSet> proper_subsets(std::size_t n) {
  std::vector<alg::VertexSet> out;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    alg::VertexSet s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    out.push_back(s);
  }
  return out;
}

std::string tag(const Field& f, const std::string& what) { return f.name() + " " + what; }

std::string sign_word(const strat::SignMap& e) {
  std::string s;
  for (auto x : e) s.push_back(strat::to_char(x));
  return s;
}

bool is_total_order(const strat::NamedStratification& ns) {
  return ns.strat.poset().size() == ns.strat.vertex_count() && ns.name.find("trivial") == std::string::npos &&
         ns.name.find('{') == std::string::npos;
}

// 1. recollement axioms for every fixture and every vertex-idempotent
Outcome recollement_axioms() {
  Outcome o;
  for (const auto& f : fields())
    for (const auto& name : alg::fixture_names()) {
      mod::ModCat cat(alg::fixture_algebra(name, f));
      for (const auto& u : proper_subsets(cat.algebra().vertex_count())) {
        auto ir = recol::make_idempotent_recollement(cat, u);
        auto s = recol::standard_samples(ir);
        auto rep = recol::verify_recollement(ir.r, s.center, s.left, s.right);
        o.checked += rep.checks;
        for (const auto& v : rep.violations) o.failures.push_back(tag(f, name) + " " + v.axiom + " at " + v.witness);
      }
    }
  return o;
}

// 2. simple classification
Outcome simple_classification() {
  Outcome o;
  for (const auto& f : fields())
    for (const auto& ns : strat::fixture_stratifications(f)) {
      auto cl = strat::classify_simples(ns.strat);
      o.expect(cl.ok(), tag(f, ns.name) + " classification incomplete or redundant");
      o.expect(cl.entries.size() == ns.strat.vertex_count(), tag(f, ns.name) + " simple count differs from vertex count");
    }
  return o;
}

// 3. intermediate-extension contracts on randomized morphisms
Outcome intermediate_contracts() {
  Outcome o;
  mod::Sampler smp(20261018);
  std::size_t morphisms = 0;
  for (const auto& name : alg::fixture_names()) {
    mod::ModCat cat(alg::fixture_algebra(name));
    auto subsets = proper_subsets(cat.algebra().vertex_count());
    if (subsets.empty()) {
      o.note += name + " has no proper idempotent; ";
      continue;
    }
    std::vector<recol::IdempotentRecollement> irs;
    for (const auto& u : subsets) irs.push_back(recol::make_idempotent_recollement(cat, u));
    for (int t = 0; t < 50; ++t) {
      const auto& r = irs[t % irs.size()].r;
      const auto& uc = r.right.modcat();
      mod::Module y = smp.module(uc, 5);
      mod::ModuleMap g = t % 3 == 0 ? smp.mono_into(y) : t % 3 == 1 ? smp.epi_from(y) : smp.map(y, smp.module(uc, 5));
      ++morphisms;
      const std::string w = name + " morphism " + std::to_string(t);
      try {
        for (const auto& x : {g.source(), g.target()}) {
          auto ex = recol::intermediate_extension(r, x);
          o.expect(r.left.is_zero(r.i_pull(ex.object)), w + ": i^* j_!* nonzero");
          o.expect(r.left.is_zero(r.i_shriek(ex.object)), w + ": i^! j_!* nonzero");
          o.expect(r.right.is_isomorphic(r.j_pull(ex.object), x) == Decision::Yes, w + ": j^* j_!* not iso to id");
        }
        auto h = recol::intermediate_extension_map(r, g);
        o.expect(mod::is_homomorphism(h.source(), h.target(), h.matrix()), w + ": j_!* g is not a homomorphism");
        if (g.is_injective()) o.expect(h.is_injective(), w + ": mono not preserved");
        if (g.is_surjective()) o.expect(h.is_surjective(), w + ": epi not preserved");
      } catch (const std::exception& e) {
        o.failures.push_back(w + ": " + e.what());
      }
    }
  }
  o.note += std::to_string(morphisms) + " morphisms";
  return o;
}

// 4. constructive cover synthesis
Outcome cover_synthesis() {
  Outcome o;
  for (const auto& f : fields())
    for (const auto& ns : strat::fixture_stratifications(f))
      for (std::size_t t = 0; t < ns.strat.vertex_count(); ++t) {
        const std::string w = tag(f, ns.name) + " P(" + ns.strat.vertex_name(t) + ")";
        auto r = strat::synthesize_projective_cover(ns.strat, t);
        o.expect(r.ok(), w + ": synthesis assertions failed");
        auto direct = ns.strat.modcat().projective(t);
        o.expect(ns.strat.modcat().is_isomorphic(r.projective, direct).decision == Decision::Yes,
                 w + ": not isomorphic to the projective cover");
      }
  return o;
}

// 5. porism, plus the NAK case where only the quotient-layers certificate exists
Outcome porism_suite() {
  Outcome o;
  for (const auto& f : fields())
    for (const auto& ns : strat::fixture_stratifications(f)) {
      strat::StandardFamily fam(ns.strat);
      for (std::size_t b = 0; b < ns.strat.vertex_count(); ++b) {
        auto r = strat::porism_check(ns.strat, fam, b);
        o.expect(r.ok(), tag(f, ns.name) + " P(" + ns.strat.vertex_name(b) + ")");
      }
    }
  auto a = alg::fixture_algebra("NAK");
  strat::Stratification s(a, strat::Poset::chain({"1", "2"}), {0, 1});
  strat::StandardFamily fam(s);
  strat::Allowed allowed;
  for (std::size_t v = 0; v < s.vertex_count(); ++v) allowed.push_back({"Delta", fam.at(v).delta});
  strat::SearchOptions oracle;
  oracle.oracle = true;
  auto exact = strat::filtration_search(s.modcat(), s.modcat().projective(0), allowed, strat::LayerMode::Exact, oracle);
  o.expect(!exact.found() && exact.exhaustive, "NAK:1<2 P(1) should have no exact Delta-filtration");
  o.expect(strat::porism_check(s, fam, 0).ok(), "NAK:1<2 P(1) quotient-layers certificate missing");
  return o;
}

struct EpsRecord {
  std::string fixture, name;
  strat::Stratification strat;
  strat::SignMap eps;
  Decision verdict;
};

std::vector<EpsRecord>& eps_records() {
  static std::vector<EpsRecord> records;
  return records;
}

// 6. route agreement for every fixture and sign pattern
Outcome eps_equivalence() {
  Outcome o;
  strat::SearchOptions oracle;
  oracle.oracle = true;
  std::size_t yes = 0, no = 0;
  for (const auto& ns : strat::fixture_stratifications()) {
    if (ns.strat.poset().size() > 3) continue;
    for (const auto& e : strat::all_sign_maps(ns.strat.poset().size())) {
      const std::string w = ns.name + " eps=" + sign_word(e);
      auto ag = analyze::epsilon_all_routes(ns.strat, e, oracle, false);
      o.expect(ag.agree(), w + ": routes disagree");
      const Decision v = ag.verdict();
      o.expect(v != Decision::Unknown, w + ": no definite verdict");
      yes += v == Decision::Yes;
      no += v == Decision::No;
      eps_records().push_back({ns.fixture, ns.name, ns.strat, e, v});
      if (ns.fixture == "A2" || ns.fixture == "A3")
        o.expect(v == Decision::Yes, w + ": expected YES");
      if (ns.fixture == "NAK" && is_total_order(ns)) {
        o.expect(v == Decision::No, w + ": expected NO");
        // the witness is Ext^2 of the simple at the minimal element: S(1) for 1<2, S(2) for 2<1
        std::size_t bottom = 0;
        while (ns.strat.rho(bottom) != 0) ++bottom;
        const auto& th = ag.routes.front();
        bool witnessed = th.homological && th.homological->witness && th.homological->witness->comparison.degree == 2 &&
                         th.homological->witness->x == bottom && th.homological->witness->y == bottom;
        o.expect(witnessed, w + ": theorem route lacks the Ext^2 self-extension witness at the minimal vertex");
      }
    }
  }
  o.note = std::to_string(yes) + " YES, " + std::to_string(no) + " NO";
  return o;
}

// 7. highest-weight detection
Outcome highest_weight() {
  Outcome o;
  strat::SearchOptions oracle;
  oracle.oracle = true;
  for (const auto& fx : {"A2", "A3"})
    for (const auto& ns : strat::fixture_stratifications()) {
      if (ns.fixture != fx || !is_total_order(ns)) continue;
      auto r = analyze::is_highest_weight(ns.strat, oracle, false);
      o.expect(r.agree(), ns.name + ": routes disagree");
      o.expect(r.verdict() == Decision::Yes, ns.name + ": expected YES");
    }
  for (const auto& fx : {"DUAL", "NAK"})
    for (const auto& ns : strat::chain_labelings(fx)) {
      auto r = analyze::is_highest_weight(ns.strat, oracle, false);
      o.expect(r.agree(), ns.name + ": routes disagree");
      o.expect(r.verdict() == Decision::No, ns.name + ": expected NO");
    }
  for (const auto& ns : strat::fixture_stratifications())
    o.expect(analyze::is_highest_weight(ns.strat, oracle, false).agree(), ns.name + ": routes disagree");
  return o;
}

// 8. Ext^1 against exhaustive enumeration of extensions
Outcome ext_oracle() {
  Outcome o;
  for (const auto& name : {"A2", "NAK", "DUAL"}) {
    mod::ModCat c(alg::fixture_algebra(name));
    const std::size_t n = c.algebra().vertex_count();
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        const auto computed = mod::ext(c, c.simple(v), c.simple(w), 1)->dim();
        const auto counted = testing::brute_force_ext1(c.simple(v), c.simple(w));
        o.expect(computed == counted, std::string(name) + " Ext^1(S" + std::to_string(v) + ",S" + std::to_string(w) +
                                          ") resolution " + std::to_string(computed) + " vs enumeration " +
                                          std::to_string(counted));
      }
  }
  return o;
}

// 9. Ext vanishing between eps-standards and eps-costandards
Outcome standard_costandard_vanishing() {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& rec : eps_records()) {
    if (rec.verdict != Decision::Yes) continue;
    ++cases;
    strat::StandardFamily fam(rec.strat);
    const auto& cat = rec.strat.modcat();
    for (std::size_t b = 0; b < rec.strat.vertex_count(); ++b)
      for (std::size_t c = 0; c < rec.strat.vertex_count(); ++c) {
        const auto& d = fam.delta_eps(b, rec.eps);
        const auto& nb = fam.nabla_eps(c, rec.eps);
        auto res = std::make_shared<const mod::Resolution>(mod::minimal_resolution(cat, d, 5));
        for (std::size_t n = 1; n <= 4; ++n) {
          const auto dim = mod::ExtSpace(cat, res, nb, n).dim();
          o.expect(dim == 0, rec.name + " eps=" + sign_word(rec.eps) + " Ext^" + std::to_string(n) + "(Delta(" +
                                 rec.strat.vertex_name(b) + "), nabla(" + rec.strat.vertex_name(c) + ")) has dim " +
                                 std::to_string(dim));
        }
      }
  }
  o.note = std::to_string(cases) + " YES cases";
  return o;
}

// 10. gluing suite
Outcome mv_suite() {
  Outcome o;
  for (const auto& f : fields())
    for (const auto& name : mv::mv_fixture_names()) {
      auto rep = mv::mv_suite(mv::mv_fixture(name, f), 20261018, 100);
      const std::string w = tag(f, name);
      o.checked += rep.recollement.checks;
      for (const auto& v : rep.recollement.violations) o.failures.push_back(w + " " + v.axiom + " at " + v.witness);
      o.expect(rep.intermediate_failures.empty() && rep.intermediate_checked > 0, w + ": j_!* formula mismatch");
      o.expect(rep.probes.probes >= 100, w + ": fewer than 100 probes");
      for (const auto& p : rep.probes.failures) o.failures.push_back(w + " probe: " + p);
      o.expect(rep.simples.ok(), w + ": simples");
    }
  return o;
}

// 11. byte-identical corpus reports
Outcome determinism() {
  Outcome o;
  const auto first = cli::render_json(cli::cmd_corpus("", 7).report);
  const auto second = cli::render_json(cli::cmd_corpus("", 7).report);
  o.expect(first == second, "corpus reports differ between runs");
  o.expect(cli::cmd_corpus("", 7).exit_code == cli::Ok, "corpus run is not all PASS");
  o.note = std::to_string(first.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "recollement axioms on every fixture and idempotent", recollement_axioms},
      {2, "simple classification complete and irredundant", simple_classification},
      {3, "intermediate extension contracts", intermediate_contracts},
      {4, "constructive projective cover synthesis", cover_synthesis},
      {5, "porism on every vertex", porism_suite},
      {6, "eps-stratification route agreement", eps_equivalence},
      {7, "highest weight detection", highest_weight},
      {8, "Ext^1 against extension enumeration", ext_oracle},
      {9, "Ext vanishing between eps-standards and costandards", standard_costandard_vanishing},
      {10, "gluing recollement suite", mv_suite},
      {11, "deterministic corpus report", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("raised: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("criterion %2d %s  %s (%zu checks%s%s, %.2fs)\n", c.id, ok ? "PASS" : "FAIL", c.title, o.checked,
                o.note.empty() ? "" : "; ", o.note.c_str(), secs);
    for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::printf("    %s\n", o.failures[i].c_str());
    if (o.failures.size() > 10) std::printf("    ... %zu more\n", o.failures.size() - 10);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed ? 1 : 0;
}
