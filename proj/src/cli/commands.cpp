#include "cli/commands.hpp"

#include "algcore/fixtures.hpp"
#include "analyze/analyze.hpp"
#include "cli/spec.hpp"
#include "strat/corpus.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

namespace stratakit::cli {

namespace {

using strat::Stratification;
using Clock = std::chrono::steady_clock;

Json matrix_json(const la::Matrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_strings()) rows.push_back(r);
  return rows;
}

const char* decision(mod::Decision d) {
  switch (d) {
    case mod::Decision::Yes: return "YES";
    case mod::Decision::No: return "NO";
    case mod::Decision::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string vertex_set(const alg::Algebra& a, const alg::VertexSet& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + a.vertex_names()[vs[i]];
  return s + "}";
}

struct Check {
  std::string name;
  bool pass = true;
  std::optional<mod::Decision> verdict;
  std::vector<std::string> witnesses;
  Json certificate = nullptr;

  Json json() const {
    Json j;
    j["name"] = name;
    j["status"] = pass ? "PASS" : "FAIL";
    if (verdict) j["verdict"] = decision(*verdict);
    std::vector<std::string> w = witnesses;
    if (!pass && w.empty()) w.push_back("check failed without a recorded witness");
    j["witnesses"] = w;
    j["certificate"] = certificate;
    return j;
  }
};

/// Runs `body`, turning exceptions into a failing check.
Check guarded(const std::string& name, const std::function<void(Check&)>& body) {
  Check c;
  c.name = name;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.witnesses.push_back(std::string("raised: ") + e.what());
  }
  return c;
}

Json filtration_json(const strat::FiltrationResult& r) {
  Json j;
  j["found"] = r.found();
  j["exhaustive"] = r.exhaustive;
  j["nodes"] = r.nodes;
  if (r.certificate) {
    const auto& c = *r.certificate;
    Json cert;
    cert["mode"] = strat::to_string(c.mode);
    cert["dim"] = c.module.dim();
    Json chain = Json::array();
    for (const auto& m : c.chain) chain.push_back(matrix_json(m));
    cert["chain"] = chain;
    Json layers = Json::array();
    for (const auto& l : c.layers) layers.push_back(Json{{"name", l.name}, {"map", matrix_json(l.map)}});
    cert["layers"] = layers;
    j["certificate"] = cert;
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

// --- checks -----------------------------------------------------------------

std::vector<Check> recollement_checks(const alg::Algebra& a) {
  std::vector<Check> out;
  mod::ModCat cat(a);
  const std::size_t n = a.vertex_count();
  for (std::size_t bits = 1; bits + 1 < (std::size_t{1} << n); ++bits) {
    alg::VertexSet u;
    for (std::size_t v = 0; v < n; ++v)
      if (bits >> v & 1) u.push_back(v);
    out.push_back(guarded("recollement e" + vertex_set(a, u), [&](Check& c) {
      auto ir = recol::make_idempotent_recollement(cat, u);
      auto s = recol::standard_samples(ir);
      auto rep = recol::verify_recollement(ir.r, s.center, s.left, s.right);
      c.pass = rep.ok();
      for (const auto& v : rep.violations) c.witnesses.push_back(v.axiom + " at " + v.witness + ": " + v.detail);
      c.certificate = Json{{"checks", rep.checks}, {"samples", rep.samples.size()}};
    }));
  }
  return out;
}

Check axioms_check(const Stratification& s, const std::string& label) {
  return guarded("stratification axioms" + label, [&](Check& c) {
    auto rep = strat::check_stratification(s);
    c.pass = rep.ok();
    for (const auto& [cond, w] : rep.failures) c.witnesses.push_back(cond + ": " + w);
    c.certificate = Json{{"layers", rep.layers_checked}};
  });
}

Check simples_check(const Stratification& s, const std::string& label) {
  return guarded("simple classification" + label, [&](Check& c) {
    auto cl = strat::classify_simples(s);
    c.pass = cl.ok() && cl.entries.size() == s.vertex_count();
    c.witnesses = cl.failures;
    if (cl.entries.size() != s.vertex_count())
      c.witnesses.push_back(std::to_string(cl.entries.size()) + " simples for " + std::to_string(s.vertex_count()) +
                            " vertices");
    Json entries = Json::array();
    for (const auto& e : cl.entries)
      entries.push_back(Json{{"vertex", s.vertex_name(e.vertex)},
                             {"element", s.element_name(e.element)},
                             {"dim", e.simple.dim()},
                             {"matches", decision(e.matches)}});
    c.certificate = Json{{"complete", cl.complete}, {"irredundant", cl.irredundant}, {"entries", entries}};
  });
}

Check porism_check(const Stratification& s, const strat::SearchOptions& opt, const std::string& label) {
  return guarded("porism" + label, [&](Check& c) {
    strat::StandardFamily fam(s);
    Json per = Json::array();
    for (std::size_t b = 0; b < s.vertex_count(); ++b) {
      auto r = strat::porism_check(s, fam, b, opt);
      if (!r.ok()) {
        c.pass = false;
        for (const auto& f : r.failures) c.witnesses.push_back("P(" + s.vertex_name(b) + "): " + f);
        if (r.failures.empty()) c.witnesses.push_back("P(" + s.vertex_name(b) + "): no quotient-layers certificate for Q");
      }
      Json allowed = Json::array();
      for (const auto& [name, m] : r.allowed) allowed.push_back(name);
      per.push_back(Json{{"vertex", s.vertex_name(b)},
                         {"q_dim", r.ses.in.source().dim()},
                         {"allowed", allowed},
                         {"filtration", filtration_json(r.filtration)}});
    }
    c.certificate = Json{{"vertices", per}};
  });
}

Check synthesis_check(const Stratification& s, const std::string& label) {
  return guarded("cover synthesis" + label, [&](Check& c) {
    Json per = Json::array();
    for (std::size_t t = 0; t < s.vertex_count(); ++t) {
      auto r = strat::synthesize_projective_cover(s, t);
      if (!r.ok()) {
        c.pass = false;
        for (const auto& f : r.failures) c.witnesses.push_back("P(" + s.vertex_name(t) + "): " + f);
        if (r.matches != mod::Decision::Yes)
          c.witnesses.push_back("P(" + s.vertex_name(t) + "): synthesized module is not certified isomorphic");
      }
      Json audit = Json::array();
      for (const auto& step : r.audit)
        audit.push_back(Json{{"element", s.element_name(step.element)},
                             {"stage", step.stage},
                             {"iteration", step.iteration},
                             {"ext1", step.multiplicities},
                             {"dim_before", step.dim_before},
                             {"dim_after", step.dim_after}});
      per.push_back(Json{{"vertex", s.vertex_name(t)}, {"dim", r.projective.dim()}, {"matches", decision(r.matches)},
                         {"audit", audit}});
    }
    c.certificate = Json{{"vertices", per}};
  });
}

std::string sign_name(const strat::SignMap& e) {
  std::string s;
  for (auto x : e) s.push_back(strat::to_char(x));
  return s;
}

Check eps_check(const Stratification& s, const strat::SignMap& eps, const strat::SearchOptions& opt,
                const std::string& label) {
  return guarded("eps-stratified eps=" + sign_name(eps) + label, [&](Check& c) {
    auto agreement = analyze::epsilon_all_routes(s, eps, opt, false);
    c.pass = agreement.agree();
    c.verdict = agreement.verdict();
    Json routes = Json::array();
    for (const auto& r : agreement.routes) {
      Json filt = Json::array();
      for (const auto& f : r.filtrations) filt.push_back(filtration_json(f));
      Json ex = Json::array();
      for (const auto& e : r.exactness)
        ex.push_back(Json{{"element", s.element_name(e.element)},
                          {"side", analyze::to_string(e.side)},
                          {"exact", e.exact},
                          {"certificate", e.certificate}});
      routes.push_back(Json{{"route", analyze::to_string(r.route)},
                            {"verdict", decision(r.verdict)},
                            {"witnesses", r.witnesses},
                            {"exactness", ex},
                            {"filtrations", filt}});
      if (r.verdict != mod::Decision::Yes)
        for (const auto& w : r.witnesses) c.witnesses.push_back(analyze::to_string(r.route) + ": " + w);
    }
    if (!c.pass) c.witnesses.insert(c.witnesses.begin(), "routes disagree");
    c.certificate = Json{{"eps", sign_name(eps)}, {"routes", routes}};
  });
}

Check hw_check(const Stratification& s, const strat::SearchOptions& opt, const std::string& label) {
  return guarded("highest weight" + label, [&](Check& c) {
    auto r = analyze::is_highest_weight(s, opt, false);
    c.pass = r.agree();
    c.verdict = r.verdict();
    if (!c.pass) c.witnesses.push_back("routes disagree");
    for (const auto& w : r.structure.witnesses) c.witnesses.push_back("structure: " + w);
    for (const auto& w : r.axioms.witnesses) c.witnesses.push_back("axioms: " + w);
    c.certificate = Json{{"structure", Json{{"verdict", decision(r.structure.verdict)}, {"witnesses", r.structure.witnesses}}},
                         {"axioms", Json{{"verdict", decision(r.axioms.verdict)}, {"witnesses", r.axioms.witnesses}}}};
  });
}

Json comparison_json(const analyze::ExtComparison& e) {
  return Json{{"degree", e.degree}, {"source_dim", e.source_dim}, {"target_dim", e.target_dim}, {"rank", e.rank}};
}

std::vector<Check> homological_checks(const Stratification& s, std::size_t n, const std::string& label) {
  std::vector<Check> out;
  for (std::size_t k = 1; k <= n; ++k)
    out.push_back(guarded(std::to_string(k) + "-homological" + label, [&](Check& c) {
      auto r = analyze::is_k_homological(s, k, n);
      c.verdict = r.holds ? mod::Decision::Yes : mod::Decision::No;
      Json w = nullptr;
      if (r.witness) {
        const auto& x = *r.witness;
        c.witnesses.push_back("Ext^" + std::to_string(x.comparison.degree) + "(S(" + s.vertex_name(x.x) + "), S(" +
                              s.vertex_name(x.y) + ")) has dim " + std::to_string(x.comparison.source_dim) +
                              " over the lower set and " + std::to_string(x.comparison.target_dim) + " over A, rank " +
                              std::to_string(x.comparison.rank));
        w = Json{{"element", s.element_name(x.element)},
                 {"x", s.vertex_name(x.x)},
                 {"y", s.vertex_name(x.y)},
                 {"comparison", comparison_json(x.comparison)}};
      }
      c.certificate = Json{{"k", k},
                           {"comparisons", r.comparisons},
                           {"auxiliary", r.auxiliary ? Json(*r.auxiliary) : Json(nullptr)},
                           {"justification", r.justification},
                           {"witness", w}};
    }));
  return out;
}

std::vector<Check> mv_checks(const mv::MVData& d, std::uint64_t seed, std::size_t probes, const std::string& label) {
  std::vector<Check> out;
  mv::MVSuiteReport rep;
  auto run = guarded("mv suite" + label, [&](Check& c) {
    rep = mv::mv_suite(d, seed, probes);
    c.certificate = Json{{"naturality_family", mv::naturality_family()}};
  });
  if (!run.pass) return {run};
  out.push_back(run);
  Check r{"mv recollement axioms" + label, rep.recollement.ok(), {}, {}, Json{{"checks", rep.recollement.checks}}};
  for (const auto& v : rep.recollement.violations) r.witnesses.push_back(v.axiom + " at " + v.witness + ": " + v.detail);
  out.push_back(r);
  out.push_back({"mv intermediate extension" + label, rep.intermediate_failures.empty(), {}, rep.intermediate_failures,
                 Json{{"objects", rep.intermediate_checked}}});
  Json simples = Json::array();
  for (const auto& s : rep.simples.simples) simples.push_back(s.label);
  out.push_back({"mv simples" + label, rep.simples.ok(), {}, rep.simples.failures, Json{{"simples", simples}}});
  out.push_back({"mv universal properties" + label, rep.probes.ok(), {}, rep.probes.failures,
                 Json{{"probes", rep.probes.probes}, {"seed", seed}}});
  return out;
}

// --- report assembly ----------------------------------------------------------

Json header(const std::string& command) {
  Json j;
  j["tool"] = "stratakit";
  j["version"] = version();
  j["command"] = command;
  return j;
}

CommandResult error_result(Json report, int code, const std::string& kind, const std::string& message, bool timing,
                           Clock::time_point start) {
  report["error"] = Json{{"kind", kind}, {"message", message}};
  report["timing"] = timing ? Json{{"total_ms", std::chrono::duration<double, std::milli>(Clock::now() - start).count()}}
                            : Json(nullptr);
  return {code, report};
}

void finish(Json& report, const std::vector<Check>& checks, bool timing, Clock::time_point start) {
  Json arr = Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    arr.push_back(c.json());
    failed += c.pass ? 0 : 1;
  }
  report["checks"] = arr;
  report["summary"] = Json{{"passed", checks.size() - failed}, {"failed", failed}, {"status", failed ? "FAIL" : "PASS"}};
  report["timing"] = timing ? Json{{"total_ms", std::chrono::duration<double, std::milli>(Clock::now() - start).count()}}
                            : Json(nullptr);
}

std::string describe_build_error(const std::exception& e) {
  if (auto* a = dynamic_cast<const alg::AlgebraError*>(&e)) return std::string(alg::to_string(a->code())) + ": " + e.what();
  if (auto* s = dynamic_cast<const strat::StratError*>(&e)) return strat::to_string(s->code()) + ": " + e.what();
  if (dynamic_cast<const mv::MVError*>(&e)) return std::string("INVALID-GLUING: ") + e.what();
  return e.what();
}

}  // namespace

const char* version() { return STRATAKIT_VERSION; }

CommandResult cmd_validate(const std::string& text, bool timing) {
  const auto start = Clock::now();
  Json report = header("validate");
  SpecFile spec;
  try {
    spec = parse_spec(text);
  } catch (const SchemaError& e) {
    report["input_hash"] = nullptr;
    return error_result(report, SchemaFailure, "schema", e.what(), timing, start);
  }
  report["input_hash"] = spec.input_hash;
  try {
    auto built = build_spec(spec);
    std::vector<Check> checks;
    Check a{"algebra", true, {}, {}, nullptr};
    a.certificate = Json{{"field", built.algebra.field().name()},
                         {"dim", built.algebra.dim()},
                         {"vertices", built.algebra.vertex_names()},
                         {"basis", built.algebra.labels()}};
    checks.push_back(a);
    if (built.stratification) {
      const auto& s = *built.stratification;
      Json rho = Json::object();
      for (std::size_t v = 0; v < s.vertex_count(); ++v) rho[s.vertex_name(v)] = s.element_name(s.rho(v));
      checks.push_back({"stratification", true, {}, {}, Json{{"elements", s.poset().elements()}, {"rho", rho}}});
    }
    if (built.mv)
      checks.push_back({"gluing data", true, {}, {}, Json{{"naturality_family", mv::naturality_family()}}});
    finish(report, checks, timing, start);
    return {Ok, report};
  } catch (const std::exception& e) {
    return error_result(report, InvariantFailure, "invariant", describe_build_error(e), timing, start);
  }
}

CommandResult cmd_check(const std::string& text, const CheckOptions& opt) {
  const auto start = Clock::now();
  Json report = header("check");
  report["mode"] = opt.mode;
  report["options"] = Json{{"n", opt.n}, {"oracle", opt.oracle}, {"seed", opt.seed}};
  static const std::vector<std::string> modes{"recollement", "simples", "porism", "eps", "hw", "homological"};
  SpecFile spec;
  try {
    if (std::find(modes.begin(), modes.end(), opt.mode) == modes.end())
      throw SchemaError("unknown mode '" + opt.mode + "'");
    spec = parse_spec(text);
  } catch (const SchemaError& e) {
    report["input_hash"] = nullptr;
    return error_result(report, SchemaFailure, "schema", e.what(), opt.timing, start);
  }
  report["input_hash"] = spec.input_hash;
  if (opt.oracle && !spec.presentation.field.is_prime())
    return error_result(report, OracleRefused, "oracle",
                        "oracle mode enumerates Hom spaces and needs a finite field; the input is over Q", opt.timing,
                        start);
  const bool needs_strat = opt.mode != "recollement";
  if (needs_strat && !spec.stratification)
    return error_result(report, SchemaFailure, "schema", "mode '" + opt.mode + "' needs a \"stratification\" block",
                        opt.timing, start);
  BuiltSpec built;
  try {
    built = build_spec(spec);
  } catch (const std::exception& e) {
    return error_result(report, InvariantFailure, "invariant", describe_build_error(e), opt.timing, start);
  }

  strat::SearchOptions so;
  so.oracle = opt.oracle;
  so.seed = opt.seed;
  std::vector<Check> checks;
  if (opt.mode == "recollement") {
    checks = recollement_checks(built.algebra);
    if (built.mv)
      for (auto& c : mv_checks(*built.mv, opt.seed, 100, "")) checks.push_back(std::move(c));
  } else {
    const auto& s = *built.stratification;
    if (opt.mode == "simples") {
      checks.push_back(simples_check(s, ""));
    } else if (opt.mode == "porism") {
      checks.push_back(porism_check(s, so, ""));
    } else if (opt.mode == "eps") {
      auto all = s.epsilon() ? std::vector<strat::SignMap>{*s.epsilon()} : strat::all_sign_maps(s.poset().size());
      for (const auto& e : all) checks.push_back(eps_check(s, e, so, ""));
    } else if (opt.mode == "hw") {
      checks.push_back(hw_check(s, so, ""));
    } else {
      checks = homological_checks(s, opt.n, "");
      std::size_t up_to = 0;
      for (const auto& c : checks) {
        if (!c.pass || c.verdict != mod::Decision::Yes) break;
        ++up_to;
      }
      report["holds_up_to"] = up_to;
    }
  }
  finish(report, checks, opt.timing, start);
  return {report["summary"]["failed"].get<std::size_t>() ? InvariantFailure : Ok, report};
}

// --- corpus -------------------------------------------------------------------

namespace {

struct Entry {
  std::string name;
  std::vector<std::string> tags;
  bool expect_fail = false;
  std::function<std::vector<Check>(std::uint64_t)> run;
};

std::vector<Check> fixture_suite(const std::string& fixture) {
  std::vector<Check> out = recollement_checks(alg::fixture_algebra(fixture));
  strat::SearchOptions oracle;
  oracle.oracle = true;
  for (const auto& ns : strat::fixture_stratifications()) {
    if (ns.fixture != fixture) continue;
    const std::string label = " [" + ns.name + "]";
    const auto& s = ns.strat;
    out.push_back(axioms_check(s, label));
    out.push_back(simples_check(s, label));
    out.push_back(porism_check(s, {}, label));
    out.push_back(synthesis_check(s, label));
    if (s.poset().size() <= 3)
      for (const auto& e : strat::all_sign_maps(s.poset().size())) out.push_back(eps_check(s, e, oracle, label));
    out.push_back(hw_check(s, oracle, label));
  }
  return out;
}

/// Marks a check as the expected failure of a negative control.
Check expect_raise(const std::string& name, const std::function<void()>& body) {
  Check c{name, true, {}, {}, nullptr};
  try {
    body();
  } catch (const std::exception& e) {
    c.pass = false;
    c.witnesses.push_back(describe_build_error(e));
  }
  return c;
}

std::vector<Entry> corpus_entries() {
  std::vector<Entry> es;
  const std::map<std::string, std::vector<std::string>> tags{
      {"A2", {"algebra", "hereditary", "hw", "eps"}},
      {"A3", {"algebra", "hereditary", "hw", "eps"}},
      {"NAK", {"algebra", "non-hw", "eps"}},
      {"DUAL", {"algebra", "non-hw", "local"}},
      {"KRO", {"algebra", "eps", "sign-dependent"}}};
  for (const auto& name : alg::fixture_names())
    es.push_back({"FIX-" + name, tags.at(name), false, [name](std::uint64_t) { return fixture_suite(name); }});
  for (const auto& name : mv::mv_fixture_names())
    es.push_back({"FIX-MV-" + name, {"mv"}, false,
                  [name](std::uint64_t seed) { return mv_checks(mv::mv_fixture(name), seed, 100, ""); }});

  const la::Field f = la::Field::gf(2);
  es.push_back({"NEG-LOOP", {"negative"}, true, [f](std::uint64_t) {
                  return std::vector<Check>{expect_raise("build loop without relations", [f] {
                    alg::Presentation p;
                    p.field = f;
                    p.quiver = {{"1"}, {{"x", "1", "1"}}};
                    alg::build_bound_quiver_algebra(p);
                  })};
                }});
  es.push_back({"NEG-CYCLIC-POSET", {"negative"}, true, [](std::uint64_t) {
                  return std::vector<Check>{expect_raise("poset with a <= b <= a", [] {
                    strat::Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}});
                  })};
                }});
  es.push_back({"NEG-UNBALANCED-THETA", {"negative", "mv"}, true, [f](std::uint64_t) {
                  return std::vector<Check>{expect_raise("theta not balanced over R", [f] {
                    auto d = mv::mv_fixture("simple", f);
                    auto a = d.r;
                    std::vector<la::Matrix> other;
                    const std::size_t v2 = a.vertex_index("2");
                    for (std::size_t j = 0; j < a.dim(); ++j)
                      other.push_back(la::Matrix(f, {{j == a.idempotents()[v2] ? 1L : 0L}}));
                    d.n.left = other;
                    mv::require_valid(d);
                  })};
                }});
  es.push_back({"NEG-DISCRETE-PORISM", {"negative", "porism"}, true, [](std::uint64_t) {
                  auto a = alg::fixture_algebra("A2");
                  Stratification s(a, strat::Poset({"1", "2"}, {}), {0, 1});
                  return std::vector<Check>{porism_check(s, {}, " [A2:discrete]")};
                }});
  es.push_back({"NEG-NAK-EXACT-FILTRATION", {"negative", "porism"}, true, [](std::uint64_t) {
                  auto a = alg::fixture_algebra("NAK");
                  Stratification s(a, strat::Poset::chain({"1", "2"}), {0, 1});
                  strat::StandardFamily fam(s);
                  strat::Allowed allowed;
                  for (std::size_t v = 0; v < s.vertex_count(); ++v)
                    allowed.push_back({"Delta(" + s.vertex_name(v) + ")", fam.at(v).delta});
                  strat::SearchOptions o;
                  o.oracle = true;
                  Check c{"exact Delta-filtration of P(1)", true, {}, {}, nullptr};
                  auto r = strat::filtration_search(s.modcat(), s.modcat().projective(0), allowed, strat::LayerMode::Exact, o);
                  c.certificate = filtration_json(r);
                  if (!r.found()) {
                    c.pass = false;
                    c.witnesses.push_back(r.exhaustive ? "no exact filtration (exhaustive search)" : "search inconclusive");
                  }
                  return std::vector<Check>{c};
                }});
  es.push_back({"NEG-TAMPERED-CERTIFICATE", {"negative", "porism"}, true, [](std::uint64_t) {
                  auto a = alg::fixture_algebra("A2");
                  Stratification s(a, strat::Poset::chain({"1", "2"}), {0, 1});
                  strat::StandardFamily fam(s);
                  auto r = strat::porism_check(s, fam, 0);
                  Check c{"verify tampered porism certificate", true, {}, {}, nullptr};
                  if (!r.filtration.certificate) {
                    c.pass = false;
                    c.witnesses.push_back("no certificate to tamper with");
                    return std::vector<Check>{c};
                  }
                  auto cert = *r.filtration.certificate;
                  cert.chain.pop_back();
                  auto problems = strat::verify_certificate(cert, r.allowed);
                  c.pass = problems.empty();
                  c.witnesses = problems;
                  return std::vector<Check>{c};
                }});
  std::sort(es.begin(), es.end(), [](const Entry& x, const Entry& y) { return x.name < y.name; });
  return es;
}

}  // namespace

CommandResult cmd_corpus(const std::string& filter, std::uint64_t seed, bool timing) {
  const auto start = Clock::now();
  Json report = header("corpus");
  report["filter"] = filter.empty() ? Json(nullptr) : Json(filter);
  report["seed"] = seed;
  std::vector<Entry> chosen;
  for (auto& e : corpus_entries())
    if (filter.empty() || std::find(e.tags.begin(), e.tags.end(), filter) != e.tags.end()) chosen.push_back(std::move(e));

  std::vector<std::future<std::vector<Check>>> futures;
  for (const auto& e : chosen)
    futures.push_back(std::async(std::launch::async, [&e, seed] {
      try {
        return e.run(seed);
      } catch (const std::exception& ex) {
        return std::vector<Check>{Check{"suite", false, {}, {std::string("raised: ") + ex.what()}, nullptr}};
      }
    }));

  Json entries = Json::array();
  std::size_t failed = 0;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    auto checks = futures[i].get();
    bool any_fail = std::any_of(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
    bool ok = any_fail == chosen[i].expect_fail;
    failed += ok ? 0 : 1;
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(c.json());
    Json e;
    e["name"] = chosen[i].name;
    e["tags"] = chosen[i].tags;
    e["expected"] = chosen[i].expect_fail ? "FAIL" : "PASS";
    e["observed"] = any_fail ? "FAIL" : "PASS";
    e["status"] = ok ? "PASS" : "FAIL";
    e["checks"] = arr;
    entries.push_back(e);
  }
  report["entries"] = entries;
  report["summary"] = Json{{"entries", chosen.size()}, {"passed", chosen.size() - failed}, {"failed", failed},
                           {"status", failed ? "FAIL" : "PASS"}};
  report["timing"] = timing ? Json{{"total_ms", std::chrono::duration<double, std::milli>(Clock::now() - start).count()}}
                            : Json(nullptr);
  return {failed ? InvariantFailure : Ok, report};
}

// --- rendering ----------------------------------------------------------------

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

void render_checks(std::ostringstream& os, const Json& checks, const std::string& indent) {
  for (const auto& c : checks) {
    os << indent << c["status"].get<std::string>() << "  " << c["name"].get<std::string>();
    if (c.contains("verdict")) os << "  verdict=" << c["verdict"].get<std::string>();
    os << "\n";
    for (const auto& w : c["witnesses"]) os << indent << "      " << w.get<std::string>() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& r) {
  std::ostringstream os;
  os << r["tool"].get<std::string>() << " " << r["version"].get<std::string>() << " " << r["command"].get<std::string>();
  if (r.contains("mode")) os << " --mode " << r["mode"].get<std::string>();
  os << "\n";
  if (r.contains("input_hash") && r["input_hash"].is_string()) os << "input " << r["input_hash"].get<std::string>() << "\n";
  if (r.contains("error")) {
    os << "error (" << r["error"]["kind"].get<std::string>() << "): " << r["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  if (r.contains("checks")) render_checks(os, r["checks"], "");
  if (r.contains("entries"))
    for (const auto& e : r["entries"]) {
      os << e["status"].get<std::string>() << "  " << e["name"].get<std::string>() << "  (expected "
         << e["expected"].get<std::string>() << ", observed " << e["observed"].get<std::string>() << ")\n";
      if (e["status"] == "FAIL" || e["expected"] == "FAIL") render_checks(os, e["checks"], "    ");
    }
  if (r.contains("holds_up_to")) os << "holds up to k = " << r["holds_up_to"].get<std::size_t>() << "\n";
  const auto& s = r["summary"];
  os << "summary: " << s["passed"].get<std::size_t>() << " passed, " << s["failed"].get<std::size_t>() << " failed, "
     << s["status"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace stratakit::cli
