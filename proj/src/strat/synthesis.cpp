#include "strat/synthesis.hpp"

namespace stratakit::strat {

namespace {

std::vector<Module> stratum_simples(const Layer& lay) {
  const auto& r = lay.rec.r;
  std::vector<Module> out;
  for (std::size_t c = 0; c < r.right.algebra().vertex_count(); ++c)
    out.push_back(recol::intermediate_extension(r, r.right.modcat().simple(c)).object);
  return out;
}

std::vector<std::size_t> ext1_dims(const ModCat& cat, const Module& m, const std::vector<Module>& targets) {
  std::vector<std::size_t> out;
  for (const auto& t : targets) out.push_back(mod::ext(cat, m, t, 1)->dim());
  return out;
}

bool all_zero(const std::vector<std::size_t>& v) {
  for (auto d : v)
    if (d) return false;
  return true;
}

}  // namespace

SynthesisResult synthesize_projective_cover(const Stratification& s, std::size_t t, std::size_t max_iterations) {
  SynthesisResult out;
  out.vertex = t;
  const auto& poset = s.poset();
  const auto order = poset.linear_extension();
  const std::size_t lam = s.rho(t);
  const std::string tn = s.vertex_name(t);

  Mask lower = 0;
  std::size_t k = 0;
  for (; k < order.size(); ++k) {
    lower |= Mask{1} << order[k];
    if (order[k] == lam) break;
  }
  // start: j_! of the stratum projective, at the first lower set containing lam
  Module p;
  {
    auto lay = s.layer(lower, lam);
    const auto& r = lay->rec.r;
    std::size_t c = 0;
    while (lay->u_vertices[c] != t) ++c;
    p = r.j_shriek(r.right.modcat().projective(c));
    out.audit.push_back({lower, lam, "start", 0, {}, 0, p.dim()});
  }

  for (++k; k < order.size(); ++k) {
    const Mask below = lower;
    const std::size_t el = order[k];
    lower |= Mask{1} << el;
    auto lay = s.layer(lower, el);
    const auto& cat = lay->center->cat;
    const Module pbar = s.transfer(p, below, lower);
    Module cur = pbar;

    const auto u_simples = stratum_simples(*lay);
    std::vector<Module> all_simples;
    for (std::size_t v = 0; v < cat.algebra().vertex_count(); ++v) all_simples.push_back(cat.simple(v));

    std::size_t iterations = 0;
    for (const auto& [stage, targets] : {std::pair<std::string, const std::vector<Module>*>{"stratum", &u_simples},
                                         {"all-simples", &all_simples}}) {
      while (true) {
        auto dims = ext1_dims(cat, cur, *targets);
        if (all_zero(dims)) break;
        if (++iterations > max_iterations)
          throw StratError(StratError::Code::NonTermination,
                           "cover synthesis for " + tn + " exceeded " + std::to_string(max_iterations) +
                               " universal extensions at element " + s.element_name(el));
        auto ue = mod::universal_extension(cat, cur, *targets);
        Module next = ue.ses.middle();
        out.audit.push_back({lower, el, stage, iterations, dims, cur.dim(), next.dim()});
        cur = next;
      }
    }

    // Step 1: Q = ker(P -> i_* i^* P) has top matching Ext^1(P-bar, L_U) and no Z-part
    const auto& r = lay->rec.r;
    Module q = mod::kernel(r.unit_i(cur)).module;
    auto want = ext1_dims(cat, pbar, u_simples);
    for (std::size_t c = 0; c < u_simples.size(); ++c)
      if (mod::hom_dim(q, u_simples[c]) != want[c])
        out.failures.push_back("step 1 at " + s.element_name(el) + ": top of Q does not match Ext^1(P-bar, L)");
    for (std::size_t v = 0; v < cat.algebra().vertex_count(); ++v) {
      bool in_u = false;
      for (auto u : lay->u_vertices) in_u = in_u || lay->center->vertices[v] == u;
      if (!in_u && mod::hom_dim(q, all_simples[v]) != 0)
        out.failures.push_back("step 1 at " + s.element_name(el) + ": Q has a quotient outside the new stratum");
    }
    p = cur;
  }

  const auto& full = s.lower(lower);
  const std::size_t lt = s.local_vertex(lower, t);
  if (full->cat.top_vertices(p) != std::vector<std::size_t>{lt})
    out.failures.push_back("step 3: top of the synthesized module is not L(" + tn + ") with multiplicity 1");
  for (std::size_t v = 0; v < full->cat.algebra().vertex_count(); ++v)
    if (mod::ext(full->cat, p, full->cat.simple(v), 1)->dim() != 0)
      out.failures.push_back("step 4: Ext^1 to L(" + s.vertex_name(full->vertices[v]) + ") is nonzero");

  out.projective = s.inflate(p, lower);
  out.matches = s.modcat().is_isomorphic(out.projective, s.modcat().projective(t)).decision;
  if (out.matches != Decision::Yes) out.failures.push_back("synthesized module is not certified isomorphic to P(" + tn + ")");
  return out;
}

PorismResult porism_check(const Stratification& s, const StandardFamily& f, std::size_t b, const SearchOptions& opt) {
  PorismResult out;
  out.vertex = b;
  const auto& cat = s.modcat();
  const auto& poset = s.poset();
  const std::string bn = s.vertex_name(b);
  const Module& p = cat.projective(b);
  const Module& delta = f.at(b).delta;

  // largest quotient of P(b) living over the lower set below rho(b)
  Matrix gens(p.field(), p.dim(), 0);
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    if (!poset.le(s.rho(v), s.rho(b))) gens = gens.hcat(p.vertex_action(v));
  auto sub = mod::generated_submodule(p, gens);
  auto quo = mod::quotient(p, mod::generated_subspace(p, gens));
  auto iso = cat.is_isomorphic(quo.module, delta);
  if (iso.decision != Decision::Yes) {
    out.failures.push_back("P(" + bn + ") modulo the upper strata is not certified isomorphic to Delta(" + bn + ")");
    return out;
  }
  out.ses = {sub.inclusion, *iso.iso * quo.projection};
  if (!mod::is_short_exact(out.ses)) out.failures.push_back("0 -> Q -> P -> Delta -> 0 is not exact at " + bn);

  for (std::size_t c = 0; c < s.vertex_count(); ++c)
    if (poset.lt(s.rho(b), s.rho(c))) out.allowed.emplace_back("Delta(" + s.vertex_name(c) + ")", f.at(c).delta);
  out.filtration = filtration_search(cat, sub.module, out.allowed, LayerMode::Quotient, opt);
  if (!out.filtration.found()) {
    out.failures.push_back("no filtration of Q(" + bn + ") by quotients of upper standards" +
                           (out.filtration.exhaustive ? "" : " (search not exhaustive)"));
  } else {
    for (const auto& e : verify_certificate(*out.filtration.certificate, out.allowed))
      out.failures.push_back("certificate for Q(" + bn + "): " + e);
  }
  return out;
}

}  // namespace stratakit::strat
