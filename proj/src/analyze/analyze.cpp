#include "analyze/analyze.hpp"

#include "modcat/homological.hpp"

namespace stratakit::analyze {

using la::Matrix;
using mod::ModCat;

std::string to_string(Side s) { return s == Side::JShriek ? "j_!" : "j_*"; }

std::string to_string(Route r) {
  switch (r) {
    case Route::Theorem: return "theorem";
    case Route::DirectDelta: return "direct-delta";
    case Route::DirectNabla: return "direct-nabla";
  }
  return "?";
}

ExactnessResult exactness_check(const Stratification& s, std::size_t element, Side side) {
  ExactnessResult out{element, side, false, ""};
  auto lay = s.stratum_layer(element);
  const auto& d = *lay->rec.data;
  const auto& r = lay->rec.r;
  const auto& corner = d.corner.algebra;
  // fB as a left corner module is a right module over the opposite corner; Bf is a right corner module
  const bool left = side == Side::JShriek;
  const alg::Algebra over = left ? alg::opposite(corner) : corner;
  Module bimod = left ? Module(over, d.ea_basis.cols(), d.ea_left) : Module(over, d.ae_basis.cols(), d.ae_right);
  ModCat oc(over);
  auto cover = oc.projective_cover(bimod);
  const std::string what = left ? "fB as a left module" : "Bf as a right module";
  if (cover.projective.module.dim() == bimod.dim()) {
    out.exact = true;
    out.certificate = what + " over the stratum algebra is its own projective cover (dim " +
                      std::to_string(bimod.dim()) + ")";
    return out;
  }
  const auto& uc = r.right.modcat();
  for (std::size_t c = 0; c < corner.vertex_count(); ++c) {
    const std::string v = s.vertex_name(lay->u_vertices[c]);
    if (left) {
      auto pc = uc.projective_cover(uc.simple(c));
      auto k = mod::kernel(pc.map);
      auto img = r.j_shriek(k.inclusion);
      if (img.matrix().rank() < img.source().dim()) {
        out.certificate = "0 -> K -> P(" + v + ") -> L(" + v + ") -> 0 in the stratum: j_!(K -> P) has rank " +
                          std::to_string(img.matrix().rank()) + " < dim j_!K = " + std::to_string(img.source().dim());
        return out;
      }
    } else {
      auto env = uc.injective_envelope(uc.simple(c));
      auto q = mod::cokernel(env.map);
      auto img = r.j_push(q.projection);
      if (img.matrix().rank() < img.target().dim()) {
        out.certificate = "0 -> L(" + v + ") -> I(" + v + ") -> C -> 0 in the stratum: j_*(I -> C) has rank " +
                          std::to_string(img.matrix().rank()) + " < dim j_*C = " + std::to_string(img.target().dim());
        return out;
      }
    }
  }
  throw AnalysisError(AnalysisError::Code::Internal,
                      what + " is not projective but no simple-cover sequence loses exactness");
}

ExtComparison ext_comparison(const Stratification& s, Mask from, Mask to, const Module& x, const Module& y, std::size_t n) {
  const auto& bcat = s.lower(from)->cat;
  const auto& acat = s.lower(to)->cat;
  const Module ix = s.transfer(x, from, to), iy = s.transfer(y, from, to);
  auto qres = bcat.resolution(x, n + 1);
  auto pres = acat.resolution(ix, n + 1);
  mod::ExtSpace src(bcat, qres, y, n), tgt(acat, pres, iy, n);

  // phi_k : P_k -> i_*Q_k over the identity of i_*X
  ModuleMap phi = mod::lift_through(acat, pres->terms[0], pres->augmentation, s.transfer(qres->augmentation, from, to));
  for (std::size_t k = 1; k <= n; ++k) {
    ModuleMap f = phi * pres->d(k);
    phi = mod::lift_through(acat, pres->terms[k], f, s.transfer(qres->d(k), from, to));
  }

  ExtComparison out{n, src.dim(), tgt.dim(), 0};
  Matrix cols(x.field(), tgt.dim(), 0);
  for (std::size_t i = 0; i < src.dim(); ++i) {
    Matrix e(x.field(), src.dim(), 1);
    e.set(i, 0, 1);
    ModuleMap c = s.transfer(src.cochain_map(src.representative(e)), from, to);
    cols = cols.hcat(tgt.class_of(tgt.cochain_of(c * phi)));
  }
  out.rank = cols.cols() ? cols.rank() : 0;
  if (n <= 1 && !out.iso())
    throw AnalysisError(AnalysisError::Code::Internal,
                        "Ext^" + std::to_string(n) + " comparison along a Serre inclusion is not an isomorphism");
  return out;
}

HomologicalResult is_k_homological(const Stratification& s, std::size_t k, std::optional<std::size_t> aux_n_max) {
  HomologicalResult out;
  out.k = k;
  out.justification = "checked on pairs of simples for every recollement (lower set, maximal element); "
                      "extends to all finite-length objects by devissage";
  for (const auto& [mask, el] : s.layer_keys()) {
    const Mask z = mask & ~(Mask{1} << el);
    if (z == 0) continue;
    auto zl = s.lower(z);
    const auto& zc = zl->cat;
    const std::size_t nz = zc.algebra().vertex_count();
    for (std::size_t a = 0; a < nz; ++a)
      for (std::size_t b = 0; b < nz; ++b)
        for (std::size_t n = 0; n <= k; ++n) {
          auto c = ext_comparison(s, z, mask, zc.simple(a), zc.simple(b), n);
          ++out.comparisons;
          if (!c.iso() && out.holds) {
            out.holds = false;
            out.witness = HomologicalWitness{mask, el, zl->vertices[a], zl->vertices[b], c};
          }
        }
    if (aux_n_max) {
      bool ok = true;
      const auto& ac = s.lower(mask)->cat;
      for (std::size_t a = 0; a < nz && ok; ++a)
        for (std::size_t b = 0; b < nz && ok; ++b)
          for (std::size_t n = 1; n <= *aux_n_max && ok; ++n)
            ok = mod::ext(ac, s.transfer(zc.projective(a), z, mask), s.transfer(zc.injective(b), z, mask), n)->dim() == 0;
      out.auxiliary = out.auxiliary.value_or(true) && ok;
    }
  }
  if (aux_n_max && !out.auxiliary) out.auxiliary = true;
  return out;
}

namespace {

SignMap negate(const SignMap& eps) {
  SignMap out = eps;
  for (auto& e : out) e = e == Sign::Plus ? Sign::Minus : Sign::Plus;
  return out;
}

EpsResult direct_delta(const Stratification& s, const SignMap& eps, const strat::SearchOptions& opt, Route route) {
  EpsResult out;
  out.route = route;
  strat::StandardFamily f(s);
  const auto& poset = s.poset();
  bool unknown = false, no = false;
  for (std::size_t b = 0; b < s.vertex_count(); ++b) {
    strat::Allowed allowed;
    for (std::size_t c = 0; c < s.vertex_count(); ++c)
      if (poset.le(s.rho(b), s.rho(c))) allowed.emplace_back("Delta_eps(" + s.vertex_name(c) + ")", f.delta_eps(c, eps));
    auto r = strat::filtration_search(s.modcat(), s.modcat().projective(b), allowed, strat::LayerMode::Exact, opt);
    if (!r.found()) {
      (r.exhaustive ? no : unknown) = true;
      out.witnesses.push_back("P(" + s.vertex_name(b) + ") has no Delta_eps-filtration" +
                              (r.exhaustive ? "" : " in a non-exhaustive search"));
    }
    out.filtrations.push_back(std::move(r));
  }
  out.verdict = no ? Decision::No : unknown ? Decision::Unknown : Decision::Yes;
  return out;
}

}  // namespace

EpsResult is_epsilon_stratified(const Stratification& s, const SignMap& eps, Route route, const strat::SearchOptions& opt) {
  if (eps.size() != s.poset().size())
    throw strat::StratError(strat::StratError::Code::InvalidLabeling, "sign function must cover every poset element");
  if (route == Route::DirectDelta) return direct_delta(s, eps, opt, route);
  if (route == Route::DirectNabla) {
    Stratification op(alg::opposite(s.algebra()), s.poset(), s.rho());
    return direct_delta(op, negate(eps), opt, route);
  }
  EpsResult out;
  out.route = route;
  bool exact = true;
  for (std::size_t l = 0; l < s.poset().size(); ++l) {
    if (!(s.used() >> l & 1)) continue;
    auto e = exactness_check(s, l, eps[l] == Sign::Plus ? Side::JPush : Side::JShriek);
    if (!e.exact) {
      exact = false;
      out.witnesses.push_back(to_string(e.side) + " at " + s.element_name(l) + " is not exact: " + e.certificate);
    }
    out.exactness.push_back(std::move(e));
  }
  out.homological = is_k_homological(s, 2);
  if (!out.homological->holds) {
    const auto& w = *out.homological->witness;
    out.witnesses.push_back("not 2-homological: Ext^" + std::to_string(w.comparison.degree) + "(S(" +
                            s.vertex_name(w.x) + "), S(" + s.vertex_name(w.y) + ")) has dim " +
                            std::to_string(w.comparison.source_dim) + " below and " +
                            std::to_string(w.comparison.target_dim) + " above, rank " +
                            std::to_string(w.comparison.rank));
  }
  out.verdict = exact && out.homological->holds ? Decision::Yes : Decision::No;
  return out;
}

bool EpsAgreement::agree() const {
  std::optional<Decision> seen;
  for (const auto& r : routes) {
    if (r.verdict == Decision::Unknown) continue;
    if (seen && *seen != r.verdict) return false;
    seen = r.verdict;
  }
  return true;
}

Decision EpsAgreement::verdict() const {
  if (!agree() || routes.empty()) return Decision::Unknown;
  for (const auto& r : routes)
    if (r.verdict == Decision::Unknown) return Decision::Unknown;
  return routes.front().verdict;
}

EpsAgreement epsilon_all_routes(const Stratification& s, const SignMap& eps, const strat::SearchOptions& opt,
                                bool throw_on_disagreement) {
  EpsAgreement out{eps, {}};
  for (auto r : {Route::Theorem, Route::DirectDelta, Route::DirectNabla})
    out.routes.push_back(is_epsilon_stratified(s, eps, r, opt));
  if (throw_on_disagreement && !out.agree()) {
    std::string why = "routes disagree for eps " + strat::describe(eps) + ":";
    for (const auto& r : out.routes) why += " " + to_string(r.route) + "=" + mod::to_string(r.verdict);
    throw AnalysisError(AnalysisError::Code::RouteDisagreement, why);
  }
  return out;
}

SplitResult lemma_split_check(const Stratification& s, std::size_t element, const Module& p) {
  const Mask all = s.poset().all();
  if (!s.poset().is_maximal(element, all))
    throw strat::StratError(strat::StratError::Code::InvalidPoset, "element is not maximal");
  auto lay = s.layer(all, element);
  const auto& r = lay->rec.r;
  const Module m = s.transfer(p, all, all);
  SplitResult out;
  auto eps = r.counit_j_shriek(m);
  auto eta = r.unit_i(m);
  if (!eps.is_injective()) {
    const std::size_t kernel = mod::kernel(eta).module.dim();
    out.obstruction = "dim j_!j^*P = " + std::to_string(eps.source().dim()) + " but ker(P -> i_*i^*P) has dim " +
                      std::to_string(kernel) + "; the counit is not injective";
    return out;
  }
  mod::ShortExact ses{eps, eta};
  out.exact = mod::is_short_exact(ses);
  if (out.exact)
    out.ses = ses;
  else
    out.obstruction = "j_!j^*P -> P -> i_*i^*P is not exact in the middle";
  return out;
}

std::vector<BsEntry> BsTable::violations() const {
  std::vector<BsEntry> out;
  for (const auto& e : entries) {
    const std::size_t want = e.n == 0 && e.b == e.c ? 1 : 0;
    if (e.dim != want) out.push_back(e);
  }
  return out;
}

BsTable bs_vanishing_check(const Stratification& s, const strat::StandardFamily& f, const SignMap& eps, std::size_t n_max) {
  BsTable out;
  out.n_max = n_max;
  const auto& cat = s.modcat();
  for (std::size_t b = 0; b < s.vertex_count(); ++b) {
    auto res = cat.resolution(f.delta_eps(b, eps), n_max + 1);
    for (std::size_t c = 0; c < s.vertex_count(); ++c)
      for (std::size_t n = 0; n <= n_max; ++n)
        out.entries.push_back({b, c, n, mod::ExtSpace(cat, res, f.nabla_eps(c, eps), n).dim()});
  }
  return out;
}

HwResult is_highest_weight(const Stratification& s, const strat::SearchOptions& opt, bool throw_on_disagreement) {
  HwResult out;
  const auto& poset = s.poset();
  const auto& cat = s.modcat();

  // route A
  {
    auto& a = out.structure;
    bool ok = true;
    for (std::size_t l = 0; l < poset.size(); ++l) {
      const std::size_t d = (s.used() >> l & 1) ? s.stratum_algebra(l).dim() : 0;
      if (d != 1) {
        ok = false;
        a.witnesses.push_back("stratum " + s.element_name(l) + " has dimension " + std::to_string(d));
      }
    }
    auto h = is_k_homological(s, 2);
    if (!h.holds) {
      ok = false;
      const auto& w = *h.witness;
      a.witnesses.push_back("not 2-homological at (S(" + s.vertex_name(w.x) + "), S(" + s.vertex_name(w.y) +
                            "), n=" + std::to_string(w.comparison.degree) + ")");
    }
    a.verdict = ok ? Decision::Yes : Decision::No;
  }

  // route B
  {
    auto& b = out.axioms;
    strat::StandardFamily f(s);
    std::vector<std::optional<std::size_t>> rep(poset.size());
    for (std::size_t v = s.vertex_count(); v-- > 0;) rep[s.rho(v)] = v;
    bool ok = true, unknown = false;
    auto fail = [&](std::string w) {
      ok = false;
      b.witnesses.push_back(std::move(w));
    };
    for (std::size_t l = 0; l < poset.size(); ++l)
      if (!rep[l]) fail("HW4: no simple is labelled " + s.element_name(l));
    for (std::size_t v = 0; v < s.vertex_count(); ++v)
      if (rep[s.rho(v)] != v)
        fail("HW4: L(" + s.vertex_name(v) + ") is not a quotient of the sum of the chosen projectives");
    for (std::size_t l = 0; l < poset.size(); ++l) {
      if (!rep[l]) continue;
      const Module& d = f.at(*rep[l]).delta;
      if (mod::hom_dim(d, d) != 1) fail("HW1: End(Delta_" + s.element_name(l) + ") has dimension " + std::to_string(mod::hom_dim(d, d)));
      for (std::size_t m = 0; m < poset.size(); ++m)
        if (rep[m] && poset.lt(m, l) && mod::hom_dim(d, f.at(*rep[m]).delta) != 0)
          fail("HW2: Hom(Delta_" + s.element_name(l) + ", Delta_" + s.element_name(m) + ") is nonzero");
    }
    for (std::size_t l = 0; l < poset.size(); ++l) {
      if (!rep[l]) continue;
      auto p = strat::porism_check(s, f, *rep[l], opt);
      if (p.ses.in.target().dim() == 0) {
        fail("HW3: " + (p.failures.empty() ? std::string("no standard quotient") : p.failures.front()));
        continue;
      }
      if (p.ses.in.source().dim() == 0) continue;
      strat::Allowed up;
      for (std::size_t m = 0; m < poset.size(); ++m)
        if (rep[m] && poset.lt(l, m)) up.emplace_back("Delta_" + s.element_name(m), f.at(*rep[m]).delta);
      auto r = strat::filtration_search(cat, p.ses.in.source(), up, strat::LayerMode::Exact, opt);
      if (!r.found()) {
        if (r.exhaustive)
          fail("HW3: kernel of P_" + s.element_name(l) + " -> Delta_" + s.element_name(l) + " has no filtration by higher Delta");
        else
          unknown = true;
      }
    }
    b.verdict = ok ? (unknown ? Decision::Unknown : Decision::Yes) : Decision::No;
  }

  if (throw_on_disagreement && out.structure.verdict != Decision::Unknown && out.axioms.verdict != Decision::Unknown &&
      !out.agree())
    throw AnalysisError(AnalysisError::Code::RouteDisagreement,
                        std::string("highest-weight routes disagree: structure=") + mod::to_string(out.structure.verdict) +
                            " axioms=" + mod::to_string(out.axioms.verdict));
  return out;
}

}  // namespace stratakit::analyze
