#include "strat/standard.hpp"

namespace stratakit::strat {

StandardFamily::StandardFamily(const Stratification& s) : s_(s) {
  for (std::size_t b = 0; b < s.vertex_count(); ++b) {
    auto lay = s.stratum_layer(s.rho(b));
    const auto& r = lay->rec.r;
    const auto& uc = r.right.modcat();
    const std::size_t c = s.stratum_vertex(b);
    const Mask from = lay->lower;
    const Module& l = uc.simple(c);
    auto cover = uc.projective_cover(l);
    auto env = uc.injective_envelope(l);
    auto ie = recol::intermediate_extension(r, l);

    StandardObjects o;
    o.vertex = b;
    o.delta_to_bar = s.inflate(r.j_shriek(cover.map), from);
    o.bar_to_simple = s.inflate(ie.from_left, from);
    o.simple_to_bar = s.inflate(ie.to_right, from);
    o.bar_to_nabla = s.inflate(r.j_push(env.map), from);
    o.delta = o.delta_to_bar.source();
    o.delta_bar = o.delta_to_bar.target();
    o.simple = o.bar_to_simple.target();
    o.nabla_bar = o.bar_to_nabla.source();
    o.nabla = o.bar_to_nabla.target();
    objs_.push_back(std::move(o));
  }
}

const Module& StandardFamily::delta_eps(std::size_t v, const SignMap& eps) const {
  return eps.at(s_.rho(v)) == Sign::Plus ? objs_.at(v).delta : objs_.at(v).delta_bar;
}

const Module& StandardFamily::nabla_eps(std::size_t v, const SignMap& eps) const {
  return eps.at(s_.rho(v)) == Sign::Plus ? objs_.at(v).nabla_bar : objs_.at(v).nabla;
}

std::vector<std::string> check_standard_family(const Stratification& s, const StandardFamily& f, const SignMap& eps) {
  std::vector<std::string> out;
  const auto& cat = s.modcat();
  const std::size_t n = s.vertex_count();
  for (std::size_t b = 0; b < n; ++b) {
    const auto& o = f.at(b);
    const std::string name = s.vertex_name(b);
    if (!o.delta_to_bar.is_surjective() || !o.bar_to_simple.is_surjective()) out.push_back("Delta(" + name + ") -> L is not onto");
    if (!o.simple_to_bar.is_injective() || !o.bar_to_nabla.is_injective()) out.push_back("L -> nabla(" + name + ") is not mono");
    if (cat.top_vertices(f.delta_eps(b, eps)) != std::vector<std::size_t>{b})
      out.push_back("Delta_eps(" + name + ") does not have simple top L(" + name + ")");
    if (cat.socle_vertices(f.nabla_eps(b, eps)) != std::vector<std::size_t>{b})
      out.push_back("nabla_eps(" + name + ") does not have simple socle L(" + name + ")");
    for (std::size_t c = 0; c < n; ++c) {
      if (!s.poset().lt(s.rho(c), s.rho(b))) continue;
      if (mod::hom_dim(f.delta_eps(b, eps), f.delta_eps(c, eps)) != 0)
        out.push_back("Hom(Delta_eps(" + name + "), Delta_eps(" + s.vertex_name(c) + ")) != 0");
      if (mod::hom_dim(f.nabla_eps(c, eps), f.nabla_eps(b, eps)) != 0)
        out.push_back("Hom(nabla_eps(" + s.vertex_name(c) + "), nabla_eps(" + name + ")) != 0");
    }
  }
  return out;
}

SimpleClassification classify_simples(const Stratification& s) {
  SimpleClassification out;
  const auto& cat = s.modcat();
  const std::size_t n = s.vertex_count();
  for (std::size_t b = 0; b < n; ++b) {
    auto lay = s.stratum_layer(s.rho(b));
    const std::size_t c = s.stratum_vertex(b);
    SimpleEntry e{b, s.rho(b), c, {}, Decision::Unknown};
    try {
      e.simple = s.inflate(recol::intermediate_extension(lay->rec.r, lay->rec.r.right.modcat().simple(c)).object, lay->lower);
      e.matches = cat.is_isomorphic(e.simple, cat.simple(b)).decision;
      if (e.matches != Decision::Yes)
        out.failures.push_back("j_!* L(" + s.vertex_name(b) + ") is not certified isomorphic to the simple at " + s.vertex_name(b));
    } catch (const std::exception& ex) {
      out.failures.push_back("vertex " + s.vertex_name(b) + ": " + ex.what());
    }
    out.entries.push_back(std::move(e));
  }
  out.complete = out.entries.size() == n;
  for (const auto& e : out.entries) out.complete = out.complete && e.matches == Decision::Yes;
  out.irredundant = true;
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    for (std::size_t j = i + 1; j < out.entries.size(); ++j) {
      const auto& x = out.entries[i].simple;
      const auto& y = out.entries[j].simple;
      if (x.dim() == 0 || y.dim() == 0 || cat.is_isomorphic(x, y).decision != Decision::No) {
        out.irredundant = false;
        out.failures.push_back("L(" + s.vertex_name(i) + ") and L(" + s.vertex_name(j) + ") are not certified distinct");
      }
    }
  return out;
}

}  // namespace stratakit::strat
