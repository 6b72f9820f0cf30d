#include "strat/stratification.hpp"

#include <algorithm>

namespace stratakit::strat {

std::string to_string(StratError::Code c) {
  switch (c) {
    case StratError::Code::InvalidPoset: return "INVALID-POSET";
    case StratError::Code::InvalidLabeling: return "INVALID-LABELING";
    case StratError::Code::Inconsistent: return "INCONSISTENT";
    case StratError::Code::SearchFailure: return "SEARCH-FAILURE";
    case StratError::Code::NonTermination: return "NON-TERMINATION";
    case StratError::Code::OracleUnavailable: return "ORACLE-UNAVAILABLE";
  }
  return "?";
}

Poset::Poset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& leq)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  if (n == 0) throw StratError(StratError::Code::InvalidPoset, "poset is empty");
  if (n > 32) throw StratError(StratError::Code::InvalidPoset, "posets are limited to 32 elements");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (elements_[i] == elements_[j]) throw StratError(StratError::Code::InvalidPoset, "duplicate element '" + elements_[i] + "'");
  le_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le_[i][i] = true;
  for (const auto& [a, b] : leq) le_[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le_[k][j]) le_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (le_[i][j] && le_[j][i])
        throw StratError(StratError::Code::InvalidPoset,
                         "order is not antisymmetric: " + elements_[i] + " and " + elements_[j]);
}

Poset Poset::chain(std::vector<std::string> elements) {
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) leq.emplace_back(elements[i], elements[i + 1]);
  return Poset(std::move(elements), leq);
}

std::size_t Poset::index(const std::string& e) const {
  auto it = std::find(elements_.begin(), elements_.end(), e);
  if (it == elements_.end()) throw StratError(StratError::Code::InvalidPoset, "unknown poset element '" + e + "'");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Poset::is_lower(Mask m) const {
  for (std::size_t a = 0; a < size(); ++a)
    if (m >> a & 1)
      for (std::size_t b = 0; b < size(); ++b)
        if (le_[b][a] && !(m >> b & 1)) return false;
  return true;
}

Mask Poset::down(std::size_t a) const {
  Mask m = 0;
  for (std::size_t b = 0; b < size(); ++b)
    if (le_[b][a]) m |= Mask{1} << b;
  return m;
}

Mask Poset::strict_down(std::size_t a) const { return down(a) & ~(Mask{1} << a); }

bool Poset::is_maximal(std::size_t a, Mask m) const {
  if (!(m >> a & 1)) return false;
  for (std::size_t b = 0; b < size(); ++b)
    if ((m >> b & 1) && lt(a, b)) return false;
  return true;
}

std::vector<Mask> Poset::lower_sets() const {
  std::vector<Mask> out{0};
  std::vector<Mask> frontier{0};
  std::map<Mask, bool> have{{0, true}};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask m : frontier)
      for (std::size_t a = 0; a < size(); ++a) {
        if (m >> a & 1) continue;
        Mask g = m | Mask{1} << a;
        if (!is_lower(g) || have.count(g)) continue;
        have[g] = true;
        next.push_back(g);
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::size_t> Poset::linear_extension() const {
  std::vector<std::size_t> out;
  Mask taken = 0;
  while (out.size() < size()) {
    for (std::size_t a = 0; a < size(); ++a) {
      if (taken >> a & 1) continue;
      if ((strict_down(a) & ~taken) == 0) {
        out.push_back(a);
        taken |= Mask{1} << a;
        break;
      }
    }
  }
  return out;
}

char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

std::vector<SignMap> all_sign_maps(std::size_t n) {
  std::vector<SignMap> out;
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    SignMap e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = (code >> i & 1) ? Sign::Minus : Sign::Plus;
    out.push_back(e);
  }
  return out;
}

std::string describe(const SignMap& eps) {
  std::string s;
  for (auto e : eps) s += to_char(e);
  return s;
}

Stratification::Stratification(const Algebra& a, Poset poset, std::vector<std::size_t> rho, std::optional<SignMap> eps)
    : st_(std::make_shared<State>(a)) {
  if (rho.size() != a.vertex_count())
    throw StratError(StratError::Code::InvalidLabeling, "labeling must assign an element to every vertex");
  for (auto r : rho)
    if (r >= poset.size()) throw StratError(StratError::Code::InvalidLabeling, "label out of range");
  if (eps && eps->size() != poset.size())
    throw StratError(StratError::Code::InvalidLabeling, "sign function must cover every poset element");
  st_->poset = std::move(poset);
  st_->rho = std::move(rho);
  st_->eps = std::move(eps);
}

Mask Stratification::used() const {
  Mask m = 0;
  for (auto r : rho()) m |= Mask{1} << r;
  return m;
}

std::shared_ptr<const LowerSetAlgebra> Stratification::lower(Mask m) const {
  if (!poset().is_lower(m)) throw StratError(StratError::Code::InvalidPoset, "not a lower set");
  {
    std::lock_guard lock(st_->mu);
    auto it = st_->lowers.find(m);
    if (it != st_->lowers.end()) return it->second;
  }
  alg::VertexSet killed;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (!(m >> rho(v) & 1)) killed.push_back(v);
  auto q = alg::quotient_by_idempotent_ideal(algebra(), killed);
  auto out = std::make_shared<LowerSetAlgebra>(LowerSetAlgebra{m, q, ModCat(q.algebra), q.vertex_map});
  std::lock_guard lock(st_->mu);
  return st_->lowers.emplace(m, out).first->second;
}

std::size_t Stratification::local_vertex(Mask m, std::size_t v) const {
  const auto& vs = lower(m)->vertices;
  auto it = std::find(vs.begin(), vs.end(), v);
  if (it == vs.end()) throw StratError(StratError::Code::InvalidLabeling, "vertex not in the lower set");
  return static_cast<std::size_t>(it - vs.begin());
}

std::shared_ptr<const Layer> Stratification::layer(Mask m, std::size_t element) const {
  if (!poset().is_maximal(element, m)) throw StratError(StratError::Code::InvalidPoset, "element is not maximal in the lower set");
  {
    std::lock_guard lock(st_->mu);
    auto it = st_->layers.find({m, element});
    if (it != st_->layers.end()) return it->second;
  }
  auto center = lower(m);
  alg::VertexSet u;
  for (std::size_t i = 0; i < center->vertices.size(); ++i)
    if (rho(center->vertices[i]) == element) u.push_back(i);
  auto rec = recol::make_idempotent_recollement(center->cat, u);
  std::vector<std::size_t> uv;
  for (auto i : rec.data->corner.vertex_map) uv.push_back(center->vertices[i]);
  auto out = std::make_shared<Layer>(Layer{m, element, center, std::move(rec), std::move(uv)});
  std::lock_guard lock(st_->mu);
  return st_->layers.emplace(std::make_pair(m, element), out).first->second;
}

std::size_t Stratification::stratum_vertex(std::size_t v) const {
  const auto& uv = stratum_layer(rho(v))->u_vertices;
  return static_cast<std::size_t>(std::find(uv.begin(), uv.end(), v) - uv.begin());
}

Module Stratification::transfer(const Module& m, Mask from, Mask to) const {
  if ((from & ~to) != 0) throw StratError(StratError::Code::InvalidPoset, "transfer needs nested lower sets");
  auto f = lower(from), t = lower(to);
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < t->quotient.algebra.dim(); ++k)
    act.push_back(m.act(f->quotient.projection * t->quotient.section.col(k)));
  return Module(t->quotient.algebra, m.dim(), std::move(act));
}

ModuleMap Stratification::transfer(const ModuleMap& f, Mask from, Mask to) const {
  return ModuleMap(transfer(f.source(), from, to), transfer(f.target(), from, to), f.matrix());
}

std::vector<std::pair<Mask, std::size_t>> Stratification::layer_keys() const {
  std::vector<std::pair<Mask, std::size_t>> out;
  for (Mask m : poset().lower_sets())
    for (std::size_t a = 0; a < poset().size(); ++a)
      if (poset().is_maximal(a, m)) out.emplace_back(m, a);
  return out;
}

AxiomReport check_stratification(const Stratification& s) {
  AxiomReport rep;
  auto fail = [&](std::string c, std::string w) { rep.failures.emplace_back(std::move(c), std::move(w)); };
  if (s.lower(0)->quotient.algebra.dim() != 0) fail("S1", "A of the empty lower set is nonzero");
  if (s.lower(s.poset().all())->quotient.algebra.dim() != s.algebra().dim()) fail("S1", "A of the whole poset is not A");

  for (const auto& [m, a] : s.layer_keys()) {
    auto lay = s.layer(m, a);
    ++rep.layers_checked;
    auto samples = recol::standard_samples(lay->rec);
    auto r = recol::verify_recollement(lay->rec.r, samples.center, samples.left, samples.right);
    for (const auto& v : r.violations)
      fail("S2", "lower set " + std::to_string(m) + ", element " + s.element_name(a) + ": " + v.axiom + " @ " + v.witness);

    // S3 against the principal lower set of a, on simples
    Mask down = s.poset().down(a);
    if (m == down) continue;
    auto base = s.stratum_layer(a);
    const auto& sa = base->rec.r.right.algebra();
    const auto& sb = lay->rec.r.right.algebra();
    if (sa.dim() != sb.dim() || lay->u_vertices != base->u_vertices) {
      fail("S3", "stratum algebra of " + s.element_name(a) + " depends on the lower set");
      continue;
    }
    for (auto v : base->u_vertices) {
      Module small = base->center->cat.simple(s.local_vertex(down, v));
      Module big = s.transfer(small, down, m);
      Module x = base->rec.r.j_pull(small), y = lay->rec.r.j_pull(big);
      if (x.dimension_vector() != y.dimension_vector() || mod::hom_dim(x, x) != mod::hom_dim(y, y))
        fail("S3", "j^* of L(" + s.vertex_name(v) + ") differs between lower sets");
    }
  }
  return rep;
}

}  // namespace stratakit::strat
