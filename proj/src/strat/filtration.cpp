#include "strat/filtration.hpp"

#include <functional>
#include <random>
#include <set>

namespace stratakit::strat {

using la::Subspace;

std::string to_string(LayerMode m) { return m == LayerMode::Exact ? "exact-layers" : "quotient-layers"; }

namespace {

Subspace span(const la::Field& f, std::size_t n, const Matrix& cols) {
  return cols.cols() ? Subspace::from_columns(cols) : Subspace::zero(f, n);
}

/// M_hi / M_lo for nested bases (columns in m).
mod::QuotientModule layer_of(const Module& m, const Matrix& hi, const Matrix& lo) {
  auto sub = mod::submodule(m, hi);
  return mod::quotient(sub.module, span(m.field(), hi.cols(), mod::coordinates_in(hi, lo)));
}

bool below(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

class Search {
 public:
  Search(const ModCat& cat, const Module& m, const Allowed& allowed, const SearchOptions& opt)
      : cat_(cat), m_(m), allowed_(allowed), opt_(opt), rng_(opt.seed) {
    for (const auto& [name, f] : allowed_) dvs_.push_back(f.dimension_vector());
  }

  FiltrationResult run(LayerMode mode) {
    FiltrationResult res;
    const auto& f = m_.field();
    Subspace start = mode == LayerMode::Exact ? Subspace::whole(f, m_.dim()) : Subspace::zero(f, m_.dim());
    auto steps = mode == LayerMode::Exact ? exact(start) : quotient(start);
    res.nodes = nodes_;
    res.exhaustive = exhaustive_;
    if (steps) {
      FiltrationCertificate c{m_, mode, {Matrix(f, m_.dim(), 0)}, {}};
      for (auto& [basis, layer] : *steps) {
        c.chain.push_back(basis);
        c.layers.push_back(layer);
      }
      res.certificate = std::move(c);
    }
    return res;
  }

 private:
  using Steps = std::vector<std::pair<Matrix, FiltrationLayer>>;

  bool feasible(const std::vector<std::size_t>& dv) {
    bool zero = true;
    for (auto d : dv) zero = zero && d == 0;
    if (zero) return true;
    auto it = feasible_.find(dv);
    if (it != feasible_.end()) return it->second;
    bool ok = false;
    for (const auto& a : dvs_) {
      bool nonzero = false;
      for (auto d : a) nonzero = nonzero || d != 0;
      if (!nonzero || !below(a, dv)) continue;
      auto rest = dv;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= a[i];
      if (feasible(rest)) {
        ok = true;
        break;
      }
    }
    return feasible_[dv] = ok;
  }

  /// Calls visit on candidate coefficient vectors until it returns true.
  bool each_combination(std::size_t k, const std::function<bool(const std::vector<la::Scalar>&)>& visit) {
    const auto& f = m_.field();
    if (k == 0) return false;
    if (opt_.oracle) {
      if (f.is_rational()) throw StratError(StratError::Code::OracleUnavailable, "oracle search needs a finite field");
      const auto p = static_cast<std::size_t>(f.characteristic());
      double total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= static_cast<double>(p);
      if (total <= static_cast<double>(opt_.max_enumeration)) {
        // projective representatives: first nonzero coefficient is 1
        for (std::size_t lead = 0; lead < k; ++lead) {
          std::vector<long> digits(k - lead - 1, 0);
          while (true) {
            std::vector<la::Scalar> c(k, la::Scalar::zero(f));
            c[lead] = la::Scalar::one(f);
            for (std::size_t i = 0; i < digits.size(); ++i) c[lead + 1 + i] = la::Scalar(f, digits[i]);
            if (visit(c)) return true;
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == static_cast<long>(p)) digits[i++] = 0;
            if (i == digits.size()) break;
          }
        }
        return false;
      }
    }
    exhaustive_ = false;
    std::vector<std::vector<la::Scalar>> tries;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<la::Scalar> c(k, la::Scalar::zero(f));
      c[i] = la::Scalar::one(f);
      tries.push_back(c);
      for (std::size_t j = i + 1; j < k; ++j) {
        auto d = c;
        d[j] = la::Scalar::one(f);
        tries.push_back(d);
      }
    }
    std::uniform_int_distribution<long> dist(-2, 2);
    for (int t = 0; t < 16; ++t) {
      std::vector<la::Scalar> c;
      for (std::size_t i = 0; i < k; ++i) c.push_back(la::Scalar(f, dist(rng_)));
      tries.push_back(c);
    }
    for (const auto& c : tries)
      if (visit(c)) return true;
    return false;
  }

  static Matrix combine(const std::vector<ModuleMap>& basis, const std::vector<la::Scalar>& c) {
    Matrix x(basis[0].matrix().field(), basis[0].matrix().rows(), basis[0].matrix().cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!c[i].is_zero()) x.add_scaled(basis[i].matrix(), c[i]);
    return x;
  }

  bool budget() {
    if (++nodes_ > opt_.node_limit) {
      exhaustive_ = false;
      return false;
    }
    return true;
  }

  // top-down: peel N ->> F, recurse on the kernel
  std::optional<Steps> exact(const Subspace& n) {
    if (n.is_zero()) return Steps{};
    const std::string key = n.basis().to_string();
    if (failed_.count(key) || !budget()) return std::nullopt;
    Matrix nb = n.basis_columns();
    Module nm = mod::submodule(m_, nb).module;
    if (!feasible(nm.dimension_vector())) {
      failed_.insert(key);
      return std::nullopt;
    }
    std::set<std::string> tried;
    std::optional<Steps> found;
    for (std::size_t a = 0; a < allowed_.size() && !found; ++a) {
      const Module& f = allowed_[a].second;
      if (f.dim() == 0 || !below(dvs_[a], nm.dimension_vector())) continue;
      auto hb = mod::hom_basis(nm, f);
      if (hb.empty()) continue;
      Matrix top = mod::radical_subspace(f).quotient().projection;
      each_combination(hb.size(), [&](const std::vector<la::Scalar>& c) {
        Matrix h = combine(hb, c);
        if ((top * h).rank() != top.rows()) return false;
        Matrix kern = h.null_space();
        Subspace k = span(m_.field(), m_.dim(), nb * kern);
        if (!tried.insert(k.basis().to_string()).second) return false;
        auto rest = exact(k);
        if (!rest) return false;
        auto lay = layer_of(m_, nb, k.basis_columns());
        rest->emplace_back(nb, FiltrationLayer{a, allowed_[a].first, h * lay.section});
        found = std::move(rest);
        return true;
      });
    }
    if (!found) failed_.insert(key);
    return found;
  }

  // bottom-up: grow S by the image of some F -> m/S
  std::optional<Steps> quotient(const Subspace& s) {
    if (s.is_whole()) return Steps{};
    const std::string key = s.basis().to_string();
    if (failed_.count(key) || !budget()) return std::nullopt;
    auto q = mod::quotient(m_, s);
    std::set<std::string> tried;
    std::optional<Steps> found;
    for (std::size_t a = 0; a < allowed_.size() && !found; ++a) {
      const Module& f = allowed_[a].second;
      if (f.dim() == 0) continue;
      auto hb = mod::hom_basis(f, q.module);
      if (hb.empty()) continue;
      each_combination(hb.size(), [&](const std::vector<la::Scalar>& c) {
        Matrix g = combine(hb, c);
        if (g.is_zero()) return false;
        Matrix lifted = q.section * g;
        Subspace next = s.sum(span(m_.field(), m_.dim(), lifted));
        if (!tried.insert(next.basis().to_string()).second) return false;
        auto rest = quotient(next);
        if (!rest) return false;
        Matrix nb = next.basis_columns();
        auto lay = layer_of(m_, nb, s.basis_columns());
        Steps out;
        out.emplace_back(nb, FiltrationLayer{a, allowed_[a].first, lay.projection.matrix() * mod::coordinates_in(nb, lifted)});
        for (auto& st : *rest) out.push_back(std::move(st));
        found = std::move(out);
        return true;
      });
    }
    if (!found) failed_.insert(key);
    return found;
  }

  const ModCat& cat_;
  Module m_;
  const Allowed& allowed_;
  SearchOptions opt_;
  std::mt19937_64 rng_;
  std::vector<std::vector<std::size_t>> dvs_;
  std::map<std::vector<std::size_t>, bool> feasible_;
  std::set<std::string> failed_;
  std::size_t nodes_ = 0;
  bool exhaustive_ = true;
};

}  // namespace

FiltrationResult filtration_search(const ModCat& cat, const Module& m, const Allowed& allowed, LayerMode mode,
                                   const SearchOptions& opt) {
  if (opt.oracle && m.field().is_rational())
    throw StratError(StratError::Code::OracleUnavailable, "oracle search needs a finite field");
  for (const auto& [name, f] : allowed)
    if (f.dim() > 0 && cat.top_vertices(f).size() != 1)
      throw StratError(StratError::Code::SearchFailure, "allowed object " + name + " does not have simple top");
  Search s(cat, m, allowed, opt);
  return s.run(mode);
}

Module filtration_layer(const FiltrationCertificate& c, std::size_t i) {
  return layer_of(c.module, c.chain.at(i + 1), c.chain.at(i)).module;
}

std::vector<std::string> verify_certificate(const FiltrationCertificate& c, const Allowed& allowed) {
  std::vector<std::string> out;
  const Module& m = c.module;
  if (c.chain.empty() || c.chain.front().cols() != 0) out.push_back("chain does not start at 0");
  if (c.chain.empty() || c.chain.back().cols() != m.dim()) out.push_back("chain does not end at the module");
  if (c.layers.size() + 1 != c.chain.size()) out.push_back("layer count does not match the chain");
  if (!out.empty()) return out;
  for (std::size_t i = 0; i + 1 < c.chain.size(); ++i) {
    const std::string at = "layer " + std::to_string(i);
    const Matrix& hi = c.chain[i + 1];
    Subspace shi = span(m.field(), m.dim(), hi);
    if (mod::generated_subspace(m, hi) != shi) out.push_back(at + ": not a submodule");
    if (!shi.contains(span(m.field(), m.dim(), c.chain[i])) || c.chain[i].cols() >= hi.cols())
      out.push_back(at + ": chain is not strictly increasing");
    const auto& l = c.layers[i];
    if (l.allowed >= allowed.size()) {
      out.push_back(at + ": unknown allowed object");
      continue;
    }
    const Module& f = allowed[l.allowed].second;
    Module lay = filtration_layer(c, i);
    if (c.mode == LayerMode::Exact) {
      if (!mod::is_homomorphism(lay, f, l.map) || lay.dim() != f.dim() || !l.map.is_invertible())
        out.push_back(at + ": map to " + l.name + " is not an isomorphism");
    } else {
      if (!mod::is_homomorphism(f, lay, l.map) || l.map.rank() != lay.dim())
        out.push_back(at + ": map from " + l.name + " is not onto the layer");
    }
  }
  return out;
}

}  // namespace stratakit::strat
