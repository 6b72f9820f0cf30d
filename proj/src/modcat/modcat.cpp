#include "modcat/modcat.hpp"

#include "modcat/homological.hpp"

#include <map>
#include <mutex>
#include <random>

namespace stratakit::mod {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "YES";
    case Decision::No: return "NO";
    case Decision::Unknown: return "UNKNOWN";
  }
  return "?";
}

struct ModCat::Side {
  Algebra alg;
  Matrix chars;  // vertex_count x dim
  std::vector<Matrix> proj_basis;
  std::vector<Module> proj, simple, inj;

  std::mutex cache_mutex;
  std::map<const void*, std::pair<Module, std::shared_ptr<const Resolution>>> cache;
};

struct ModCat::State {
  Side sides[2];
};

namespace {

Matrix vertex_characters(const Algebra& a) {
  const Field& f = a.field();
  Matrix frame(f, a.dim(), 0);
  for (std::size_t v = 0; v < a.vertex_count(); ++v) frame = frame.hcat(a.idempotent(v));
  if (a.radical().dim()) frame = frame.hcat(a.radical().basis_columns());
  auto inv = frame.inverse();
  if (frame.cols() != a.dim() || !inv) throw ModuleError("algebra is not split basic over its vertices");
  std::vector<std::size_t> rows;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) rows.push_back(v);
  return inv->select_rows(rows);
}

}  // namespace

ModCat::ModCat(const Algebra& a) : state_(std::make_shared<State>()) {
  Algebra op = alg::opposite(a);
  for (int k = 0; k < 2; ++k) {
    Side& s = state_->sides[k];
    s.alg = k == 0 ? a : op;
    const Field& f = s.alg.field();
    s.chars = vertex_characters(s.alg);
    Module reg = Module::regular(s.alg);
    for (std::size_t v = 0; v < s.alg.vertex_count(); ++v) {
      Matrix e = s.alg.idempotent(v);
      Matrix span = e.hcat(s.alg.left_action(e));
      Matrix basis = span.select_cols(la::independent_columns(span));
      s.proj_basis.push_back(basis);
      s.proj.push_back(submodule(reg, basis).module);
      std::vector<Matrix> act;
      for (std::size_t j = 0; j < s.alg.dim(); ++j) {
        Matrix one(f, 1, 1);
        one.set(0, 0, s.chars.at(v, j));
        act.push_back(one);
      }
      s.simple.emplace_back(s.alg, 1, std::move(act));
    }
  }
  for (int k = 0; k < 2; ++k) {
    Side& s = state_->sides[k];
    const Side& o = state_->sides[1 - k];
    for (const auto& p : o.proj) {
      std::vector<Matrix> act;
      for (const auto& r : p.actions()) act.push_back(r.transpose());
      s.inj.emplace_back(s.alg, p.dim(), std::move(act));
    }
  }
}

ModCat::Side& ModCat::side() const { return state_->sides[flipped_ ? 1 : 0]; }

const Algebra& ModCat::algebra() const { return side().alg; }
const Module& ModCat::projective(std::size_t v) const { return side().proj.at(v); }
const Matrix& ModCat::projective_basis(std::size_t v) const { return side().proj_basis.at(v); }
const Module& ModCat::simple(std::size_t v) const { return side().simple.at(v); }
const Module& ModCat::injective(std::size_t v) const { return side().inj.at(v); }

Scalar ModCat::vertex_character(std::size_t v, const Matrix& x) const { return (side().chars.row(v) * x).at(0, 0); }

ProjectiveSum ModCat::projective_sum(const std::vector<std::size_t>& vertices) const {
  std::vector<Module> parts;
  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (auto v : vertices) {
    parts.push_back(projective(v));
    offsets.push_back(off);
    off += parts.back().dim();
  }
  return {direct_sum(algebra(), parts).module, vertices, offsets};
}

ModuleMap ModCat::yoneda_map(const ProjectiveSum& p, const Module& m, const std::vector<Matrix>& images) const {
  if (images.size() != p.vertices.size()) throw ModuleError("one image per projective summand required");
  Matrix out(m.field(), m.dim(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Matrix& img = images[i];
    if (m.vertex_action(p.vertices[i]) * img != img) throw ModuleError("generator image not in M e_v");
    const Matrix& basis = projective_basis(p.vertices[i]);
    for (std::size_t c = 0; c < basis.cols(); ++c) out = out.hcat(m.act(basis.col(c)) * img);
  }
  return {p.module, m, out};
}

Module ModCat::dual(const Module& m) const {
  const Algebra& target = opposite().algebra();
  std::vector<Matrix> act;
  for (const auto& r : m.actions()) act.push_back(r.transpose());
  return Module(m.algebra().same_structure(algebra()) ? target : algebra(), m.dim(), std::move(act));
}

ModuleMap ModCat::dual(const ModuleMap& f) const {
  return {dual(f.target()), dual(f.source()), f.matrix().transpose()};
}

std::vector<std::size_t> ModCat::top_vertices(const Module& m) const {
  auto dv = structural_series(m).top.module.dimension_vector();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < dv.size(); ++v) out.insert(out.end(), dv[v], v);
  return out;
}

std::vector<std::size_t> ModCat::socle_vertices(const Module& m) const {
  auto dv = structural_series(m).socle.module.dimension_vector();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < dv.size(); ++v) out.insert(out.end(), dv[v], v);
  return out;
}

Cover ModCat::projective_cover(const Module& m) const {
  require_same_algebra(m, regular());
  auto q = radical_subspace(m).quotient();
  std::vector<std::size_t> vertices;
  std::vector<Matrix> images;
  for (std::size_t v = 0; v < algebra().vertex_count(); ++v) {
    Matrix lifted = m.vertex_action(v) * q.section;
    Matrix top_part = q.projection * lifted;
    for (auto c : la::independent_columns(top_part)) {
      vertices.push_back(v);
      images.push_back(lifted.col(c));
    }
  }
  ProjectiveSum p = projective_sum(vertices);
  ModuleMap map = yoneda_map(p, m, images);
  if (!map.is_surjective()) throw ModuleError("projective cover is not surjective");
  return {p, map};
}

Envelope ModCat::injective_envelope(const Module& m) const {
  ModCat op = opposite();
  Cover c = op.projective_cover(dual(m));
  ModuleMap d = op.dual(c.map);
  // D(D(m)) is m itself; keep the caller's object as the source
  ModuleMap map(m, d.target(), d.matrix());
  return {d.target(), c.projective.vertices, map};
}

bool ModCat::is_projective(const Module& m) const {
  return projective_cover(m).projective.module.dim() == m.dim();
}

bool ModCat::is_injective(const Module& m) const {
  return injective_envelope(m).injective.dim() == m.dim();
}

IsoResult ModCat::is_isomorphic(const Module& m, const Module& n) const {
  require_same_algebra(m, n);
  auto no = [](std::string why) { return IsoResult{Decision::No, std::nullopt, std::move(why)}; };
  if (m.dim() != n.dim()) return no("dimensions " + std::to_string(m.dim()) + " and " + std::to_string(n.dim()));
  if (m.dimension_vector() != n.dimension_vector()) return no("dimension vectors differ");
  if (m.dim() == 0) return {Decision::Yes, ModuleMap::zero(m, n), ""};
  if (top_vertices(m) != top_vertices(n)) return no("tops differ");
  if (socle_vertices(m) != socle_vertices(n)) return no("socles differ");
  auto hom = hom_basis(m, n);
  std::size_t em = hom_dim(m, m), en = hom_dim(n, n);
  if (hom.size() != em || hom.size() != en)
    return no("dim Hom(M,N) = " + std::to_string(hom.size()) + ", dim End(M) = " + std::to_string(em) +
              ", dim End(N) = " + std::to_string(en));
  if (hom.empty()) return no("no nonzero homomorphisms");

  auto found = [&](const Matrix& x) -> std::optional<IsoResult> {
    if (x.is_invertible()) return IsoResult{Decision::Yes, ModuleMap(m, n, x), ""};
    return std::nullopt;
  };
  const Field& f = m.field();
  const std::size_t h = hom.size();
  for (std::size_t i = 0; i < h; ++i)
    if (auto r = found(hom[i].matrix())) return *r;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j)
      if (auto r = found(hom[i].matrix() + hom[j].matrix())) return *r;

  if (f.is_prime()) {
    double space = 1;
    for (std::size_t i = 0; i < h && space <= 4096; ++i) space *= static_cast<double>(f.characteristic());
    if (space <= 4096) {
      std::vector<long> digits(h, 0);
      const long p = f.characteristic();
      while (true) {
        std::size_t k = 0;
        while (k < h && ++digits[k] == p) digits[k++] = 0;
        if (k == h) break;
        Matrix x(f, n.dim(), m.dim());
        for (std::size_t i = 0; i < h; ++i)
          if (digits[i]) x.add_scaled(hom[i].matrix(), Scalar(f, digits[i]));
        if (auto r = found(x)) return *r;
      }
      return no("no invertible map among all " + std::to_string(static_cast<long>(space)) + " homomorphisms");
    }
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<long> coeff(-50, 50);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix x(f, n.dim(), m.dim());
    for (std::size_t i = 0; i < h; ++i) x.add_scaled(hom[i].matrix(), Scalar(f, coeff(rng)));
    if (auto r = found(x)) return *r;
  }
  return {Decision::Unknown, std::nullopt, "no invertible combination found"};
}

std::shared_ptr<const Resolution> ModCat::resolution(const Module& m, std::size_t length) const {
  Side& s = side();
  const void* key = &m.actions();
  {
    std::lock_guard<std::mutex> lock(s.cache_mutex);
    auto it = s.cache.find(key);
    if (it != s.cache.end() && it->second.second->length() >= length) return it->second.second;
  }
  auto res = std::make_shared<const Resolution>(minimal_resolution(*this, m, length));
  std::lock_guard<std::mutex> lock(s.cache_mutex);
  if (s.cache.size() >= 512) s.cache.clear();
  s.cache.insert_or_assign(key, std::make_pair(m, res));
  return res;
}

}  // namespace stratakit::mod
