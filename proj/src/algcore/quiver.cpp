#include "algcore/quiver.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace stratakit::alg {

namespace {

struct Path {
  std::size_t source;
  std::size_t target;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  auto key() const { return std::make_pair(source, arrows); }
};

struct Indexed {
  std::vector<std::size_t> src, dst;
  std::map<std::string, std::size_t> vertex, arrow;
};

Indexed index_quiver(const Quiver& q) {
  Indexed ix;
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    if (!ix.vertex.emplace(q.vertices[v], v).second)
      throw AlgebraError(AlgebraError::Code::InvalidQuiver, "duplicate vertex '" + q.vertices[v] + "'");
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    if (!ix.arrow.emplace(ar.name, a).second)
      throw AlgebraError(AlgebraError::Code::InvalidQuiver, "duplicate arrow '" + ar.name + "'");
    auto s = ix.vertex.find(ar.from), t = ix.vertex.find(ar.to);
    if (s == ix.vertex.end() || t == ix.vertex.end())
      throw AlgebraError(AlgebraError::Code::InvalidQuiver, "arrow '" + ar.name + "' has an unknown endpoint");
    ix.src.push_back(s->second);
    ix.dst.push_back(t->second);
  }
  return ix;
}

struct CompiledTerm {
  Scalar coeff;
  Path path;
};

struct CompiledRelation {
  std::size_t source, target, min_length;
  std::vector<CompiledTerm> terms;
};

std::vector<CompiledRelation> compile_relations(const Presentation& p, const Indexed& ix) {
  std::vector<CompiledRelation> out;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const std::string where = "relation " + std::to_string(r);
    // combine like terms first so cancelling pairs do not count
    std::map<std::vector<std::size_t>, Scalar> combined;
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& t : p.relations[r].terms) {
      if (!(t.coeff.field() == p.field))
        throw AlgebraError(AlgebraError::Code::InvalidData, where + ": coefficient over the wrong field");
      if (t.path.empty())
        throw AlgebraError(AlgebraError::Code::NonAdmissible, where + " contains a trivial path");
      std::vector<std::size_t> arrows;
      for (const auto& name : t.path) {
        auto it = ix.arrow.find(name);
        if (it == ix.arrow.end())
          throw AlgebraError(AlgebraError::Code::InvalidQuiver, where + ": unknown arrow '" + name + "'");
        if (!arrows.empty() && ix.dst[arrows.back()] != ix.src[it->second])
          throw AlgebraError(AlgebraError::Code::InvalidQuiver, where + ": path is not composable");
        arrows.push_back(it->second);
      }
      std::pair<std::size_t, std::size_t> e{ix.src[arrows.front()], ix.dst[arrows.back()]};
      if (ends && *ends != e)
        throw AlgebraError(AlgebraError::Code::InvalidQuiver, where + " is not homogeneous in source and target");
      ends = e;
      auto [it, fresh] = combined.emplace(arrows, t.coeff);
      if (!fresh) it->second = it->second + t.coeff;
    }
    CompiledRelation cr{ends ? ends->first : 0, ends ? ends->second : 0, 0, {}};
    for (auto& [arrows, c] : combined) {
      if (c.is_zero()) continue;
      if (arrows.size() < 2)
        throw AlgebraError(AlgebraError::Code::NonAdmissible, where + " has a term of length " + std::to_string(arrows.size()));
      if (cr.terms.empty() || arrows.size() < cr.min_length) cr.min_length = arrows.size();
      cr.terms.push_back({c, Path{cr.source, cr.target, arrows}});
    }
    if (!cr.terms.empty()) out.push_back(std::move(cr));
  }
  return out;
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.source != b.source) return a.source < b.source;
  return a.arrows < b.arrows;
}

/// All paths of length < m, shortest first.
std::vector<Path> paths_below(const Presentation& p, const Indexed& ix, std::size_t m, std::size_t cap) {
  std::vector<Path> all;
  for (std::size_t v = 0; v < p.quiver.vertices.size(); ++v) all.push_back({v, v, {}});
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len < m; ++len) {
    std::size_t layer_end = all.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (std::size_t a = 0; a < ix.src.size(); ++a) {
        if (ix.src[a] != all[i].target) continue;
        Path next = all[i];
        next.arrows.push_back(a);
        next.target = ix.dst[a];
        all.push_back(std::move(next));
        if (all.size() > cap)
          throw AlgebraError(AlgebraError::Code::PossiblyInfinite,
                             "more than " + std::to_string(cap) + " paths of length < " + std::to_string(m));
      }
    layer_begin = layer_end;
  }
  std::stable_sort(all.begin(), all.end(), path_less);
  return all;
}

Path concat(const Path& a, const Path& b) {
  Path r{a.source, b.target, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

struct Truncation {
  std::vector<Path> paths;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  Subspace ideal = Subspace::zero(Field::gf(2), 0);
  std::size_t m = 0;

  std::size_t dim() const { return paths.size() - ideal.dim(); }
};

/// kQ/(I + J^m) as the path space below length m modulo the spans of p r q.
Truncation truncate(const Presentation& p, const Indexed& ix, const std::vector<CompiledRelation>& rels,
                    std::size_t m, std::size_t cap) {
  Truncation t;
  t.m = m;
  t.paths = paths_below(p, ix, m, cap);
  for (std::size_t i = 0; i < t.paths.size(); ++i) t.index.emplace(t.paths[i].key(), i);
  const std::size_t n = t.paths.size();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : rels) {
    for (const auto& left : t.paths) {
      if (left.target != r.source || left.length() + r.min_length >= m) continue;
      for (const auto& right : t.paths) {
        if (right.source != r.target || left.length() + r.min_length + right.length() >= m) continue;
        std::vector<Scalar> row(n, Scalar::zero(p.field));
        for (const auto& term : r.terms) {
          Path full = concat(concat(left, term.path), right);
          if (full.length() >= m) continue;
          std::size_t k = t.index.at(full.key());
          row[k] = row[k] + term.coeff;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::vector<Scalar> flat;
  for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  t.ideal = rows.empty() ? Subspace::zero(p.field, n)
                         : Subspace::from_rows(Matrix::from_scalars(p.field, rows.size(), n, flat));
  return t;
}

std::string path_label(const Presentation& p, const Path& path) {
  if (path.arrows.empty()) return "e" + p.quiver.vertices[path.source];
  std::string s;
  for (std::size_t i = 0; i < path.arrows.size(); ++i) {
    if (i) s += "*";
    s += p.quiver.arrows[path.arrows[i]].name;
  }
  return s;
}

Algebra assemble(const Presentation& p, const Indexed& ix, const Truncation& t) {
  const Field& f = p.field;
  // keep the longest paths as pivots so the surviving basis is short paths
  const std::size_t n = t.paths.size();
  std::vector<std::size_t> rev(n);
  for (std::size_t i = 0; i < n; ++i) rev[i] = n - 1 - i;
  Subspace ideal_rev = t.ideal.dim() ? Subspace::from_rows(t.ideal.basis().select_cols(rev))
                                     : Subspace::zero(f, n);
  auto q = ideal_rev.quotient();
  // q.section columns are unit vectors on surviving (reversed) coordinates
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < q.section.cols(); ++c)
    for (std::size_t i = 0; i < n; ++i)
      if (!q.section.entry_is_zero(i, c)) kept.push_back(rev[i]);
  std::vector<std::size_t> order(kept.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return kept[a] < kept[b]; });
  // projection in path coordinates, rows ordered by path order
  Matrix proj = q.projection.select_rows(order).select_cols(rev);
  std::vector<std::size_t> basis_paths;
  for (auto o : order) basis_paths.push_back(kept[o]);
  const std::size_t k = basis_paths.size();

  auto class_of = [&](const Path& path) {
    if (path.length() >= t.m) return Matrix(f, k, 1);
    return proj.col(t.index.at(path.key()));
  };

  Algebra::Data d;
  d.field = f;
  for (auto bp : basis_paths) d.labels.push_back(path_label(p, t.paths[bp]));
  d.vertex_names = p.quiver.vertices;
  for (std::size_t v = 0; v < p.quiver.vertices.size(); ++v) {
    auto it = std::find(basis_paths.begin(), basis_paths.end(), t.index.at(Path{v, v, {}}.key()));
    d.idempotents.push_back(static_cast<std::size_t>(it - basis_paths.begin()));
  }
  for (std::size_t j = 0; j < k; ++j) {
    const Path& pj = t.paths[basis_paths[j]];
    Matrix rm(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const Path& pi = t.paths[basis_paths[i]];
      if (pi.target != pj.source) continue;
      Matrix c = class_of(concat(pi, pj));
      for (std::size_t r = 0; r < k; ++r)
        if (!c.entry_is_zero(r, 0)) rm.set(r, i, c.at(r, 0));
    }
    d.right_mult.push_back(std::move(rm));
  }
  d.unit = Matrix(f, k, 1);
  for (auto i : d.idempotents) d.unit.set(i, 0, 1);
  Matrix rad(f, k, 0);
  for (std::size_t i = 0; i < k; ++i)
    if (t.paths[basis_paths[i]].length() > 0) rad = rad.hcat(Matrix::unit_column(f, k, i));
  d.radical = rad.cols() ? Subspace::from_columns(rad) : Subspace::zero(f, k);
  for (auto i : d.idempotents) d.generators.push_back(Matrix::unit_column(f, k, i));
  for (std::size_t a = 0; a < ix.src.size(); ++a) d.generators.push_back(class_of(Path{ix.src[a], ix.dst[a], {a}}));
  return Algebra(std::move(d));
}

}  // namespace

void check_quiver(const Quiver& q) { index_quiver(q); }

Algebra build_bound_quiver_algebra(const Presentation& p, const BuildOptions& opt) {
  Indexed ix = index_quiver(p.quiver);
  auto rels = compile_relations(p, ix);
  if (p.quiver.vertices.empty()) return Algebra::zero(p.field);
  Truncation prev = truncate(p, ix, rels, 1, opt.max_paths);
  for (std::size_t m = 2; m <= opt.max_length + 1; ++m) {
    Truncation cur = truncate(p, ix, rels, m, opt.max_paths);
    if (cur.dim() == prev.dim()) return assemble(p, ix, prev);
    prev = std::move(cur);
  }
  throw AlgebraError(AlgebraError::Code::PossiblyInfinite,
                     "path classes did not stabilise below length " + std::to_string(opt.max_length));
}

}  // namespace stratakit::alg
