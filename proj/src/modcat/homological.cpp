#include "modcat/homological.hpp"

namespace stratakit::mod {

namespace {

Subspace span(const Field& f, std::size_t n, const Matrix& cols) {
  return cols.cols() ? Subspace::from_columns(cols) : Subspace::zero(f, n);
}

Matrix basis_of(const Subspace& s) {
  return s.dim() ? s.basis_columns() : Matrix(s.field(), s.ambient(), 0);
}

}  // namespace

Resolution minimal_resolution(const ModCat& cat, const Module& m, std::size_t length) {
  Resolution r;
  r.module = m;
  Cover c = cat.projective_cover(m);
  r.terms.push_back(c.projective);
  r.augmentation = c.map;
  Submodule k = kernel(c.map);
  for (std::size_t i = 1; i <= length; ++i) {
    Cover next = cat.projective_cover(k.module);
    r.terms.push_back(next.projective);
    r.differentials.push_back(k.inclusion * next.map);
    k = kernel(next.map);
  }
  return r;
}

ExtSpace::ExtSpace(const ModCat& cat, const Module& m, const Module& n, std::size_t degree)
    : ExtSpace(cat, cat.resolution(m, degree + 1), n, degree) {}

ExtSpace::ExtSpace(const ModCat& cat, std::shared_ptr<const Resolution> res, const Module& n, std::size_t degree)
    : cat_(cat), m_(res->module), n_(n), k_(degree), res_(std::move(res)) {
  require_same_algebra(m_, n_);
  if (res_->length() < degree + 1) throw ModuleError("resolution too short for Ext");
  const Field& f = n_.field();
  for (std::size_t v = 0; v < n_.algebra().vertex_count(); ++v)
    vertex_basis_.push_back(basis_of(span(f, n_.dim(), n_.dim() ? n_.vertex_action(v) : Matrix(f, 0, 0))));
  cochain_dim_ = term_dim(k_);
  next_coboundary_ = coboundary_matrix(k_ + 1);
  Matrix cocycles = next_coboundary_.rows() ? next_coboundary_.null_space() : Matrix::identity(f, cochain_dim_);
  coboundaries_ = k_ == 0 ? Subspace::zero(f, cochain_dim_) : span(f, cochain_dim_, coboundary_matrix(k_));
  classes_ = span(f, cochain_dim_, cocycles.cols() ? coboundaries_.reduce(cocycles) : cocycles);
}

std::size_t ExtSpace::term_dim(std::size_t term) const {
  std::size_t d = 0;
  for (auto v : res_->terms[term].vertices) d += vertex_basis_[v].cols();
  return d;
}

Matrix ExtSpace::cochain_in_term(std::size_t term, const ModuleMap& f) const {
  const ProjectiveSum& p = res_->terms[term];
  Matrix out(n_.field(), 0, 1);
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    out = out.vcat(coordinates_in(vertex_basis_[p.vertices[i]], f.matrix().col(p.offsets[i])));
  return out;
}

ModuleMap ExtSpace::map_in_term(std::size_t term, const Matrix& cochain) const {
  const ProjectiveSum& p = res_->terms[term];
  std::vector<Matrix> images;
  std::size_t pos = 0;
  for (auto v : p.vertices) {
    const Matrix& b = vertex_basis_[v];
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < b.cols(); ++r) rows.push_back(pos + r);
    images.push_back(b * cochain.select_rows(rows));
    pos += b.cols();
  }
  return cat_.yoneda_map(p, n_, images);
}

Matrix ExtSpace::coboundary_matrix(std::size_t term) const {
  const Field& f = n_.field();
  const std::size_t src = term_dim(term - 1), dst = term_dim(term);
  Matrix out(f, dst, 0);
  for (std::size_t c = 0; c < src; ++c) {
    ModuleMap g = map_in_term(term - 1, Matrix::unit_column(f, src, c));
    out = out.hcat(cochain_in_term(term, g * res_->d(term)));
  }
  return out;
}

ModuleMap ExtSpace::cochain_map(const Matrix& cochain) const { return map_in_term(k_, cochain); }
Matrix ExtSpace::cochain_of(const ModuleMap& f) const { return cochain_in_term(k_, f); }

bool ExtSpace::is_cocycle(const Matrix& cochain) const {
  return next_coboundary_.rows() == 0 || (next_coboundary_ * cochain).is_zero();
}

Matrix ExtSpace::class_of(const Matrix& cocycle) const {
  if (!is_cocycle(cocycle)) throw ModuleError("cochain is not a cocycle");
  return classes_.coordinates(coboundaries_.reduce(cocycle));
}

Matrix ExtSpace::representative(const Matrix& coords) const {
  if (classes_.dim() == 0) return Matrix(n_.field(), cochain_dim_, 1);
  return classes_.basis_columns() * coords;
}

std::shared_ptr<const ExtSpace> ext(const ModCat& cat, const Module& m, const Module& n, std::size_t degree) {
  return std::make_shared<const ExtSpace>(cat, m, n, degree);
}

std::vector<ExtClass> ext_basis(const std::shared_ptr<const ExtSpace>& space) {
  std::vector<ExtClass> out;
  for (std::size_t i = 0; i < space->dim(); ++i)
    out.push_back({space, Matrix::unit_column(space->target().field(), space->dim(), i)});
  return out;
}

bool is_short_exact(const ShortExact& s) {
  const Module& e = s.middle();
  if (!(s.out.source().dim() == e.dim())) return false;
  if (!is_homomorphism(s.in.source(), e, s.in.matrix()) || !is_homomorphism(e, s.out.target(), s.out.matrix()))
    return false;
  return s.in.is_injective() && s.out.is_surjective() && (s.out * s.in).is_zero() &&
         e.dim() == s.in.source().dim() + s.out.target().dim();
}

ShortExact pushout_extension(const Resolution& res, const ModuleMap& cocycle) {
  if (res.length() < 1) throw ModuleError("pushout needs P_1");
  const Module& x = cocycle.target();
  const Module& p0 = res.terms[0].module;
  const ModuleMap& d1 = res.d(1);
  const Algebra& a = x.algebra();
  DirectSum w = direct_sum(a, {x, p0});
  Matrix rel = cocycle.matrix().vcat(-d1.matrix());
  QuotientModule e = quotient(w.module, span(a.field(), w.module.dim(), rel));
  ModuleMap in = e.projection * w.injections[0];
  ModuleMap out(e.module, res.module, res.augmentation.matrix() * w.projections[1].matrix() * e.section);
  return {in, out};
}

ShortExact realize_ext1(const ExtClass& c) {
  if (c.degree() != 1) throw ModuleError("realize_ext1 needs a degree-1 class");
  return pushout_extension(c.space->resolution(), c.cocycle_map());
}

ModuleMap lift_through(const ModCat& cat, const ProjectiveSum& p, const ModuleMap& f, const ModuleMap& g) {
  if (f.source().dim() != p.module.dim() || f.target().dim() != g.target().dim())
    throw ModuleError("lift_through: shapes do not match");
  const Module& m = g.source();
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    auto sol = g.matrix().solve(f.matrix().col(p.offsets[i]));
    if (!sol) throw ModuleError("lift_through: map does not factor");
    images.push_back(m.vertex_action(p.vertices[i]) * sol->particular);
  }
  return cat.yoneda_map(p, m, images);
}

ExtClass extension_class(const std::shared_ptr<const ExtSpace>& space, const ShortExact& s) {
  if (space->degree() != 1) throw ModuleError("extension classes live in degree 1");
  const Resolution& res = space->resolution();
  if (s.out.target().dim() != res.module.dim() || s.in.source().dim() != space->target().dim())
    throw ModuleError("extension does not match the Ext space");
  // lift of the augmentation through E -> M; on P_1 it lands in N
  ModuleMap lift = lift_through(space->category(), res.terms[0], res.augmentation, s.out);
  ModuleMap through = lift * res.d(1);
  ModuleMap f(res.terms[1].module, space->target(), coordinates_in(s.in.matrix(), through.matrix()));
  return {space, space->class_of(space->cochain_of(f))};
}

bool has_local_endomorphisms(const ModCat& cat, const Module& b) {
  if (b.dim() == 0) return false;
  return hom_dim(b, b) == 1 || cat.top_vertices(b).size() == 1 || cat.socle_vertices(b).size() == 1;
}

UniversalExtension universal_extension(const ModCat& cat, const Module& m, const std::vector<Module>& targets) {
  auto res = cat.resolution(m, 2);
  const Algebra& a = m.algebra();
  std::vector<std::shared_ptr<const ExtSpace>> spaces;
  std::vector<Module> summands;
  Matrix stacked(a.field(), 0, res->terms[1].module.dim());
  UniversalExtension out;
  for (const auto& b : targets) {
    if (!has_local_endomorphisms(cat, b)) throw ModuleError("target without certified local endomorphism ring");
    auto space = std::make_shared<const ExtSpace>(cat, res, b, 1);
    spaces.push_back(space);
    out.multiplicities.push_back(space->dim());
    for (const auto& c : ext_basis(space)) {
      summands.push_back(b);
      stacked = stacked.vcat(c.cocycle_map().matrix());
    }
  }
  DirectSum x = direct_sum(a, summands);
  ModuleMap cocycle(res->terms[1].module, x.module, stacked);
  out.ses = pushout_extension(*res, cocycle);
  // Hom((+) B_i^{d_i}, B_j) -> Ext^1(M, B_j) must be onto
  for (std::size_t j = 0; j < targets.size(); ++j) {
    Matrix classes(a.field(), spaces[j]->dim(), 0);
    for (const auto& h : hom_basis(x.module, targets[j]))
      classes = classes.hcat(spaces[j]->class_of(spaces[j]->cochain_of(h * cocycle)));
    if (classes.rank() != spaces[j]->dim()) throw ModuleError("universal extension: connecting map not onto");
  }
  return out;
}

}  // namespace stratakit::mod
