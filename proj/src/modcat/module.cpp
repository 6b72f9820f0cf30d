#include "modcat/module.hpp"

namespace stratakit::mod {

namespace {

Subspace span(const Field& f, std::size_t n, const Matrix& cols) {
  return cols.cols() ? Subspace::from_columns(cols) : Subspace::zero(f, n);
}

Matrix basis_of(const Subspace& s) {
  return s.dim() ? s.basis_columns() : Matrix(s.field(), s.ambient(), 0);
}

}  // namespace

Module::Module(Algebra a, std::size_t dim, std::vector<Matrix> action) : alg_(std::move(a)), dim_(dim) {
  if (action.size() != alg_.dim()) throw ModuleError("module needs one action matrix per basis element");
  for (const auto& m : action)
    if (m.rows() != dim || m.cols() != dim || !(m.field() == alg_.field()))
      throw ModuleError("action matrix has the wrong shape");
  action_ = std::make_shared<const std::vector<Matrix>>(std::move(action));
}

Module Module::zero(const Algebra& a) {
  return Module(a, 0, std::vector<Matrix>(a.dim(), Matrix(a.field(), 0, 0)));
}

Module Module::regular(const Algebra& a) {
  std::vector<Matrix> act;
  for (std::size_t j = 0; j < a.dim(); ++j) act.push_back(a.right_mult(j));
  return Module(a, a.dim(), std::move(act));
}

Matrix Module::act(const Matrix& element) const {
  Matrix r(field(), dim_, dim_);
  for (std::size_t j = 0; j < alg_.dim(); ++j)
    if (!element.entry_is_zero(j, 0)) r.add_scaled(action(j), element.at(j, 0));
  return r;
}

std::vector<std::size_t> Module::dimension_vector() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < alg_.vertex_count(); ++v) out.push_back(dim_ ? vertex_action(v).rank() : 0);
  return out;
}

bool Module::operator==(const Module& o) const {
  if (dim_ != o.dim_ || !alg_.same_structure(o.alg_)) return false;
  return action_ == o.action_ || *action_ == *o.action_;
}

ModuleMap::ModuleMap(Module source, Module target, Matrix matrix)
    : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(matrix)) {
  if (m_.rows() != tgt_.dim() || m_.cols() != src_.dim()) throw ModuleError("map matrix has the wrong shape");
}

ModuleMap ModuleMap::identity(const Module& m) { return {m, m, Matrix::identity(m.field(), m.dim())}; }

ModuleMap ModuleMap::zero(const Module& source, const Module& target) {
  return {source, target, Matrix(source.field(), target.dim(), source.dim())};
}

ModuleMap ModuleMap::operator*(const ModuleMap& f) const {
  if (f.tgt_.dim() != src_.dim()) throw ModuleError("composition of incompatible maps");
  return {f.src_, tgt_, m_ * f.m_};
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const { return {src_, tgt_, m_ + o.m_}; }
ModuleMap ModuleMap::operator-(const ModuleMap& o) const { return {src_, tgt_, m_ - o.m_}; }
ModuleMap ModuleMap::scaled(const Scalar& s) const { return {src_, tgt_, m_.scaled(s)}; }

bool ModuleMap::operator==(const ModuleMap& o) const {
  return m_ == o.m_ && src_ == o.src_ && tgt_ == o.tgt_;
}

ModuleReport check_module(const Module& m) {
  ModuleReport rep;
  const Algebra& a = m.algebra();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (m.action(j) * m.action(i) != m.act(a.right_mult(j).col(i)))
        rep.violations.push_back("action does not respect " + a.labels()[i] + " * " + a.labels()[j]);
  Matrix id = Matrix::identity(m.field(), m.dim());
  if (m.act(a.unit()) != id) rep.violations.push_back("unit does not act as the identity");
  Matrix total(m.field(), m.dim(), m.dim());
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    const Matrix& p = m.vertex_action(v);
    if (p * p != p) rep.violations.push_back("e_" + a.vertex_names()[v] + " does not act as a projection");
    total = total + p;
  }
  if (total != id) rep.violations.push_back("vertex projections do not sum to the identity");
  return rep;
}

bool is_homomorphism(const Module& source, const Module& target, const Matrix& m) {
  for (const auto& g : source.algebra().generators())
    if (m * source.act(g) != target.act(g) * m) return false;
  return true;
}

void require_same_algebra(const Module& a, const Module& b) {
  if (!a.algebra().same_structure(b.algebra())) throw ModuleError("modules over different algebras");
}

Matrix coordinates_in(const Matrix& basis, const Matrix& vectors) {
  const Field& f = basis.field();
  if (basis.cols() == 0) {
    if (!vectors.is_zero()) throw ModuleError("vector outside the zero subspace");
    return Matrix(f, 0, vectors.cols());
  }
  auto rows = la::independent_columns(basis.transpose());
  if (rows.size() != basis.cols()) throw ModuleError("basis columns are dependent");
  Matrix x = *basis.select_rows(rows).inverse() * vectors.select_rows(rows);
  if (basis * x != vectors) throw ModuleError("vector outside the subspace");
  return x;
}

Submodule submodule(const Module& m, const Matrix& basis) {
  std::vector<Matrix> act;
  for (const auto& r : m.actions()) act.push_back(coordinates_in(basis, r * basis));
  Module sub(m.algebra(), basis.cols(), std::move(act));
  return {sub, ModuleMap(sub, m, basis)};
}

Subspace generated_subspace(const Module& m, const Matrix& vectors) {
  Subspace s = span(m.field(), m.dim(), vectors);
  std::vector<Matrix> gens;
  for (const auto& g : m.algebra().generators()) gens.push_back(m.act(g));
  while (true) {
    Matrix b = basis_of(s);
    Matrix all = b;
    for (const auto& g : gens) all = all.hcat(g * b);
    Subspace next = span(m.field(), m.dim(), all);
    if (next == s) return s;
    s = next;
  }
}

Submodule generated_submodule(const Module& m, const Matrix& vectors) {
  return submodule(m, basis_of(generated_subspace(m, vectors)));
}

QuotientModule quotient(const Module& m, const Subspace& sub) {
  auto q = sub.quotient();
  std::vector<Matrix> act;
  for (const auto& r : m.actions()) act.push_back(q.projection * r * q.section);
  Module out(m.algebra(), q.projection.rows(), std::move(act));
  return {out, ModuleMap(m, out, q.projection), q.section};
}

DirectSum direct_sum(const Algebra& a, const std::vector<Module>& parts) {
  const Field& f = a.field();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (!p.algebra().same_structure(a)) throw ModuleError("direct sum over different algebras");
    total += p.dim();
  }
  std::vector<Matrix> act(a.dim(), Matrix(f, 0, 0));
  for (const auto& p : parts)
    for (std::size_t j = 0; j < a.dim(); ++j) act[j] = act[j].block_diag(p.action(j));
  Module sum(a, total, std::move(act));
  DirectSum out{sum, {}, {}};
  std::size_t off = 0;
  for (const auto& p : parts) {
    Matrix inj(f, total, p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) inj.set(off + i, i, 1);
    out.injections.emplace_back(p, sum, inj);
    out.projections.emplace_back(sum, p, inj.transpose());
    off += p.dim();
  }
  return out;
}

ModuleMap direct_sum(const std::vector<ModuleMap>& maps) {
  if (maps.empty()) throw ModuleError("direct sum of no maps");
  const Algebra& a = maps.front().source().algebra();
  std::vector<Module> src, tgt;
  Matrix m(a.field(), 0, 0);
  for (const auto& f : maps) {
    src.push_back(f.source());
    tgt.push_back(f.target());
    m = m.block_diag(f.matrix());
  }
  return {direct_sum(a, src).module, direct_sum(a, tgt).module, m};
}

Submodule kernel(const ModuleMap& f) { return submodule(f.source(), f.matrix().null_space()); }

QuotientModule cokernel(const ModuleMap& f) {
  return quotient(f.target(), span(f.target().field(), f.target().dim(), f.matrix()));
}

Image image(const ModuleMap& f) {
  Matrix b = basis_of(span(f.target().field(), f.target().dim(), f.matrix()));
  Submodule s = submodule(f.target(), b);
  return {s.module, ModuleMap(f.source(), s.module, coordinates_in(b, f.matrix())), s.inclusion};
}

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n) {
  require_same_algebra(m, n);
  const Field& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<ModuleMap> out;
  if (dm == 0 || dn == 0) return out;
  Matrix im = Matrix::identity(f, dm), in = Matrix::identity(f, dn);
  Matrix system(f, 0, dm * dn);
  for (const auto& g : m.algebra().generators())
    system = system.vcat(m.act(g).transpose().kron(in) - im.kron(n.act(g)));
  Matrix ns = system.null_space();
  for (std::size_t c = 0; c < ns.cols(); ++c) out.emplace_back(m, n, Matrix::unvec(ns.col(c), dn, dm));
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

Subspace radical_subspace(const Module& m) {
  const Subspace& rad = m.algebra().radical();
  Matrix all(m.field(), m.dim(), 0);
  if (rad.dim()) {
    Matrix rc = rad.basis_columns();
    for (std::size_t r = 0; r < rad.dim(); ++r) all = all.hcat(m.act(rc.col(r)));
  }
  return span(m.field(), m.dim(), all);
}

Subspace socle_subspace(const Module& m) {
  const Subspace& rad = m.algebra().radical();
  Matrix stacked(m.field(), 0, m.dim());
  if (rad.dim()) {
    Matrix rc = rad.basis_columns();
    for (std::size_t r = 0; r < rad.dim(); ++r) stacked = stacked.vcat(m.act(rc.col(r)));
  }
  return stacked.rows() ? span(m.field(), m.dim(), stacked.null_space()) : Subspace::whole(m.field(), m.dim());
}

StructuralSeries structural_series(const Module& m) {
  Subspace rad = radical_subspace(m);
  return {submodule(m, basis_of(rad)), quotient(m, rad), submodule(m, basis_of(socle_subspace(m)))};
}

}  // namespace stratakit::mod
