#include "recol/idempotent.hpp"

namespace stratakit::recol {

using la::Matrix;
using la::Subspace;
using mod::Module;
using mod::ModuleMap;

namespace {

Matrix column_basis(const Matrix& m) { return m.select_cols(la::independent_columns(m)); }

Subspace column_span(const la::Field& f, std::size_t n, const Matrix& cols) {
  if (cols.cols() == 0) return Subspace::zero(f, n);
  return Subspace::from_columns(cols);
}

Matrix stack(const la::Field& f, std::size_t cols, const std::vector<Matrix>& parts) {
  Matrix out(f, 0, cols);
  for (const auto& p : parts) out = out.vcat(p);
  return out;
}

// Null space with a guard for the no-equation case.
Matrix kernel_columns(const Matrix& eqs, std::size_t n) {
  if (eqs.rows() == 0) return Matrix::identity(eqs.field(), n);
  return eqs.null_space();
}

struct Tensor {
  Module module;
  Matrix projection;
  Matrix section;
};

struct HomSpace {
  Module module;
  Matrix basis;  ///< columns: vec of phi (dX x s, column-major)
};

class Builder {
 public:
  explicit Builder(std::shared_ptr<const IdempotentData> d) : d_(std::move(d)) {}

  const alg::Algebra& A() const { return d_->algebra; }
  const la::Field& F() const { return A().field(); }
  std::size_t r() const { return d_->ea_basis.cols(); }
  std::size_t s() const { return d_->ae_basis.cols(); }

  Module inflate(const Module& z) const {
    const auto& pi = d_->quotient.projection;
    std::vector<Matrix> act;
    for (std::size_t j = 0; j < A().dim(); ++j) {
      Matrix m(F(), z.dim(), z.dim());
      for (std::size_t k = 0; k < pi.rows(); ++k)
        if (!pi.entry_is_zero(k, j)) m.add_scaled(z.action(k), pi.at(k, j));
      act.push_back(std::move(m));
    }
    return Module(A(), z.dim(), std::move(act));
  }

  mod::QuotientModule top_part(const Module& m) const {
    return mod::quotient(m, mod::generated_subspace(m, m.act(d_->e)));
  }
  Module restrict_top(const Module& m, const mod::QuotientModule& q) const {
    const auto& qa = d_->quotient.algebra;
    std::vector<Matrix> act;
    for (std::size_t k = 0; k < qa.dim(); ++k)
      act.push_back(q.projection.matrix() * m.act(d_->quotient.section.col(k)) * q.section);
    return Module(qa, q.module.dim(), std::move(act));
  }

  Matrix socle_basis(const Module& m) const {
    std::vector<Matrix> eqs;
    Matrix re = m.act(d_->e);
    for (std::size_t j = 0; j < A().dim(); ++j) eqs.push_back(re * m.action(j));
    return kernel_columns(stack(F(), m.dim(), eqs), m.dim());
  }
  Module restrict_to_quotient(const Module& m, const Matrix& basis) const {
    const auto& q = d_->quotient;
    std::vector<Matrix> act;
    for (std::size_t k = 0; k < q.algebra.dim(); ++k)
      act.push_back(mod::coordinates_in(basis, m.act(q.section.col(k)) * basis));
    return Module(q.algebra, basis.cols(), std::move(act));
  }

  Matrix e_basis(const Module& m) const { return column_basis(m.act(d_->e)); }
  Module restrict_to_corner(const Module& m, const Matrix& basis) const {
    const auto& c = d_->corner;
    std::vector<Matrix> act;
    for (std::size_t k = 0; k < c.algebra.dim(); ++k)
      act.push_back(mod::coordinates_in(basis, m.act(c.embedding.col(k)) * basis));
    return Module(c.algebra, basis.cols(), std::move(act));
  }

  Tensor tensor(const Module& x) const {
    const std::size_t n = x.dim() * r();
    Matrix rel(F(), n, 0);
    Matrix id_x = Matrix::identity(F(), x.dim());
    Matrix id_r = Matrix::identity(F(), r());
    for (std::size_t k = 0; k < d_->ea_left.size(); ++k)
      rel = rel.hcat(x.action(k).kron(id_r) - id_x.kron(d_->ea_left[k]));
    auto q = column_span(F(), n, rel).quotient();
    std::vector<Matrix> act;
    for (std::size_t j = 0; j < A().dim(); ++j) act.push_back(q.projection * id_x.kron(d_->ea_right[j]) * q.section);
    Module out(A(), q.projection.rows(), std::move(act));
    return {out, q.projection, q.section};
  }

  HomSpace hom(const Module& x) const {
    const std::size_t dx = x.dim(), n = dx * s();
    Matrix id_x = Matrix::identity(F(), dx);
    Matrix id_s = Matrix::identity(F(), s());
    std::vector<Matrix> eqs;
    for (std::size_t k = 0; k < d_->ae_right.size(); ++k)
      eqs.push_back(d_->ae_right[k].transpose().kron(id_x) - id_s.kron(x.action(k)));
    Matrix h = kernel_columns(stack(F(), n, eqs), n);
    std::vector<Matrix> act;
    for (std::size_t j = 0; j < A().dim(); ++j)
      act.push_back(mod::coordinates_in(h, d_->ae_left[j].transpose().kron(id_x) * h));
    return {Module(A(), h.cols(), std::move(act)), h};
  }

 private:
  std::shared_ptr<const IdempotentData> d_;
};

// Matrix of u -> left * u restricted to the column space `basis`.
Matrix restricted(const Matrix& op, const Matrix& basis) { return mod::coordinates_in(basis, op * basis); }

std::shared_ptr<const IdempotentData> make_data(const alg::Algebra& a, const alg::VertexSet& u) {
  alg::check_vertex_set(a, u);
  auto d = std::make_shared<IdempotentData>();
  d->algebra = a;
  d->u_vertices = u;
  d->z_vertices = alg::complement(a, u);
  d->e = a.idempotent_sum(u);
  d->corner = alg::corner_algebra(a, u);
  d->quotient = alg::quotient_by_idempotent_ideal(a, u);
  d->ea_basis = column_basis(a.left_action(d->e));
  d->ae_basis = column_basis(a.right_action(d->e));
  const auto& emb = d->corner.embedding;
  for (std::size_t k = 0; k < emb.cols(); ++k) {
    d->ea_left.push_back(restricted(a.left_action(emb.col(k)), d->ea_basis));
    d->ae_right.push_back(restricted(a.right_action(emb.col(k)), d->ae_basis));
  }
  for (std::size_t j = 0; j < a.dim(); ++j) {
    d->ea_right.push_back(restricted(a.right_mult(j), d->ea_basis));
    d->ae_left.push_back(restricted(a.left_mult(j), d->ae_basis));
  }
  d->e_in_ea = mod::coordinates_in(d->ea_basis, d->e);
  d->e_in_ae = mod::coordinates_in(d->ae_basis, d->e);
  return d;
}

}  // namespace

IdempotentRecollement make_idempotent_recollement(const mod::ModCat& cat, const alg::VertexSet& u) {
  auto data = make_data(cat.algebra(), u);
  auto b = std::make_shared<Builder>(data);
  ModuleRecollement r{ModuleCategory(cat), ModuleCategory(data->quotient.algebra),
                      ModuleCategory(data->corner.algebra)};

  r.i_push.obj = [b](const Module& z) { return b->inflate(z); };
  r.i_push.map = [b](const ModuleMap& g) {
    return ModuleMap(b->inflate(g.source()), b->inflate(g.target()), g.matrix());
  };

  r.i_pull.obj = [b](const Module& m) { return b->restrict_top(m, b->top_part(m)); };
  r.i_pull.map = [b](const ModuleMap& g) {
    auto qs = b->top_part(g.source()), qt = b->top_part(g.target());
    return ModuleMap(b->restrict_top(g.source(), qs), b->restrict_top(g.target(), qt), qt.projection.matrix() * g.matrix() * qs.section);
  };

  r.i_shriek.obj = [b](const Module& m) { return b->restrict_to_quotient(m, b->socle_basis(m)); };
  r.i_shriek.map = [b](const ModuleMap& g) {
    Matrix bs = b->socle_basis(g.source()), bt = b->socle_basis(g.target());
    return ModuleMap(b->restrict_to_quotient(g.source(), bs), b->restrict_to_quotient(g.target(), bt),
                     mod::coordinates_in(bt, g.matrix() * bs));
  };

  r.j_pull.obj = [b](const Module& m) { return b->restrict_to_corner(m, b->e_basis(m)); };
  r.j_pull.map = [b](const ModuleMap& g) {
    Matrix bs = b->e_basis(g.source()), bt = b->e_basis(g.target());
    return ModuleMap(b->restrict_to_corner(g.source(), bs), b->restrict_to_corner(g.target(), bt),
                     mod::coordinates_in(bt, g.matrix() * bs));
  };

  r.j_shriek.obj = [b](const Module& x) { return b->tensor(x).module; };
  r.j_shriek.map = [b](const ModuleMap& g) {
    auto ts = b->tensor(g.source()), tt = b->tensor(g.target());
    Matrix id_r = Matrix::identity(g.matrix().field(), b->r());
    return ModuleMap(ts.module, tt.module, tt.projection * g.matrix().kron(id_r) * ts.section);
  };

  r.j_push.obj = [b](const Module& x) { return b->hom(x).module; };
  r.j_push.map = [b](const ModuleMap& g) {
    auto hs = b->hom(g.source()), ht = b->hom(g.target());
    Matrix id_s = Matrix::identity(g.matrix().field(), b->s());
    return ModuleMap(hs.module, ht.module, mod::coordinates_in(ht.basis, id_s.kron(g.matrix()) * hs.basis));
  };

  r.unit_i = [b](const Module& m) {
    auto q = b->top_part(m);
    return ModuleMap(m, b->inflate(b->restrict_top(m, q)), q.projection.matrix());
  };
  r.counit_i = [b](const Module& z) {
    Module m = b->inflate(z);
    auto q = b->top_part(m);
    return ModuleMap(b->restrict_top(m, q), z, q.section);
  };
  r.unit_i_shriek = [b](const Module& z) {
    Module m = b->inflate(z);
    Matrix bs = b->socle_basis(m);
    return ModuleMap(z, b->restrict_to_quotient(m, bs), mod::coordinates_in(bs, Matrix::identity(m.field(), m.dim())));
  };
  r.counit_i_shriek = [b](const Module& m) {
    Matrix bs = b->socle_basis(m);
    return ModuleMap(b->inflate(b->restrict_to_quotient(m, bs)), m, bs);
  };

  r.unit_j_shriek = [b, data](const Module& y) {
    auto t = b->tensor(y);
    Matrix be = b->e_basis(t.module);
    Matrix id_y = Matrix::identity(y.field(), y.dim());
    return ModuleMap(y, b->restrict_to_corner(t.module, be),
                     mod::coordinates_in(be, t.projection * id_y.kron(data->e_in_ea)));
  };
  r.counit_j_shriek = [b, data](const Module& m) {
    Matrix be = b->e_basis(m);
    Module x = b->restrict_to_corner(m, be);
    auto t = b->tensor(x);
    const std::size_t r_ = b->r();
    Matrix img(m.field(), m.dim(), be.cols() * r_);
    for (std::size_t l = 0; l < r_; ++l) {
      Matrix cols = m.act(data->ea_basis.col(l)) * be;
      for (std::size_t i = 0; i < be.cols(); ++i)
        for (std::size_t row = 0; row < m.dim(); ++row) img.set(row, i * r_ + l, cols.at(row, i));
    }
    return ModuleMap(t.module, m, img * t.section);
  };
  r.unit_j = [b, data](const Module& m) {
    Matrix be = b->e_basis(m);
    Module x = b->restrict_to_corner(m, be);
    auto h = b->hom(x);
    std::vector<Matrix> parts;
    for (std::size_t l = 0; l < b->s(); ++l)
      parts.push_back(mod::coordinates_in(be, m.act(data->ae_basis.col(l))));
    return ModuleMap(m, h.module, mod::coordinates_in(h.basis, stack(m.field(), m.dim(), parts)));
  };
  r.counit_j = [b, data](const Module& y) {
    auto h = b->hom(y);
    Matrix be = b->e_basis(h.module);
    Matrix id_y = Matrix::identity(y.field(), y.dim());
    return ModuleMap(b->restrict_to_corner(h.module, be), y, data->e_in_ae.transpose().kron(id_y) * h.basis * be);
  };
  return {data, std::move(r)};
}

StandardSamples standard_samples(const IdempotentRecollement& ir) {
  auto fill = [](const ModuleCategory& c) {
    Samples<Module> out;
    const auto& mc = c.modcat();
    const auto& names = c.algebra().vertex_names();
    for (std::size_t v = 0; v < names.size(); ++v) {
      out.emplace_back("S(" + names[v] + ")", mc.simple(v));
      out.emplace_back("P(" + names[v] + ")", mc.projective(v));
      out.emplace_back("I(" + names[v] + ")", mc.injective(v));
    }
    return out;
  };
  return {fill(ir.r.center), fill(ir.r.left), fill(ir.r.right)};
}

TransportedCover cover_transport(const IdempotentRecollement& ir, const Module& x, const mod::Cover& p) {
  const auto& r = ir.r;
  auto ie = intermediate_extension(r, x);
  ModuleMap lifted = r.center.compose(ie.from_left, r.j_shriek(p.map));
  if (!lifted.is_surjective()) throw RecollementError("transported cover is not onto j_!* x");
  auto direct = r.center.modcat().projective_cover(ie.object);
  return {lifted.source(), lifted, lifted.source().dim() == direct.projective.module.dim()};
}

}  // namespace stratakit::recol
