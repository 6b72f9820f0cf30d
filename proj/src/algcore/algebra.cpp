#include "algcore/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace stratakit::alg {

const char* to_string(AlgebraError::Code c) {
  switch (c) {
    case AlgebraError::Code::NonAdmissible: return "NON-ADMISSIBLE";
    case AlgebraError::Code::PossiblyInfinite: return "POSSIBLY-INFINITE";
    case AlgebraError::Code::InvalidQuiver: return "INVALID-QUIVER";
    case AlgebraError::Code::InvalidIdempotent: return "INVALID-IDEMPOTENT";
    case AlgebraError::Code::InvalidData: return "INVALID-DATA";
  }
  return "?";
}

struct Algebra::Impl {
  Data data;
  std::vector<Matrix> left;
};

namespace {

// idempotents plus lifts of a basis of rad / rad^2
std::vector<Matrix> derive_generators(const Algebra::Data& d,
                                      const std::vector<Matrix>& right) {
  const std::size_t n = d.labels.size();
  std::vector<Matrix> gens;
  for (auto i : d.idempotents) gens.push_back(Matrix::unit_column(d.field, n, i));
  if (d.radical.dim() == 0) return gens;
  Matrix rad_cols = d.radical.basis_columns();
  Matrix prods(d.field, n, 0);
  for (std::size_t i = 0; i < d.radical.dim(); ++i) {
    Matrix r = rad_cols.col(i);
    // x * r for x in rad
    Matrix ract(d.field, n, n);
    for (std::size_t j = 0; j < n; ++j)
      if (!r.entry_is_zero(j, 0)) ract.add_scaled(right[j], r.at(j, 0));
    prods = prods.hcat(ract * rad_cols);
  }
  Matrix span = prods.hcat(rad_cols);
  auto piv = la::independent_columns(span);
  for (auto c : piv)
    if (c >= prods.cols()) gens.push_back(span.col(c));
  return gens;
}

}  // namespace

Algebra::Algebra(Data d) {
  const std::size_t n = d.labels.size();
  if (d.right_mult.size() != n) throw AlgebraError(AlgebraError::Code::InvalidData, "structure constant count mismatch");
  for (const auto& m : d.right_mult)
    if (m.rows() != n || m.cols() != n || !(m.field() == d.field))
      throw AlgebraError(AlgebraError::Code::InvalidData, "structure constant shape mismatch");
  if (d.unit.rows() != n || d.unit.cols() != 1) throw AlgebraError(AlgebraError::Code::InvalidData, "unit shape mismatch");
  if (d.radical.ambient() != n) throw AlgebraError(AlgebraError::Code::InvalidData, "radical ambient mismatch");
  if (d.vertex_names.size() != d.idempotents.size())
    throw AlgebraError(AlgebraError::Code::InvalidData, "vertex name count mismatch");
  for (auto i : d.idempotents)
    if (i >= n) throw AlgebraError(AlgebraError::Code::InvalidData, "idempotent index out of range");
  auto impl = std::make_shared<Impl>();
  impl->left.assign(n, Matrix(d.field, n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!d.right_mult[j].entry_is_zero(k, i)) impl->left[i].set(k, j, d.right_mult[j].at(k, i));
  if (d.generators.empty()) d.generators = derive_generators(d, d.right_mult);
  impl->data = std::move(d);
  impl_ = std::move(impl);
  d_ = &impl_->data;
  left_ = &impl_->left;
}

Algebra Algebra::zero(const Field& f) {
  Data d;
  d.field = f;
  d.unit = Matrix(f, 0, 1);
  d.radical = Subspace::zero(f, 0);
  return Algebra(std::move(d));
}

Matrix Algebra::idempotent_sum(const VertexSet& vs) const {
  Matrix e(field(), dim(), 1);
  for (auto v : vs) e = e + idempotent(v);
  return e;
}

std::size_t Algebra::vertex_index(const std::string& name) const {
  auto it = std::find(d_->vertex_names.begin(), d_->vertex_names.end(), name);
  if (it == d_->vertex_names.end()) throw AlgebraError(AlgebraError::Code::InvalidIdempotent, "unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - d_->vertex_names.begin());
}

Matrix Algebra::right_action(const Matrix& y) const {
  Matrix r(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (!y.entry_is_zero(j, 0)) r.add_scaled(d_->right_mult[j], y.at(j, 0));
  return r;
}

Matrix Algebra::left_action(const Matrix& y) const {
  Matrix r(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!y.entry_is_zero(i, 0)) r.add_scaled((*left_)[i], y.at(i, 0));
  return r;
}

std::size_t Algebra::cartan_entry(std::size_t v, std::size_t w) const {
  return (left_action(idempotent(v)) * right_action(idempotent(w))).rank();
}

bool Algebra::same_structure(const Algebra& o) const {
  if (impl_ == o.impl_) return true;
  if (!impl_ || !o.impl_) return false;
  return field() == o.field() && d_->right_mult == o.d_->right_mult &&
         d_->idempotents == o.d_->idempotents && d_->unit == o.d_->unit;
}

namespace {

std::string triple(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + a.labels()[i] + ", " + a.labels()[j] + ", " + a.labels()[k] + ")";
}

}  // namespace

ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport rep;
  const std::size_t n = a.dim();
  const Field& f = a.field();
  auto add = [&](std::string check, std::string witness) {
    rep.violations.push_back({std::move(check), std::move(witness)});
  };

  // (b_i b_j) b_k = b_i (b_j b_k)  <=>  R_k R_j = R(b_j b_k)
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix lhs = a.right_mult(k) * a.right_mult(j);
      Matrix rhs = a.right_action(a.right_mult(k).col(j));
      if (lhs == rhs) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (lhs.col(i) != rhs.col(i)) {
          add("associativity", "basis triple " + triple(a, i, j, k));
          break;
        }
    }

  Matrix id = Matrix::identity(f, n);
  if (a.right_action(a.unit()) != id || a.left_action(a.unit()) != id)
    add("unit", "unit is not a two-sided identity");

  Matrix total(f, n, 1);
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    Matrix ev = a.idempotent(v);
    total = total + ev;
    for (std::size_t w = 0; w < a.vertex_count(); ++w) {
      Matrix prod = a.multiply(ev, a.idempotent(w));
      Matrix expect = v == w ? ev : Matrix(f, n, 1);
      if (prod != expect)
        add(v == w ? "idempotent" : "orthogonality",
            "vertices (" + a.vertex_names()[v] + ", " + a.vertex_names()[w] + ")");
    }
  }
  if (total != a.unit()) add("idempotent-sum", "vertex idempotents do not sum to the unit");

  const Subspace& rad = a.radical();
  Matrix rc = rad.dim() ? rad.basis_columns() : Matrix(f, n, 0);
  bool ideal_ok = true;
  for (std::size_t r = 0; r < rad.dim() && ideal_ok; ++r) {
    Matrix x = rc.col(r);
    for (std::size_t i = 0; i < n && ideal_ok; ++i) {
      Matrix bi = a.basis_vector(i);
      if (!rad.contains(a.multiply(x, bi))) {
        add("radical-ideal", "r" + std::to_string(r) + " * " + a.labels()[i] + " leaves the radical");
        ideal_ok = false;
      } else if (!rad.contains(a.multiply(bi, x))) {
        add("radical-ideal", a.labels()[i] + " * r" + std::to_string(r) + " leaves the radical");
        ideal_ok = false;
      }
    }
  }

  if (ideal_ok && rad.dim() > 0) {
    Subspace power = rad;
    std::size_t k = 1;
    while (!power.is_zero() && k <= n) {
      Matrix pc = power.basis_columns();
      Matrix gens(f, n, 0);
      for (std::size_t r = 0; r < rad.dim(); ++r) gens = gens.hcat(a.right_action(rc.col(r)) * pc);
      power = Subspace::from_columns(gens);
      ++k;
    }
    if (!power.is_zero()) add("radical-nilpotent", "rad^" + std::to_string(k) + " != 0");
  }

  if (rad.dim() + a.vertex_count() != n)
    add("split-semisimple", "dim A/rad = " + std::to_string(n - rad.dim()) + " but " +
                                std::to_string(a.vertex_count()) + " vertices");
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    for (std::size_t w = 0; w < a.vertex_count(); ++w) {
      Matrix block = a.left_action(a.idempotent(v)) * a.right_action(a.idempotent(w));
      Subspace s = Subspace::from_columns(block).sum(rad);
      std::size_t extra = s.dim() - rad.dim();
      if (extra != (v == w ? 1u : 0u))
        add("split-semisimple", "e_" + a.vertex_names()[v] + " (A/rad) e_" + a.vertex_names()[w] +
                                    " has dimension " + std::to_string(extra));
    }
  return rep;
}

void check_vertex_set(const Algebra& a, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= a.vertex_count())
      throw AlgebraError(AlgebraError::Code::InvalidIdempotent, "vertex index " + std::to_string(vs[i]) + " out of range");
    if (i > 0 && vs[i] <= vs[i - 1])
      throw AlgebraError(AlgebraError::Code::InvalidIdempotent, "vertex set must be sorted and unique");
  }
}

VertexSet complement(const Algebra& a, const VertexSet& vs) {
  check_vertex_set(a, vs);
  VertexSet out;
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    if (!std::binary_search(vs.begin(), vs.end(), v)) out.push_back(v);
  return out;
}

namespace {

std::string element_label(const Algebra& a, const Matrix& x) {
  std::size_t nz = 0, idx = 0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    if (!x.entry_is_zero(i, 0)) {
      ++nz;
      idx = i;
    }
  if (nz == 1 && x.at(idx, 0).is_one()) return a.labels()[idx];
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (x.entry_is_zero(i, 0)) continue;
    os << (first ? "" : "+") << x.at(i, 0).to_string() << "*" << a.labels()[i];
    first = false;
  }
  return os.str();
}

Subspace subspace_of(const Algebra& a, const Matrix& cols) {
  return cols.cols() ? Subspace::from_columns(cols) : Subspace::zero(a.field(), cols.rows());
}

}  // namespace

CornerAlgebra corner_algebra(const Algebra& a, const VertexSet& vs) {
  check_vertex_set(a, vs);
  const Field& f = a.field();
  Matrix e = a.idempotent_sum(vs);
  Matrix sandwich = a.left_action(e) * a.right_action(e);  // columns e b_i e
  Matrix spanning(f, a.dim(), 0);
  for (auto v : vs) spanning = spanning.hcat(a.idempotent(v));
  spanning = spanning.hcat(sandwich);
  Matrix basis = spanning.select_cols(la::independent_columns(spanning));
  const std::size_t k = basis.cols();

  Algebra::Data d;
  d.field = f;
  for (std::size_t c = 0; c < k; ++c) d.labels.push_back(element_label(a, basis.col(c)));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    d.vertex_names.push_back(a.vertex_names()[vs[i]]);
    d.idempotents.push_back(i);
  }
  auto coords = [&](const Matrix& x) {
    auto s = basis.solve(x);
    if (!s) throw AlgebraError(AlgebraError::Code::InvalidData, "corner product left eAe");
    return s->particular;
  };
  for (std::size_t j = 0; j < k; ++j) {
    Matrix ract = a.right_action(basis.col(j));
    Matrix images = coords(ract * basis);
    d.right_mult.push_back(images);
  }
  d.unit = coords(e);
  Matrix rad_img = a.radical().dim() ? sandwich * a.radical().basis_columns() : Matrix(f, a.dim(), 0);
  Matrix rad_coords = rad_img.cols() ? coords(rad_img) : Matrix(f, k, 0);
  d.radical = subspace_of(a, rad_coords);
  return {Algebra(std::move(d)), basis, vs};
}

Subspace idempotent_ideal(const Algebra& a, const VertexSet& vs) {
  check_vertex_set(a, vs);
  Matrix ea = a.left_action(a.idempotent_sum(vs));  // columns e b_j
  Matrix gens(a.field(), a.dim(), 0);
  for (std::size_t i = 0; i < a.dim(); ++i) gens = gens.hcat(a.left_mult(i) * ea);
  Subspace ideal = subspace_of(a, gens);
  // one pass already spans the ideal; keep closing in case of raw input
  while (true) {
    Matrix more = ideal.dim() ? ideal.basis_columns() : Matrix(a.field(), a.dim(), 0);
    Matrix cl = more;
    for (std::size_t i = 0; i < a.dim() && more.cols(); ++i)
      cl = cl.hcat(a.left_mult(i) * more).hcat(a.right_mult(i) * more);
    Subspace next = subspace_of(a, cl);
    if (next == ideal) return ideal;
    ideal = next;
  }
}

QuotientAlgebra quotient_by_idempotent_ideal(const Algebra& a, const VertexSet& vs) {
  const Field& f = a.field();
  Subspace ideal = idempotent_ideal(a, vs);
  auto q = ideal.quotient();
  const std::size_t k = q.projection.rows();

  Algebra::Data d;
  d.field = f;
  for (std::size_t c = 0; c < k; ++c) d.labels.push_back(element_label(a, q.section.col(c)));
  VertexSet rest = complement(a, vs);
  for (auto w : rest) {
    Matrix img = q.projection * a.idempotent(w);
    std::size_t found = k;
    for (std::size_t c = 0; c < k; ++c)
      if (img == Matrix::unit_column(f, k, c)) found = c;
    if (found == k)
      throw AlgebraError(AlgebraError::Code::InvalidData,
                         "vertex idempotent " + a.vertex_names()[w] + " is not a basis element of A/AeA");
    d.vertex_names.push_back(a.vertex_names()[w]);
    d.idempotents.push_back(found);
  }
  for (std::size_t j = 0; j < k; ++j)
    d.right_mult.push_back(q.projection * a.right_action(q.section.col(j)) * q.section);
  d.unit = q.projection * a.unit();
  Matrix rad_img = a.radical().dim() ? q.projection * a.radical().basis_columns() : Matrix(f, k, 0);
  d.radical = rad_img.cols() ? Subspace::from_columns(rad_img) : Subspace::zero(f, k);
  return {Algebra(std::move(d)), q.projection, q.section, ideal, rest};
}

Algebra opposite(const Algebra& a) {
  Algebra::Data d = a.data();
  for (std::size_t j = 0; j < a.dim(); ++j) d.right_mult[j] = a.left_mult(j);
  return Algebra(std::move(d));
}

}  // namespace stratakit::alg
