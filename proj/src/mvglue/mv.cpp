#include "mvglue/mv.hpp"

#include "algcore/fixtures.hpp"
#include "modcat/sampling.hpp"

#include <functional>
#include <random>

namespace stratakit::mv {

namespace {

using la::Scalar;
using la::Subspace;

Subspace span(const Field& f, std::size_t n, const Matrix& cols) {
  if (cols.cols() == 0 || n == 0) return Subspace::zero(f, n);
  return Subspace::from_columns(cols);
}

Matrix eye(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

Matrix combine(const Field& f, std::size_t n, const std::vector<Matrix>& basis_mats, const Matrix& coords) {
  Matrix out(f, n, n);
  for (std::size_t k = 0; k < basis_mats.size(); ++k)
    if (!coords.entry_is_zero(k, 0)) out.add_scaled(basis_mats[k], coords.at(k, 0));
  return out;
}

/// X with m X = 1 for surjective m.
Matrix right_inverse(const Matrix& m) {
  if (m.rows() == 0) return Matrix(m.field(), m.cols(), 0);
  auto sol = m.solve(eye(m.field(), m.rows()));
  if (!sol) throw MVError(MVError::Code::NotCommuting, "map is not surjective");
  return sol->particular;
}

void check_bimodule(const std::string& name, const Bimodule& b, const Algebra& la_, const Algebra& ra,
                    std::vector<std::string>& errs) {
  const Field& f = la_.field();
  if (b.left.size() != la_.dim() || b.right.size() != ra.dim()) {
    errs.push_back(name + ": action tables have the wrong number of matrices");
    return;
  }
  for (const auto& m : b.left)
    if (m.rows() != b.dim || m.cols() != b.dim) {
      errs.push_back(name + ": left action matrix has the wrong shape");
      return;
    }
  for (const auto& m : b.right)
    if (m.rows() != b.dim || m.cols() != b.dim) {
      errs.push_back(name + ": right action matrix has the wrong shape");
      return;
    }
  const Matrix id = eye(f, b.dim);
  if (combine(f, b.dim, b.left, la_.unit()) != id) errs.push_back(name + ": unit of the left algebra does not act as 1");
  if (combine(f, b.dim, b.right, ra.unit()) != id) errs.push_back(name + ": unit of the right algebra does not act as 1");
  for (std::size_t i = 0; i < la_.dim(); ++i)
    for (std::size_t j = 0; j < la_.dim(); ++j)
      if (b.left[i] * b.left[j] != combine(f, b.dim, b.left, la_.multiply(la_.basis_vector(i), la_.basis_vector(j)))) {
        errs.push_back(name + ": left action is not multiplicative at (" + la_.labels()[i] + ", " + la_.labels()[j] + ")");
        return;
      }
  for (std::size_t i = 0; i < ra.dim(); ++i)
    for (std::size_t j = 0; j < ra.dim(); ++j)
      if (b.right[j] * b.right[i] != combine(f, b.dim, b.right, ra.multiply(ra.basis_vector(i), ra.basis_vector(j)))) {
        errs.push_back(name + ": right action is not multiplicative at (" + ra.labels()[i] + ", " + ra.labels()[j] + ")");
        return;
      }
  for (const auto& l : b.left)
    for (const auto& r : b.right)
      if (l * r != r * l) {
        errs.push_back(name + ": left and right actions do not commute");
        return;
      }
}

Matrix f_matrix(const MVData& d, const Tensor& tx, const Tensor& ty, const Matrix& f) {
  return ty.project * f.kron(eye(f.field(), d.m.dim)) * tx.section;
}

Matrix g_matrix(const MVData& d, const Hom& hx, const Hom& hy, const Matrix& f) {
  return mod::coordinates_in(hy.basis, eye(f.field(), d.n.dim).kron(f) * hx.basis);
}

Matrix eps_matrix(const MVData& d, const Module& x, const Tensor& t, const Hom& h) {
  const Field& f = x.field();
  const std::size_t xd = x.dim(), md = d.m.dim, nd = d.n.dim;
  Matrix e(f, xd * nd, xd * md);
  for (std::size_t l = 0; l < md; ++l)
    for (std::size_t j = 0; j < nd; ++j) {
      Matrix act = x.act(d.theta.col(l * nd + j));
      for (std::size_t i = 0; i < xd; ++i)
        for (std::size_t k = 0; k < xd; ++k)
          if (!act.entry_is_zero(k, i)) e.set(j * xd + k, i * md + l, act.at(k, i));
    }
  return mod::coordinates_in(h.basis, e * t.section);
}

Matrix vec_of(const Matrix& m) { return m.vec(); }

}  // namespace

Algebra ground_algebra(const Field& f) {
  alg::Presentation p;
  p.field = f;
  p.quiver.vertices = {"1"};
  return alg::build_bound_quiver_algebra(p);
}

std::vector<std::string> validate(const MVData& d) {
  std::vector<std::string> errs;
  if (!(d.r.field() == d.s.field())) return {"the two algebras live over different fields"};
  const Field& f = d.s.field();
  check_bimodule("M", d.m, d.s, d.r, errs);
  check_bimodule("N", d.n, d.r, d.s, errs);
  if (!errs.empty()) return errs;
  const std::size_t md = d.m.dim, nd = d.n.dim;
  if (d.theta.rows() != d.s.dim() || d.theta.cols() != md * nd) {
    errs.push_back("theta has shape " + std::to_string(d.theta.rows()) + "x" + std::to_string(d.theta.cols()) +
                   ", expected " + std::to_string(d.s.dim()) + "x" + std::to_string(md * nd));
    return errs;
  }
  const Matrix im = eye(f, md), in = eye(f, nd);
  for (std::size_t r = 0; r < d.r.dim(); ++r)
    if (d.theta * d.m.right[r].kron(in) != d.theta * im.kron(d.n.left[r])) {
      errs.push_back("theta is not balanced over " + d.r.labels()[r]);
      break;
    }
  for (std::size_t s = 0; s < d.s.dim(); ++s) {
    if (d.theta * d.m.left[s].kron(in) != d.s.left_mult(s) * d.theta) {
      errs.push_back("theta is not left S-linear at " + d.s.labels()[s]);
      break;
    }
    if (d.theta * im.kron(d.n.right[s]) != d.s.right_mult(s) * d.theta) {
      errs.push_back("theta is not right S-linear at " + d.s.labels()[s]);
      break;
    }
  }
  if (!errs.empty()) return errs;
  try {
    Module reg = Module::regular(d.s);
    Tensor t = apply_f(d, reg);
    Hom h = apply_g(d, reg);
    Matrix e = eps_matrix(d, reg, t, h);
    if (!mod::is_homomorphism(t.module, h.module, e)) errs.push_back("eps on S_S is not R-linear");
    for (std::size_t s = 0; s < d.s.dim() && errs.empty(); ++s) {
      const Matrix& l = d.s.left_mult(s);
      if (g_matrix(d, h, h, l) * e != e * f_matrix(d, t, t, l))
        errs.push_back("eps is not natural for left multiplication by " + d.s.labels()[s]);
    }
  } catch (const std::exception& ex) {
    errs.push_back(std::string("eps is not well defined: ") + ex.what());
  }
  return errs;
}

void require_valid(const MVData& d) {
  auto errs = validate(d);
  if (errs.empty()) return;
  std::string msg = "invalid gluing data:";
  for (const auto& e : errs) msg += " " + e + ";";
  throw MVError(MVError::Code::InvalidData, msg);
}

Tensor apply_f(const MVData& d, const Module& x) {
  const Field& f = x.field();
  const std::size_t xd = x.dim(), md = d.m.dim, v = xd * md;
  Matrix rel(f, v, 0);
  for (std::size_t k = 0; k < d.s.dim(); ++k)
    rel = rel.hcat(x.action(k).kron(eye(f, md)) - eye(f, xd).kron(d.m.left[k]));
  std::vector<Matrix> act;
  for (std::size_t j = 0; j < d.r.dim(); ++j) act.push_back(eye(f, xd).kron(d.m.right[j]));
  Module big(d.r, v, std::move(act));
  auto q = mod::quotient(big, span(f, v, rel));
  return {q.module, q.projection.matrix(), q.section};
}

ModuleMap apply_f(const MVData& d, const ModuleMap& g) {
  Tensor tx = apply_f(d, g.source()), ty = apply_f(d, g.target());
  return {tx.module, ty.module, f_matrix(d, tx, ty, g.matrix())};
}

Hom apply_g(const MVData& d, const Module& x) {
  const Field& f = x.field();
  const std::size_t xd = x.dim(), nd = d.n.dim, v = xd * nd;
  Matrix eqs(f, 0, v);
  for (std::size_t k = 0; k < d.s.dim(); ++k)
    eqs = eqs.vcat(d.n.right[k].transpose().kron(eye(f, xd)) - eye(f, nd).kron(x.action(k)));
  Matrix h = v == 0 ? Matrix(f, 0, 0) : eqs.null_space();
  std::vector<Matrix> act;
  for (std::size_t j = 0; j < d.r.dim(); ++j)
    act.push_back(mod::coordinates_in(h, d.n.left[j].transpose().kron(eye(f, xd)) * h));
  return {Module(d.r, h.cols(), std::move(act)), h};
}

ModuleMap apply_g(const MVData& d, const ModuleMap& g) {
  Hom hx = apply_g(d, g.source()), hy = apply_g(d, g.target());
  return {hx.module, hy.module, g_matrix(d, hx, hy, g.matrix())};
}

ModuleMap eps(const MVData& d, const Module& x) {
  Tensor t = apply_f(d, x);
  Hom h = apply_g(d, x);
  return {t.module, h.module, eps_matrix(d, x, t, h)};
}

// ---------------------------------------------------------------------------

MVCategory::MVCategory(MVData d) : d_(std::make_shared<const MVData>(std::move(d))), rcat_(d_->r), scat_(d_->s) {
  require_valid(*d_);
}

std::string MVCategory::object_violation(const Object& x) const {
  if (!x.u.algebra().same_structure(d_->s)) return "U component is not over S";
  if (!x.z.algebra().same_structure(d_->r)) return "Z component is not over R";
  Tensor t = apply_f(*d_, x.u);
  Hom h = apply_g(*d_, x.u);
  if (x.alpha.rows() != x.z.dim() || x.alpha.cols() != t.module.dim()) return "alpha has the wrong shape";
  if (x.beta.rows() != h.module.dim() || x.beta.cols() != x.z.dim()) return "beta has the wrong shape";
  if (!mod::is_homomorphism(t.module, x.z, x.alpha)) return "alpha is not R-linear";
  if (!mod::is_homomorphism(x.z, h.module, x.beta)) return "beta is not R-linear";
  if (x.beta * x.alpha != eps_matrix(*d_, x.u, t, h)) return "beta alpha differs from eps";
  return {};
}

MVObject MVCategory::object(Module u, Module z, Matrix alpha, Matrix beta) const {
  MVObject x{std::move(u), std::move(z), std::move(alpha), std::move(beta)};
  auto v = object_violation(x);
  if (!v.empty()) throw MVError(MVError::Code::NotCommuting, v);
  return x;
}

std::string MVCategory::morphism_violation(const Morphism& f) const {
  if (!mod::is_homomorphism(f.source.u, f.target.u, f.fu.matrix())) return "U component is not S-linear";
  if (!mod::is_homomorphism(f.source.z, f.target.z, f.fz.matrix())) return "Z component is not R-linear";
  Tensor tx = apply_f(*d_, f.source.u), ty = apply_f(*d_, f.target.u);
  if (f.fz.matrix() * f.source.alpha != f.target.alpha * f_matrix(*d_, tx, ty, f.fu.matrix()))
    return "alpha square does not commute";
  Hom hx = apply_g(*d_, f.source.u), hy = apply_g(*d_, f.target.u);
  if (g_matrix(*d_, hx, hy, f.fu.matrix()) * f.source.beta != f.target.beta * f.fz.matrix())
    return "beta square does not commute";
  return {};
}

MVMorphism MVCategory::morphism(const Object& x, const Object& y, const Matrix& fu, const Matrix& fz) const {
  MVMorphism f{x, y, ModuleMap(x.u, y.u, fu), ModuleMap(x.z, y.z, fz)};
  auto v = morphism_violation(f);
  if (!v.empty()) throw MVError(MVError::Code::NotCommuting, v);
  return f;
}

MVMorphism MVCategory::identity(const Object& x) const {
  return {x, x, ModuleMap::identity(x.u), ModuleMap::identity(x.z)};
}

MVMorphism MVCategory::zero(const Object& x, const Object& y) const {
  return {x, y, ModuleMap::zero(x.u, y.u), ModuleMap::zero(x.z, y.z)};
}

MVMorphism MVCategory::compose(const Morphism& g, const Morphism& f) const {
  return {f.source, g.target, g.fu * f.fu, g.fz * f.fz};
}

MVMorphism MVCategory::add(const Morphism& f, const Morphism& g) const {
  return {f.source, f.target, f.fu + g.fu, f.fz + g.fz};
}

MVMorphism MVCategory::scaled(const Morphism& f, const Scalar& c) const {
  return {f.source, f.target, f.fu.scaled(c), f.fz.scaled(c)};
}

bool MVCategory::is_identity(const Morphism& f) const {
  const Field& k = f.fu.matrix().field();
  return f.source.u.dim() == f.target.u.dim() && f.source.z.dim() == f.target.z.dim() &&
         f.fu.matrix() == eye(k, f.source.u.dim()) && f.fz.matrix() == eye(k, f.source.z.dim());
}

bool MVCategory::equal(const Morphism& f, const Morphism& g) const {
  auto same = [](const ModuleMap& a, const ModuleMap& b) {
    return a.source().dim() == b.source().dim() && a.target().dim() == b.target().dim() && a.matrix() == b.matrix();
  };
  return same(f.fu, g.fu) && same(f.fz, g.fz);
}

MVMorphism MVCategory::inverse(const Morphism& f) const {
  if (f.source.u.dim() != f.target.u.dim() || f.source.z.dim() != f.target.z.dim())
    throw recol::RecollementError("morphism is not invertible");
  auto iu = f.fu.matrix().inverse();
  auto iz = f.fz.matrix().inverse();
  if (!iu || !iz) throw recol::RecollementError("morphism is not invertible");
  return {f.target, f.source, ModuleMap(f.target.u, f.source.u, *iu), ModuleMap(f.target.z, f.source.z, *iz)};
}

recol::KernelOf<MVObject, MVMorphism> MVCategory::kernel(const Morphism& f) const {
  const auto& x = f.source;
  auto ku = mod::kernel(f.fu);
  auto kz = mod::kernel(f.fz);
  Tensor tk = apply_f(*d_, ku.module), tx = apply_f(*d_, x.u);
  Hom hk = apply_g(*d_, ku.module), hx = apply_g(*d_, x.u);
  Matrix alpha = mod::coordinates_in(kz.inclusion.matrix(), x.alpha * f_matrix(*d_, tk, tx, ku.inclusion.matrix()));
  Matrix beta = mod::coordinates_in(g_matrix(*d_, hk, hx, ku.inclusion.matrix()), x.beta * kz.inclusion.matrix());
  MVObject k{ku.module, kz.module, alpha, beta};
  return {k, MVMorphism{k, x, ku.inclusion, kz.inclusion}};
}

recol::KernelOf<MVObject, MVMorphism> MVCategory::cokernel(const Morphism& f) const {
  const auto& y = f.target;
  auto cu = mod::cokernel(f.fu);
  auto cz = mod::cokernel(f.fz);
  Tensor ty = apply_f(*d_, y.u), tc = apply_f(*d_, cu.module);
  Hom hy = apply_g(*d_, y.u), hc = apply_g(*d_, cu.module);
  Matrix alpha = cz.projection.matrix() * y.alpha * right_inverse(f_matrix(*d_, ty, tc, cu.projection.matrix()));
  Matrix beta = g_matrix(*d_, hy, hc, cu.projection.matrix()) * y.beta * cz.section;
  MVObject c{cu.module, cz.module, alpha, beta};
  return {c, MVMorphism{y, c, cu.projection, cz.projection}};
}

recol::ImageOf<MVObject, MVMorphism> MVCategory::image(const Morphism& f) const {
  auto c = cokernel(f);
  auto k = kernel(c.map);
  return {k.object, factor_through_mono(k.map, f), k.map};
}

MVMorphism MVCategory::factor_through_mono(const Morphism& mono, const Morphism& f) const {
  return {f.source, mono.source, ModuleMap(f.source.u, mono.source.u, mod::coordinates_in(mono.fu.matrix(), f.fu.matrix())),
          ModuleMap(f.source.z, mono.source.z, mod::coordinates_in(mono.fz.matrix(), f.fz.matrix()))};
}

MVMorphism MVCategory::factor_through_epi(const Morphism& epi, const Morphism& f) const {
  Matrix u = f.fu.matrix() * right_inverse(epi.fu.matrix());
  Matrix z = f.fz.matrix() * right_inverse(epi.fz.matrix());
  if (u * epi.fu.matrix() != f.fu.matrix() || z * epi.fz.matrix() != f.fz.matrix())
    throw recol::RecollementError("morphism does not vanish on the kernel");
  return {epi.target, f.target, ModuleMap(epi.target.u, f.target.u, u), ModuleMap(epi.target.z, f.target.z, z)};
}

std::vector<MVMorphism> MVCategory::hom_basis(const Object& x, const Object& y) const {
  auto hu = mod::hom_basis(x.u, y.u);
  auto hz = mod::hom_basis(x.z, y.z);
  if (hu.empty() && hz.empty()) return {};
  Tensor tx = apply_f(*d_, x.u), ty = apply_f(*d_, y.u);
  Hom gx = apply_g(*d_, x.u), gy = apply_g(*d_, y.u);
  const Field& f = d_->s.field();
  const std::size_t rows = y.z.dim() * tx.module.dim() + gy.module.dim() * x.z.dim();
  Matrix c(f, rows, 0);
  for (const auto& a : hu)
    c = c.hcat(vec_of(-(y.alpha * f_matrix(*d_, tx, ty, a.matrix())))
                   .vcat(vec_of(g_matrix(*d_, gx, gy, a.matrix()) * x.beta)));
  for (const auto& b : hz) c = c.hcat(vec_of(b.matrix() * x.alpha).vcat(vec_of(-(y.beta * b.matrix()))));
  Matrix sol = c.null_space();
  std::vector<MVMorphism> out;
  for (std::size_t k = 0; k < sol.cols(); ++k) {
    Matrix mu(f, y.u.dim(), x.u.dim()), mz(f, y.z.dim(), x.z.dim());
    for (std::size_t i = 0; i < hu.size(); ++i)
      if (!sol.entry_is_zero(i, k)) mu.add_scaled(hu[i].matrix(), sol.at(i, k));
    for (std::size_t i = 0; i < hz.size(); ++i)
      if (!sol.entry_is_zero(hu.size() + i, k)) mz.add_scaled(hz[i].matrix(), sol.at(hu.size() + i, k));
    out.push_back({x, y, ModuleMap(x.u, y.u, mu), ModuleMap(x.z, y.z, mz)});
  }
  return out;
}

Decision MVCategory::is_isomorphic(const Object& x, const Object& y) const {
  if (x.u.dim() != y.u.dim() || x.z.dim() != y.z.dim()) return Decision::No;
  if (x.u.dimension_vector() != y.u.dimension_vector() || x.z.dimension_vector() != y.z.dimension_vector())
    return Decision::No;
  if (x.alpha.rank() != y.alpha.rank() || x.beta.rank() != y.beta.rank()) return Decision::No;
  if (is_zero(x)) return Decision::Yes;
  if (scat_.is_isomorphic(x.u, y.u).decision == Decision::No) return Decision::No;
  if (rcat_.is_isomorphic(x.z, y.z).decision == Decision::No) return Decision::No;
  auto homs = hom_basis(x, y);
  if (homs.empty()) return Decision::No;
  const Field& f = d_->s.field();
  auto invertible = [&](const std::vector<Scalar>& c) {
    MVMorphism g = zero(x, y);
    for (std::size_t i = 0; i < homs.size(); ++i) g = add(g, scaled(homs[i], c[i]));
    return g.fu.is_iso() && g.fz.is_iso();
  };
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < homs.size(); ++i) c.emplace_back(f, dist(rng));
    if (invertible(c)) return Decision::Yes;
  }
  if (!f.is_prime()) return Decision::Unknown;
  const auto p = static_cast<std::uint64_t>(f.characteristic());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    total *= p;
    if (total > 4096) return Decision::Unknown;
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Scalar> c;
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < homs.size(); ++i, rest /= p) c.emplace_back(f, static_cast<std::int64_t>(rest % p));
    if (invertible(c)) return Decision::Yes;
  }
  return Decision::No;
}

std::string MVCategory::describe(const Object& x) const {
  auto dv = [](const Module& m) {
    std::string s = "(";
    auto v = m.dimension_vector();
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  return "U " + dv(x.u) + ", Z " + dv(x.z) + ", rank alpha " + std::to_string(x.alpha.rank()) + ", rank beta " +
         std::to_string(x.beta.rank());
}

MVCategory::Sum MVCategory::direct_sum(const Object& x, const Object& y) const {
  auto su = mod::direct_sum(d_->s, {x.u, y.u});
  auto sz = mod::direct_sum(d_->r, {x.z, y.z});
  Tensor ts = apply_f(*d_, su.module), tx = apply_f(*d_, x.u), ty = apply_f(*d_, y.u);
  Hom gs = apply_g(*d_, su.module), gx = apply_g(*d_, x.u), gy = apply_g(*d_, y.u);
  Matrix alpha = sz.injections[0].matrix() * x.alpha * f_matrix(*d_, ts, tx, su.projections[0].matrix()) +
                 sz.injections[1].matrix() * y.alpha * f_matrix(*d_, ts, ty, su.projections[1].matrix());
  Matrix beta = g_matrix(*d_, gx, gs, su.injections[0].matrix()) * x.beta * sz.projections[0].matrix() +
                g_matrix(*d_, gy, gs, su.injections[1].matrix()) * y.beta * sz.projections[1].matrix();
  MVObject s{su.module, sz.module, alpha, beta};
  Sum out{s, {}, {}};
  out.injections.push_back({x, s, su.injections[0], sz.injections[0]});
  out.injections.push_back({y, s, su.injections[1], sz.injections[1]});
  out.projections.push_back({s, x, su.projections[0], sz.projections[0]});
  out.projections.push_back({s, y, su.projections[1], sz.projections[1]});
  return out;
}

bool MVCategory::is_simple(const Object& x) const {
  if (x.u.is_zero()) return x.z.dim() == 1;
  if (x.u.dim() != 1) return false;
  return x.alpha.rank() == x.z.dim() && x.beta.rank() == x.z.dim();
}

// ---------------------------------------------------------------------------

MVRecollement mv_recollement(const MVData& d) {
  MVCategory c(d);
  recol::ModuleCategory cz(d.r), cu(d.s);
  const MVData& dd = c.data();
  const Field& f = dd.s.field();
  const Module zero_u = Module::zero(dd.s);
  MVRecollement r{c, cz, cu, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};

  auto alpha_map = [c](const MVObject& x) {
    return ModuleMap(apply_f(c.data(), x.u).module, x.z, x.alpha);
  };
  auto beta_map = [c](const MVObject& x) { return ModuleMap(x.z, apply_g(c.data(), x.u).module, x.beta); };
  auto i_push_obj = [zero_u, f](const Module& z) {
    return MVObject{zero_u, z, Matrix(f, z.dim(), 0), Matrix(f, 0, z.dim())};
  };
  auto j_shriek_obj = [c, f](const Module& y) {
    auto e = eps(c.data(), y);
    return MVObject{y, e.source(), eye(f, e.source().dim()), e.matrix()};
  };
  auto j_push_obj = [c, f](const Module& y) {
    auto e = eps(c.data(), y);
    return MVObject{y, e.target(), e.matrix(), eye(f, e.target().dim())};
  };

  r.i_pull.obj = [alpha_map](const MVObject& x) { return mod::cokernel(alpha_map(x)).module; };
  r.i_pull.map = [alpha_map](const MVMorphism& g) {
    auto qx = mod::cokernel(alpha_map(g.source));
    auto qy = mod::cokernel(alpha_map(g.target));
    return ModuleMap(qx.module, qy.module, qy.projection.matrix() * g.fz.matrix() * qx.section);
  };
  r.i_push.obj = i_push_obj;
  r.i_push.map = [i_push_obj, zero_u](const ModuleMap& g) {
    return MVMorphism{i_push_obj(g.source()), i_push_obj(g.target()), ModuleMap::identity(zero_u), g};
  };
  r.i_shriek.obj = [beta_map](const MVObject& x) { return mod::kernel(beta_map(x)).module; };
  r.i_shriek.map = [beta_map](const MVMorphism& g) {
    auto kx = mod::kernel(beta_map(g.source));
    auto ky = mod::kernel(beta_map(g.target));
    return ModuleMap(kx.module, ky.module,
                     mod::coordinates_in(ky.inclusion.matrix(), g.fz.matrix() * kx.inclusion.matrix()));
  };
  r.j_shriek.obj = j_shriek_obj;
  r.j_shriek.map = [c, j_shriek_obj](const ModuleMap& g) {
    return MVMorphism{j_shriek_obj(g.source()), j_shriek_obj(g.target()), g, apply_f(c.data(), g)};
  };
  r.j_pull.obj = [](const MVObject& x) { return x.u; };
  r.j_pull.map = [](const MVMorphism& g) { return g.fu; };
  r.j_push.obj = j_push_obj;
  r.j_push.map = [c, j_push_obj](const ModuleMap& g) {
    return MVMorphism{j_push_obj(g.source()), j_push_obj(g.target()), g, apply_g(c.data(), g)};
  };

  r.unit_i = [alpha_map, i_push_obj, zero_u](const MVObject& x) {
    auto q = mod::cokernel(alpha_map(x));
    return MVMorphism{x, i_push_obj(q.module), ModuleMap::zero(x.u, zero_u), q.projection};
  };
  r.counit_i = [f](const Module& z) {
    auto q = mod::cokernel(ModuleMap::zero(Module::zero(z.algebra()), z));
    return ModuleMap(q.module, z, q.section);
  };
  r.unit_i_shriek = [f](const Module& z) {
    auto k = mod::kernel(ModuleMap::zero(z, Module::zero(z.algebra())));
    return ModuleMap(z, k.module, mod::coordinates_in(k.inclusion.matrix(), eye(f, z.dim())));
  };
  r.counit_i_shriek = [beta_map, i_push_obj, zero_u](const MVObject& x) {
    auto k = mod::kernel(beta_map(x));
    return MVMorphism{i_push_obj(k.module), x, ModuleMap::zero(zero_u, x.u), k.inclusion};
  };
  r.unit_j_shriek = [](const Module& y) { return ModuleMap::identity(y); };
  r.counit_j = [](const Module& y) { return ModuleMap::identity(y); };
  r.counit_j_shriek = [j_shriek_obj](const MVObject& x) {
    auto s = j_shriek_obj(x.u);
    return MVMorphism{s, x, ModuleMap::identity(x.u), ModuleMap(s.z, x.z, x.alpha)};
  };
  r.unit_j = [j_push_obj](const MVObject& x) {
    auto t = j_push_obj(x.u);
    return MVMorphism{x, t, ModuleMap::identity(x.u), ModuleMap(x.z, t.z, x.beta)};
  };
  return r;
}

recol::IntermediateExtension<MVCategory> mv_intermediate(const MVCategory& c, const Module& y) {
  const Field& f = y.field();
  auto e = eps(c.data(), y);
  auto im = mod::image(e);
  MVObject lo{y, e.source(), eye(f, e.source().dim()), e.matrix()};
  MVObject hi{y, e.target(), e.matrix(), eye(f, e.target().dim())};
  MVObject mid{y, im.module, im.coimage.matrix(), im.inclusion.matrix()};
  auto id = ModuleMap::identity(y);
  return {mid, MVMorphism{lo, hi, id, e}, MVMorphism{lo, mid, id, im.coimage}, MVMorphism{mid, hi, id, im.inclusion}};
}

recol::Functor<MVCategory, recol::ModuleCategory> exact_retraction(const MVCategory&) {
  return {[](const MVObject& x) { return x.z; }, [](const MVMorphism& g) { return g.fz; }};
}

MVSimples mv_simples(const MVCategory& c) {
  MVSimples out;
  const auto& r = c.data().r;
  const auto& s = c.data().s;
  const Field& f = s.field();
  for (std::size_t v = 0; v < r.vertex_count(); ++v) {
    const Module& l = c.r_cat().simple(v);
    out.simples.push_back(
        {"i_*L(" + r.vertex_names()[v] + ")", MVObject{Module::zero(s), l, Matrix(f, l.dim(), 0), Matrix(f, 0, l.dim())}});
  }
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    out.simples.push_back({"j_!*L(" + s.vertex_names()[v] + ")", mv_intermediate(c, c.s_cat().simple(v)).object});
  for (std::size_t i = 0; i < out.simples.size(); ++i) {
    const auto& a = out.simples[i];
    auto bad = c.object_violation(a.object);
    if (!bad.empty()) out.failures.push_back(a.label + " is not an object: " + bad);
    if (!c.is_simple(a.object)) out.failures.push_back(a.label + " has a proper nonzero subobject");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& b = out.simples[j];
      auto dec = c.is_isomorphic(a.object, b.object);
      if (dec != Decision::No)
        out.failures.push_back(b.label + " and " + a.label + (dec == Decision::Yes ? " are isomorphic" : " are not separated"));
    }
  }
  return out;
}

MVSamples mv_samples(const MVRecollement& r) {
  MVSamples out;
  const auto& c = r.center;
  const auto& ra = c.data().r;
  const auto& sa = c.data().s;
  for (std::size_t v = 0; v < ra.vertex_count(); ++v) {
    out.left.push_back({"L(" + ra.vertex_names()[v] + ")", c.r_cat().simple(v)});
    out.left.push_back({"P(" + ra.vertex_names()[v] + ")", c.r_cat().projective(v)});
  }
  for (std::size_t v = 0; v < sa.vertex_count(); ++v) {
    out.right.push_back({"L(" + sa.vertex_names()[v] + ")", c.s_cat().simple(v)});
    out.right.push_back({"P(" + sa.vertex_names()[v] + ")", c.s_cat().projective(v)});
  }
  for (const auto& [l, z] : out.left) out.center.push_back({"i_*" + l, r.i_push(z)});
  for (const auto& [l, y] : out.right) {
    out.center.push_back({"j_!" + l, r.j_shriek(y)});
    out.center.push_back({"j_*" + l, r.j_push(y)});
    out.center.push_back({"j_!*" + l, mv_intermediate(c, y).object});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Bimodule scalar_bimodule(const Field& f, std::size_t left_dim, std::size_t right_dim, long value) {
  Bimodule b;
  b.dim = 1;
  b.left.assign(left_dim, Matrix(f, {{value}}));
  b.right.assign(right_dim, Matrix(f, {{value}}));
  return b;
}

Bimodule zero_bimodule(const Field& f, std::size_t left_dim, std::size_t right_dim) {
  Bimodule b;
  b.left.assign(left_dim, Matrix(f, 0, 0));
  b.right.assign(right_dim, Matrix(f, 0, 0));
  return b;
}

/// 1 on the idempotent of `v`, 0 on every other basis element.
std::vector<Matrix> vertex_character(const Algebra& a, std::size_t v) {
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < a.dim(); ++j) out.push_back(Matrix(a.field(), {{j == a.idempotents()[v] ? 1L : 0L}}));
  return out;
}

}  // namespace

const std::vector<std::string>& mv_fixture_names() {
  static const std::vector<std::string> names{"zero", "id", "null", "dual", "simple"};
  return names;
}

MVData mv_fixture(const std::string& name, const Field& f) {
  MVData d;
  if (name == "zero") {
    d.r = alg::fixture_algebra("A2", f);
    d.s = ground_algebra(f);
    d.m = zero_bimodule(f, d.s.dim(), d.r.dim());
    d.n = zero_bimodule(f, d.r.dim(), d.s.dim());
    d.theta = Matrix(f, d.s.dim(), 0);
  } else if (name == "id" || name == "null") {
    d.r = ground_algebra(f);
    d.s = ground_algebra(f);
    d.m = scalar_bimodule(f, 1, 1, 1);
    d.n = scalar_bimodule(f, 1, 1, 1);
    d.theta = Matrix(f, {{name == "id" ? 1L : 0L}});
  } else if (name == "dual") {
    d.r = ground_algebra(f);
    d.s = alg::fixture_algebra("DUAL", f);
    const std::size_t n = d.s.dim();
    d.m.dim = d.n.dim = n;
    for (std::size_t k = 0; k < n; ++k) {
      d.m.left.push_back(d.s.left_mult(k));
      d.n.right.push_back(d.s.right_mult(k));
    }
    d.m.right = {eye(f, n)};
    d.n.left = {eye(f, n)};
    d.theta = Matrix(f, n, 0);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) d.theta = d.theta.hcat(d.s.multiply(d.s.basis_vector(l), d.s.basis_vector(j)));
  } else if (name == "simple") {
    d.r = alg::fixture_algebra("A2", f);
    d.s = ground_algebra(f);
    const std::size_t v = d.r.vertex_index("1");
    d.m.dim = d.n.dim = 1;
    d.m.left = {eye(f, 1)};
    d.m.right = vertex_character(d.r, v);
    d.n.left = vertex_character(d.r, v);
    d.n.right = {eye(f, 1)};
    d.theta = Matrix(f, {{1}});
  } else {
    throw MVError(MVError::Code::InvalidData, "unknown gluing fixture '" + name + "'");
  }
  return d;
}

}  // namespace stratakit::mv

namespace stratakit::mv {

namespace {

Matrix stacked(const MVMorphism& f) { return f.fu.matrix().vec().vcat(f.fz.matrix().vec()); }

/// Random element of {g in span(homs) : constraint(g) = 0}; zero when homs is empty.
MVMorphism random_solution(const MVCategory& c, mod::Sampler& rng, const MVObject& x, const MVObject& y,
                           const std::vector<MVMorphism>& homs,
                           const std::function<MVMorphism(const MVMorphism&)>& constraint) {
  const Field& f = c.data().s.field();
  MVMorphism g = c.zero(x, y);
  if (homs.empty()) return g;
  Matrix m;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    Matrix col = stacked(constraint(homs[i]));
    m = i == 0 ? col : m.hcat(col);
  }
  Matrix sol = m.null_space();
  Matrix coeff = sol * rng.matrix(f, sol.cols(), 1);
  for (std::size_t i = 0; i < homs.size(); ++i)
    if (!coeff.entry_is_zero(i, 0)) g = c.add(g, c.scaled(homs[i], coeff.at(i, 0)));
  return g;
}

}  // namespace

ProbeReport universal_property_probes(const MVCategory& c, std::size_t count, std::uint64_t seed) {
  ProbeReport rep;
  mod::Sampler rng(seed);
  auto r = mv_recollement(c.data());
  std::vector<MVObject> pool;
  for (auto& [l, x] : mv_samples(r).center) pool.push_back(x);
  for (int i = 0; i < 3; ++i) {
    Module y = rng.module(c.s_cat(), 4);
    pool.push_back(r.j_shriek(y));
    pool.push_back(r.j_push(y));
    pool.push_back(mv_intermediate(c, y).object);
    pool.push_back(r.i_push(rng.module(c.r_cat(), 4)));
  }
  const std::size_t base = pool.size();
  for (int i = 0; i < 4; ++i) pool.push_back(c.direct_sum(pool[rng.below(base)], pool[rng.below(base)]).object);
  auto retract = exact_retraction(c);

  for (std::size_t p = 0; p < count; ++p) {
    ++rep.probes;
    const std::string tag = "probe " + std::to_string(p) + ": ";
    try {
      const MVObject& x = pool[rng.below(pool.size())];
      const MVObject& y = pool[rng.below(pool.size())];
      const MVObject& w = pool[rng.below(pool.size())];
      MVMorphism f = random_solution(c, rng, x, y, c.hom_basis(x, y), [&](const MVMorphism&) { return c.zero(x, y); });

      auto k = c.kernel(f);
      if (auto v = c.object_violation(k.object); !v.empty()) throw std::runtime_error("kernel object: " + v);
      if (auto v = c.morphism_violation(k.map); !v.empty()) throw std::runtime_error("kernel map: " + v);
      if (!c.is_mono(k.map) || !c.is_zero(c.compose(f, k.map))) throw std::runtime_error("kernel map is not a mono killed by f");
      MVMorphism g = random_solution(c, rng, w, x, c.hom_basis(w, x), [&](const MVMorphism& h) { return c.compose(f, h); });
      MVMorphism u = c.factor_through_mono(k.map, g);
      if (auto v = c.morphism_violation(u); !v.empty()) throw std::runtime_error("kernel factorisation: " + v);
      if (!c.equal(c.compose(k.map, u), g)) throw std::runtime_error("kernel factorisation does not recover g");

      auto q = c.cokernel(f);
      if (auto v = c.object_violation(q.object); !v.empty()) throw std::runtime_error("cokernel object: " + v);
      if (auto v = c.morphism_violation(q.map); !v.empty()) throw std::runtime_error("cokernel map: " + v);
      if (!c.is_epi(q.map) || !c.is_zero(c.compose(q.map, f))) throw std::runtime_error("cokernel map is not an epi killing f");
      MVMorphism h = random_solution(c, rng, y, w, c.hom_basis(y, w), [&](const MVMorphism& e) { return c.compose(e, f); });
      MVMorphism v2 = c.factor_through_epi(q.map, h);
      if (auto v = c.morphism_violation(v2); !v.empty()) throw std::runtime_error("cokernel factorisation: " + v);
      if (!c.equal(c.compose(v2, q.map), h)) throw std::runtime_error("cokernel factorisation does not recover h");

      auto kz = mod::kernel(f.fz);
      auto cz = mod::cokernel(f.fz);
      if (retract(k.object).dim() != kz.module.dim() || !(retract(k.map).matrix() == kz.inclusion.matrix()))
        throw std::runtime_error("i^{!*} does not send the kernel to ker f_Z");
      if (retract(q.object).dim() != cz.module.dim() || !(retract(q.map).matrix() == cz.projection.matrix()))
        throw std::runtime_error("i^{!*} does not send the cokernel to cok f_Z");
      if (pool.size() < 40) {
        pool.push_back(k.object);
        pool.push_back(q.object);
      }
    } catch (const std::exception& e) {
      rep.failures.push_back(tag + e.what());
    }
  }
  return rep;
}

MVSuiteReport mv_suite(const MVData& d, std::uint64_t seed, std::size_t probes) {
  MVSuiteReport rep;
  auto r = mv_recollement(d);
  auto samples = mv_samples(r);
  rep.recollement = recol::verify_recollement(r, samples.center, samples.left, samples.right);
  mod::Sampler rng(seed);
  std::vector<std::pair<std::string, Module>> ys = samples.right;
  for (int i = 0; i < 3; ++i) ys.push_back({"random " + std::to_string(i), rng.module(r.center.s_cat(), 4)});
  for (const auto& [label, y] : ys) {
    ++rep.intermediate_checked;
    try {
      auto table = mv_intermediate(r.center, y);
      auto generic = recol::intermediate_extension(r, y);
      if (auto v = r.center.object_violation(table.object); !v.empty())
        rep.intermediate_failures.push_back(label + ": table object invalid: " + v);
      else if (r.center.is_isomorphic(table.object, generic.object) != Decision::Yes)
        rep.intermediate_failures.push_back(label + ": table and generic j_!* differ");
    } catch (const std::exception& e) {
      rep.intermediate_failures.push_back(label + ": " + e.what());
    }
  }
  rep.simples = mv_simples(r.center);
  rep.probes = universal_property_probes(r.center, probes, seed);
  return rep;
}

}  // namespace stratakit::mv
