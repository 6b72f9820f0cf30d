#include "modcat/sampling.hpp"

namespace stratakit::mod {

la::Matrix Sampler::matrix(const la::Field& f, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  la::Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng_));
  return m;
}

Module Sampler::module(const ModCat& cat, std::size_t max_dim) {
  const auto& a = cat.algebra();
  if (a.vertex_count() == 0) return Module::zero(a);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::size_t> vs;
    std::size_t parts = 1 + below(2);
    for (std::size_t i = 0; i < parts; ++i) vs.push_back(below(a.vertex_count()));
    auto p = cat.projective_sum(vs);
    la::Matrix gens = matrix(a.field(), p.module.dim(), below(3), -1, 1);
    auto q = quotient(p.module, generated_subspace(p.module, gens));
    if (q.module.dim() > 0 && q.module.dim() <= max_dim) return q.module;
  }
  return cat.simple(below(a.vertex_count()));
}

ModuleMap Sampler::map(const Module& m, const Module& n) {
  la::Matrix x(m.field(), n.dim(), m.dim());
  std::uniform_int_distribution<long> d(-2, 2);
  for (const auto& f : hom_basis(m, n)) x.add_scaled(f.matrix(), la::Scalar(m.field(), d(rng_)));
  return ModuleMap(m, n, x);
}

ModuleMap Sampler::mono_into(const Module& m) {
  return generated_submodule(m, matrix(m.field(), m.dim(), 1, -1, 1)).inclusion;
}

ModuleMap Sampler::epi_from(const Module& m) {
  return quotient(m, generated_subspace(m, matrix(m.field(), m.dim(), 1, -1, 1))).projection;
}

}  // namespace stratakit::mod
