#pragma once

#include "algcore/quiver.hpp"
#include "exactla/matrix.hpp"
#include "modcat/modcat.hpp"
#include "modcat/sampling.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace stratakit::testing {

inline la::Matrix random_matrix(const la::Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng,
                                long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  la::Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

/// Every vector of F_p^n as an n x 1 column, for small p^n.
inline void for_each_vector(const la::Field& f, std::size_t n,
                            const std::function<void(const la::Matrix&)>& visit) {
  const long p = f.characteristic();
  std::vector<long> digits(n, 0);
  while (true) {
    la::Matrix v(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) v.set(i, 0, digits[i]);
    visit(v);
    std::size_t k = 0;
    while (k < n && ++digits[k] == p) digits[k++] = 0;
    if (k == n) break;
  }
}

/// Terms written as {coeff, "a*b"}.
using Rel = std::vector<std::pair<long, std::string>>;

inline alg::Presentation presentation(const la::Field& f, std::vector<std::string> vertices,
                                      std::vector<alg::Arrow> arrows, const std::vector<Rel>& rels = {}) {
  alg::Presentation p;
  p.field = f;
  p.quiver = {std::move(vertices), std::move(arrows)};
  for (const auto& r : rels) {
    alg::Relation rel;
    for (const auto& [c, path] : r) {
      alg::RelationTerm t{la::Scalar(f, c), {}};
      std::stringstream ss(path);
      std::string a;
      while (std::getline(ss, a, '*')) t.path.push_back(a);
      rel.terms.push_back(t);
    }
    p.relations.push_back(rel);
  }
  return p;
}

inline alg::Algebra quiver_algebra(const la::Field& f, std::vector<std::string> vertices,
                                   std::vector<alg::Arrow> arrows, const std::vector<Rel>& rels = {}) {
  return alg::build_bound_quiver_algebra(presentation(f, std::move(vertices), std::move(arrows), rels));
}

inline mod::Module random_module(const mod::ModCat& cat, std::mt19937_64& rng, std::size_t max_dim = 6) {
  mod::Sampler s(rng());
  return s.module(cat, max_dim);
}

inline mod::ModuleMap random_map(const mod::Module& m, const mod::Module& n, std::mt19937_64& rng) {
  mod::Sampler s(rng());
  return s.map(m, n);
}

}  // namespace stratakit::testing
