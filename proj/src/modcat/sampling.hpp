#pragma once

#include "modcat/modcat.hpp"

#include <random>

namespace stratakit::mod {

/// Seeded generators for property probes.  All draws go through one engine.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  std::size_t below(std::size_t n) { return n ? rng_() % n : 0; }
  la::Matrix matrix(const la::Field& f, std::size_t r, std::size_t c, long lo = -2, long hi = 2);

  /// Quotient of a sum of one or two indecomposable projectives, 0 < dim <= max_dim.
  Module module(const ModCat& cat, std::size_t max_dim = 6);
  /// Random combination of a Hom basis; may be zero.
  ModuleMap map(const Module& m, const Module& n);
  /// Inclusion of the submodule generated by a random vector.
  ModuleMap mono_into(const Module& m);
  /// Projection onto the quotient by a random generated submodule.
  ModuleMap epi_from(const Module& m);

 private:
  std::mt19937_64 rng_;
};

}  // namespace stratakit::mod
