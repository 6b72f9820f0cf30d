#pragma once

#include "strat/stratification.hpp"

namespace stratakit::strat {

enum class LayerMode { Exact, Quotient };
std::string to_string(LayerMode m);

using Allowed = std::vector<std::pair<std::string, Module>>;

struct SearchOptions {
  /// Exhaust every Hom-space element over GF(p); refused over Q.
  bool oracle = false;
  std::size_t max_enumeration = std::size_t{1} << 16;
  std::size_t node_limit = 200000;
  std::uint64_t seed = 0;
};

struct FiltrationLayer {
  std::size_t allowed = 0;  ///< index into the allowed list
  std::string name;
  /// Exact mode: isomorphism layer -> allowed object.  Quotient mode:
  /// surjection allowed object -> layer.  Layers use the canonical quotient basis.
  Matrix map;
};

/// 0 = M_0 < M_1 < ... < M_n = m; chain[i] holds basis columns of M_i in m.
struct FiltrationCertificate {
  Module module;
  LayerMode mode = LayerMode::Exact;
  std::vector<Matrix> chain;
  std::vector<FiltrationLayer> layers;  ///< layers[i] is M_{i+1} / M_i
};

struct FiltrationResult {
  std::optional<FiltrationCertificate> certificate;
  bool exhaustive = true;  ///< a missing certificate is a proof of absence
  std::size_t nodes = 0;
  bool found() const { return certificate.has_value(); }
};

FiltrationResult filtration_search(const ModCat& cat, const Module& m, const Allowed& allowed, LayerMode mode,
                                   const SearchOptions& opt = {});

/// Module M_{i+1} / M_i of a certificate.
Module filtration_layer(const FiltrationCertificate& c, std::size_t i);

/// Independent re-check; returns a list of problems (empty = valid).
std::vector<std::string> verify_certificate(const FiltrationCertificate& c, const Allowed& allowed);

}  // namespace stratakit::strat
