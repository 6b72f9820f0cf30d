#pragma once

#include "strat/filtration.hpp"
#include "strat/standard.hpp"
#include "modcat/homological.hpp"

namespace stratakit::strat {

struct SynthesisStep {
  Mask lower = 0;
  std::size_t element = 0;  ///< element added at this layer
  std::string stage;        ///< "start", "stratum", "all-simples"
  std::size_t iteration = 0;
  std::vector<std::size_t> multiplicities;  ///< dim Ext^1(current, L) per target simple
  std::size_t dim_before = 0, dim_after = 0;
};

struct SynthesisResult {
  std::size_t vertex = 0;
  Module projective;  ///< over A
  std::vector<SynthesisStep> audit;
  std::vector<std::string> failures;  ///< failed Step 1/3/4 or final checks
  Decision matches = Decision::Unknown;  ///< iso to the projective of A at `vertex`
  bool ok() const { return failures.empty() && matches == Decision::Yes; }
};

/// Builds P(t) layer by layer over a linear extension of the poset by
/// iterated universal extensions.  Throws NonTermination past `max_iterations`
/// extensions in one layer.
SynthesisResult synthesize_projective_cover(const Stratification& s, std::size_t t, std::size_t max_iterations = 64);

struct PorismResult {
  std::size_t vertex = 0;
  mod::ShortExact ses;  ///< 0 -> Q(b) -> P(b) -> Delta(b) -> 0
  Allowed allowed;      ///< Delta(b') with rho(b') > rho(b)
  FiltrationResult filtration;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && filtration.found(); }
};

PorismResult porism_check(const Stratification& s, const StandardFamily& f, std::size_t b, const SearchOptions& opt = {});

}  // namespace stratakit::strat
