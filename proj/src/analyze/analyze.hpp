#pragma once

#include "strat/synthesis.hpp"

#include <optional>

namespace stratakit::analyze {

using mod::Decision;
using mod::Module;
using mod::ModuleMap;
using strat::Mask;
using strat::Sign;
using strat::SignMap;
using strat::Stratification;

class AnalysisError : public std::runtime_error {
 public:
  enum class Code { RouteDisagreement, Internal };
  AnalysisError(Code c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

enum class Side { JShriek, JPush };
std::string to_string(Side s);

struct ExactnessResult {
  std::size_t element = 0;
  Side side = Side::JShriek;
  bool exact = false;
  /// Positive: the bimodule is its own projective cover.  Negative: the
  /// stratum sequence whose image loses exactness.
  std::string certificate;
};

/// j_! (resp. j_*) of the stratum at `element`, computed at the principal lower set.
ExactnessResult exactness_check(const Stratification& s, std::size_t element, Side side);

struct ExtComparison {
  std::size_t degree = 0;
  std::size_t source_dim = 0;  ///< over the lower-set algebra
  std::size_t target_dim = 0;  ///< over the ambient lower-set algebra
  std::size_t rank = 0;
  bool iso() const { return source_dim == target_dim && rank == source_dim; }
};

/// Ext^n_{A_from}(X, Y) -> Ext^n_{A_to}(i_*X, i_*Y) by lifting the identity of
/// i_*X to a chain map between resolutions.  Throws if n <= 1 and it is not iso.
ExtComparison ext_comparison(const Stratification& s, Mask from, Mask to, const Module& x, const Module& y, std::size_t n);
inline ExtComparison ext_comparison(const Stratification& s, Mask from, const Module& x, const Module& y, std::size_t n) {
  return ext_comparison(s, from, s.poset().all(), x, y, n);
}

struct HomologicalWitness {
  Mask lower = 0;
  std::size_t element = 0;
  std::size_t x = 0, y = 0;  ///< vertices of A whose Z-simples are compared
  ExtComparison comparison;
};

struct HomologicalResult {
  std::size_t k = 0;
  bool holds = true;
  std::optional<HomologicalWitness> witness;
  std::size_t comparisons = 0;
  /// Aux check Ext^n(i_*P, i_*I) = 0, 1 <= n <= n_max; unset when not requested.
  std::optional<bool> auxiliary;
  std::string justification;
};

HomologicalResult is_k_homological(const Stratification& s, std::size_t k, std::optional<std::size_t> aux_n_max = {});

enum class Route { Theorem, DirectDelta, DirectNabla };
std::string to_string(Route r);

struct EpsResult {
  Route route = Route::Theorem;
  Decision verdict = Decision::Unknown;
  std::vector<ExactnessResult> exactness;              ///< theorem route
  std::optional<HomologicalResult> homological;        ///< theorem route
  std::vector<strat::FiltrationResult> filtrations;    ///< direct routes, per vertex
  std::vector<std::string> witnesses;                  ///< reasons for No / Unknown
};

EpsResult is_epsilon_stratified(const Stratification& s, const SignMap& eps, Route route,
                                const strat::SearchOptions& opt = {});

struct EpsAgreement {
  SignMap eps;
  std::vector<EpsResult> routes;
  bool agree() const;
  Decision verdict() const;  ///< shared verdict, Unknown on disagreement
};

/// All three routes; throws RouteDisagreement when definite verdicts differ.
EpsAgreement epsilon_all_routes(const Stratification& s, const SignMap& eps, const strat::SearchOptions& opt = {},
                                bool throw_on_disagreement = true);

struct SplitResult {
  bool exact = false;
  std::optional<mod::ShortExact> ses;  ///< 0 -> j_!j^*P -> P -> i_*i^*P -> 0
  std::string obstruction;
};

SplitResult lemma_split_check(const Stratification& s, std::size_t element, const Module& p);

struct BsEntry {
  std::size_t b = 0, c = 0, n = 0, dim = 0;
};

struct BsTable {
  std::size_t n_max = 0;
  std::vector<BsEntry> entries;
  /// Entries breaking: n = 0 gives delta_{bc}, n >= 1 gives 0.
  std::vector<BsEntry> violations() const;
};

BsTable bs_vanishing_check(const Stratification& s, const strat::StandardFamily& f, const SignMap& eps, std::size_t n_max);

struct HwRoute {
  Decision verdict = Decision::Unknown;
  std::vector<std::string> witnesses;
};

struct HwResult {
  HwRoute structure;  ///< one-dimensional strata and 2-homological
  HwRoute axioms;     ///< (HW1)-(HW4)
  bool agree() const { return structure.verdict == axioms.verdict; }
  Decision verdict() const { return agree() ? structure.verdict : Decision::Unknown; }
};

HwResult is_highest_weight(const Stratification& s, const strat::SearchOptions& opt = {}, bool throw_on_disagreement = true);

}  // namespace stratakit::analyze
