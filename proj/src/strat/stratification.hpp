#pragma once

#include "recol/idempotent.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>

namespace stratakit::strat {

using alg::Algebra;
using la::Matrix;
using mod::ModCat;
using mod::Module;
using mod::ModuleMap;
using recol::Decision;

class StratError : public std::runtime_error {
 public:
  enum class Code { InvalidPoset, InvalidLabeling, Inconsistent, SearchFailure, NonTermination, OracleUnavailable };
  StratError(Code c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Code code() const { return code_; }

 private:
  Code code_;
};
std::string to_string(StratError::Code c);

/// Lower sets and other element subsets as bit masks.
using Mask = std::uint32_t;

/// Finite poset; `leq` pairs are closed reflexively and transitively.
class Poset {
 public:
  Poset() = default;
  Poset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& leq);
  /// Chain elements[0] < elements[1] < ...
  static Poset chain(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t index(const std::string& e) const;
  bool le(std::size_t a, std::size_t b) const { return le_[a][b]; }
  bool lt(std::size_t a, std::size_t b) const { return a != b && le_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const { return le_[a][b] || le_[b][a]; }

  Mask all() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }
  bool is_lower(Mask m) const;
  Mask down(std::size_t a) const;       ///< {b <= a}
  Mask strict_down(std::size_t a) const;
  bool is_maximal(std::size_t a, Mask m) const;
  /// All lower sets, ordered by size then mask.
  std::vector<Mask> lower_sets() const;
  /// Deterministic linear extension: repeatedly take the smallest-index minimal element.
  std::vector<std::size_t> linear_extension() const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> le_;
};

enum class Sign { Plus, Minus };
char to_char(Sign s);
using SignMap = std::vector<Sign>;  ///< indexed by poset element
/// All 2^|poset| sign functions, Plus < Minus lexicographically from element 0.
std::vector<SignMap> all_sign_maps(std::size_t n);
std::string describe(const SignMap& eps);

/// The algebra A_L = A / A e_{not L} A of a lower set L.
struct LowerSetAlgebra {
  Mask mask = 0;
  alg::QuotientAlgebra quotient;
  ModCat cat;
  std::vector<std::size_t> vertices;  ///< vertex of A for each vertex of A_L
};

/// Recollement A_{L - lambda} -> A_L -> A_lambda for lambda maximal in L.
struct Layer {
  Mask lower = 0;
  std::size_t element = 0;
  std::shared_ptr<const LowerSetAlgebra> center;
  recol::IdempotentRecollement rec;
  std::vector<std::size_t> u_vertices;  ///< vertices of A (labelled lambda), in stratum order
};

class Stratification {
 public:
  /// rho[v] is the poset element of vertex v.
  Stratification(const Algebra& a, Poset poset, std::vector<std::size_t> rho, std::optional<SignMap> eps = {});

  const Algebra& algebra() const { return st_->cat.algebra(); }
  const ModCat& modcat() const { return st_->cat; }
  const Poset& poset() const { return st_->poset; }
  const std::vector<std::size_t>& rho() const { return st_->rho; }
  std::size_t rho(std::size_t v) const { return st_->rho[v]; }
  const std::optional<SignMap>& epsilon() const { return st_->eps; }
  std::size_t vertex_count() const { return st_->rho.size(); }
  std::string vertex_name(std::size_t v) const { return algebra().vertex_names()[v]; }
  std::string element_name(std::size_t e) const { return poset().elements()[e]; }
  /// Elements actually used by some vertex.
  Mask used() const;

  std::shared_ptr<const LowerSetAlgebra> lower(Mask m) const;
  std::shared_ptr<const Layer> layer(Mask m, std::size_t element) const;
  /// Layer at the principal lower set of `element`.
  std::shared_ptr<const Layer> stratum_layer(std::size_t element) const { return layer(poset().down(element), element); }
  const Algebra& stratum_algebra(std::size_t element) const { return stratum_layer(element)->rec.r.right.algebra(); }
  /// Vertex index of v inside its stratum algebra.
  std::size_t stratum_vertex(std::size_t v) const;

  /// Module over A_from viewed over A_to, for from contained in to.
  Module transfer(const Module& m, Mask from, Mask to) const;
  ModuleMap transfer(const ModuleMap& f, Mask from, Mask to) const;
  Module inflate(const Module& m, Mask from) const { return transfer(m, from, poset().all()); }
  ModuleMap inflate(const ModuleMap& f, Mask from) const { return transfer(f, from, poset().all()); }
  /// Vertex index of A-vertex v inside A_L (v must be labelled in L).
  std::size_t local_vertex(Mask m, std::size_t v) const;

  /// Every (lower set, maximal element) pair with nonempty lower set.
  std::vector<std::pair<Mask, std::size_t>> layer_keys() const;

 private:
  struct State {
    explicit State(const Algebra& a) : cat(a) {}
    ModCat cat;
    Poset poset;
    std::vector<std::size_t> rho;
    std::optional<SignMap> eps;
    mutable std::mutex mu;
    mutable std::map<Mask, std::shared_ptr<const LowerSetAlgebra>> lowers;
    mutable std::map<std::pair<Mask, std::size_t>, std::shared_ptr<const Layer>> layers;
  };
  std::shared_ptr<State> st_;
};

/// (S1)-(S3) on one stratification; each entry is (condition, witness).
struct AxiomReport {
  std::vector<std::pair<std::string, std::string>> failures;
  std::size_t layers_checked = 0;
  bool ok() const { return failures.empty(); }
};
AxiomReport check_stratification(const Stratification& s);

}  // namespace stratakit::strat
