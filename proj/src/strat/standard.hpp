#pragma once

#include "strat/stratification.hpp"

namespace stratakit::strat {

/// Standard, costandard and proper variants of one vertex, as A-modules.
struct StandardObjects {
  std::size_t vertex = 0;
  Module delta, delta_bar, simple, nabla_bar, nabla;
  ModuleMap delta_to_bar;    ///< Delta -> proper Delta, epi
  ModuleMap bar_to_simple;   ///< proper Delta -> L, epi
  ModuleMap simple_to_bar;   ///< L -> proper nabla, mono
  ModuleMap bar_to_nabla;    ///< proper nabla -> nabla, mono
};

class StandardFamily {
 public:
  explicit StandardFamily(const Stratification& s);

  const StandardObjects& at(std::size_t v) const { return objs_.at(v); }
  std::size_t size() const { return objs_.size(); }
  const Module& delta_eps(std::size_t v, const SignMap& eps) const;
  const Module& nabla_eps(std::size_t v, const SignMap& eps) const;

 private:
  Stratification s_;
  std::vector<StandardObjects> objs_;
};

/// Does every Delta_eps have simple top L(b), every nabla_eps simple socle
/// L(b), and do Homs vanish downwards?  Entries are failure descriptions.
std::vector<std::string> check_standard_family(const Stratification& s, const StandardFamily& f, const SignMap& eps);

struct SimpleEntry {
  std::size_t vertex = 0;
  std::size_t element = 0;
  std::size_t stratum_vertex = 0;
  Module simple;          ///< j_!* of the stratum simple, inflated to A
  Decision matches = Decision::Unknown;  ///< iso to the simple of A at `vertex`
};

struct SimpleClassification {
  std::vector<SimpleEntry> entries;
  bool complete = false;     ///< one entry per vertex, each certified
  bool irredundant = false;  ///< pairwise non-isomorphic
  std::vector<std::string> failures;
  bool ok() const { return complete && irredundant && failures.empty(); }
};

SimpleClassification classify_simples(const Stratification& s);

}  // namespace stratakit::strat
