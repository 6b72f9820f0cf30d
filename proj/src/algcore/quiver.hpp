#pragma once

#include "algcore/algebra.hpp"

namespace stratakit::alg {

struct Arrow {
  std::string name;
  std::string from;
  std::string to;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
};

struct RelationTerm {
  Scalar coeff;
  std::vector<std::string> path;  ///< arrow names, composed left to right
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct Presentation {
  Field field = Field::gf(2);
  Quiver quiver;
  std::vector<Relation> relations;
};

struct BuildOptions {
  std::size_t max_length = 32;  ///< L_max
  std::size_t max_paths = 4096;
};

/// Names unique, endpoints exist.  Throws AlgebraError(InvalidQuiver).
void check_quiver(const Quiver& q);

/// kQ/I for an admissible ideal I.  The truncations kQ/(I + J^M) are built for
/// M = 1, 2, ... until J^{M-1} vanishes in kQ/(I + J^M); the basis consists of
/// path classes, shortest first, labelled "e<v>" for vertices and "a*b" for paths.
Algebra build_bound_quiver_algebra(const Presentation& p, const BuildOptions& opt = {});

}  // namespace stratakit::alg
