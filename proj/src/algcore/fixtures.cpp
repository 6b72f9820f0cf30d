#include "algcore/fixtures.hpp"

namespace stratakit::alg {

namespace {

RelationTerm monomial(const Field& f, std::vector<std::string> path) { return {Scalar::one(f), std::move(path)}; }

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"A2", "A3", "NAK", "DUAL", "KRO"};
  return names;
}

Presentation fixture_presentation(const std::string& name, const Field& f) {
  Presentation p;
  p.field = f;
  if (name == "A2") {
    p.quiver = {{"1", "2"}, {{"a", "1", "2"}}};
  } else if (name == "A3") {
    p.quiver = {{"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}};
  } else if (name == "NAK") {
    p.quiver = {{"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}};
    p.relations = {{{monomial(f, {"a", "b"})}}, {{monomial(f, {"b", "a"})}}};
  } else if (name == "DUAL") {
    p.quiver = {{"1"}, {{"x", "1", "1"}}};
    p.relations = {{{monomial(f, {"x", "x"})}}};
  } else if (name == "KRO") {
    p.quiver = {{"1", "2"}, {{"x", "1", "1"}, {"a", "1", "2"}, {"c", "1", "2"}}};
    p.relations = {{{monomial(f, {"x", "x"})}}, {{monomial(f, {"x", "a"})}}};
  } else {
    throw AlgebraError(AlgebraError::Code::InvalidData, "unknown fixture '" + name + "'");
  }
  return p;
}

Algebra fixture_algebra(const std::string& name, const Field& f) {
  return build_bound_quiver_algebra(fixture_presentation(name, f));
}

}  // namespace stratakit::alg
