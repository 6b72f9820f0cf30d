#pragma once

#include "algcore/quiver.hpp"

namespace stratakit::alg {

/// Bundled bound-quiver algebras by name: "A2" (1->2), "A3" (1->2->3),
/// "NAK" (1<->2 with rad^2 = 0), "DUAL" (loop x, x^2 = 0), "KRO" (loop x at 1
/// and arrows a, c : 1 -> 2 with x^2 = xa = 0).
Presentation fixture_presentation(const std::string& name, const Field& f = Field::gf(2));
Algebra fixture_algebra(const std::string& name, const Field& f = Field::gf(2));
const std::vector<std::string>& fixture_names();

}  // namespace stratakit::alg
