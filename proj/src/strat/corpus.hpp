#pragma once

#include "strat/stratification.hpp"

namespace stratakit::strat {

struct NamedStratification {
  std::string name;  ///< e.g. "A2:1<2", "A3:{1,3}<{2}", "NAK:trivial"
  std::string fixture;
  Stratification strat;
};

/// Stratifications of the bundled fixtures: every vertex in its own element
/// under each total order, the one-element poset, and two coarse labelings of A3.
std::vector<NamedStratification> fixture_stratifications(const la::Field& f = la::Field::gf(2));

/// Every labeling of the algebra's vertices by a chain: ordered set partitions.
std::vector<NamedStratification> chain_labelings(const std::string& fixture, const la::Field& f = la::Field::gf(2));

}  // namespace stratakit::strat
