#pragma once

#include "algcore/quiver.hpp"
#include "mvglue/mv.hpp"
#include "strat/stratification.hpp"

#include <optional>
#include <string>

namespace stratakit::cli {

/// Malformed JSON, unknown or missing keys, wrong types.  Maps to exit code 1.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StratSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
  std::vector<std::pair<std::string, std::string>> rho;  ///< vertex -> element, file order
  std::optional<std::vector<std::pair<std::string, std::string>>> epsilon;  ///< element -> "+"/"-"
};

struct BimoduleSpec {
  std::size_t dim = 0;
  std::vector<la::Matrix> left, right;
};

struct MVSpec {
  alg::Presentation r, s;
  BimoduleSpec m, n;
  std::vector<std::vector<la::Scalar>> theta;  ///< rows
};

struct SpecFile {
  alg::Presentation presentation;
  std::optional<StratSpec> stratification;
  std::optional<MVSpec> mv;
  std::string input_hash;  ///< "sha256:" of the canonical (sorted-key) JSON
};

/// Throws SchemaError.
SpecFile parse_spec(const std::string& text);

struct BuiltSpec {
  alg::Algebra algebra;
  std::optional<strat::Stratification> stratification;
  std::optional<mv::MVData> mv;
};

/// Builds and validates everything; throws AlgebraError, StratError or
/// MVError on invariant failures.
BuiltSpec build_spec(const SpecFile& spec);

std::string sha256_hex(const std::string& bytes);

}  // namespace stratakit::cli
