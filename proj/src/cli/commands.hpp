#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>

namespace stratakit::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { Ok = 0, SchemaFailure = 1, InvariantFailure = 2, OracleRefused = 3 };

struct CommandResult {
  int exit_code = Ok;
  Json report;
};

struct CheckOptions {
  std::string mode = "recollement";  ///< recollement|simples|porism|eps|hw|homological
  std::size_t n = 2;
  bool oracle = false;
  std::uint64_t seed = 0;
  bool timing = false;
};

const char* version();

/// `text` is the file contents.
CommandResult cmd_validate(const std::string& text, bool timing = false);
CommandResult cmd_check(const std::string& text, const CheckOptions& opt);
/// Empty filter runs everything; otherwise entries carrying the tag.
CommandResult cmd_corpus(const std::string& filter, std::uint64_t seed, bool timing = false);

/// Human-readable rendering of any report.
std::string render_text(const Json& report);
std::string render_json(const Json& report);

}  // namespace stratakit::cli
