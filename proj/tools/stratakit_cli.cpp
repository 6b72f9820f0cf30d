#include "CLI11.hpp"
#include "stratakit/stratakit.h"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct ReportDeleter {
  void operator()(sk_report* r) const { sk_report_free(r); }
};
struct SpecDeleter {
  void operator()(sk_spec* s) const { sk_spec_free(s); }
};
using Report = std::unique_ptr<sk_report, ReportDeleter>;
using Spec = std::unique_ptr<sk_spec, SpecDeleter>;

int clamp_exit(sk_status s) { return s <= SK_ORACLE_REFUSED ? static_cast<int>(s) : 1; }

int print(sk_status s, sk_report* raw, const std::string& format) {
  Report r(raw);
  if (!r) {
    std::cerr << "stratakit: " << sk_status_string(s) << ": " << sk_last_error() << "\n";
    return clamp_exit(s);
  }
  std::cout << (format == "text" ? sk_report_text(r.get()) : sk_report_json(r.get()));
  return sk_report_exit_code(r.get());
}

Spec load(const std::string& path, sk_status& s) {
  sk_spec* raw = nullptr;
  s = sk_spec_load_file(path.c_str(), &raw);
  return Spec(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for recollements and stratifications of finite-dimensional algebras"};
  app.set_version_flag("--version", std::string(sk_version()));
  app.require_subcommand(1);

  std::string format = "json";
  bool timing = false;
  std::uint64_t seed = 0;

  std::string path;
  auto* validate = app.add_subcommand("validate", "Parse and validate an algebra spec file");
  validate->add_option("path", path, "Spec file")->required();

  std::string mode = "recollement";
  std::size_t n = 2;
  bool oracle = false;
  auto* check = app.add_subcommand("check", "Run one family of checks on a spec file");
  check->add_option("path", path, "Spec file")->required();
  check->add_option("--mode", mode, "Check family")
      ->check(CLI::IsMember({"recollement", "simples", "porism", "eps", "hw", "homological"}));
  check->add_option("--n", n, "Largest degree for homological mode")->check(CLI::PositiveNumber);
  check->add_flag("--oracle", oracle, "Cross-check with exhaustive search (finite fields only)");
  check->add_option("--seed", seed, "Seed for randomized searches");

  std::string filter;
  auto* corpus = app.add_subcommand("corpus", "Run the bundled fixture corpus");
  corpus->add_option("--filter", filter, "Only entries carrying this tag");
  corpus->add_option("--seed", seed, "Seed for randomized probes");

  for (auto* sub : {validate, check, corpus}) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", timing, "Record wall-clock timing in the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (const char* env = std::getenv("STRATAKIT_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "stratakit: STRATAKIT_SEED is not an unsigned integer\n";
      return 1;
    }
  }

  sk_report* report = nullptr;
  sk_status s = SK_OK;
  if (*corpus) {
    s = sk_corpus(filter.c_str(), seed, timing, &report);
    return print(s, report, format);
  }
  Spec spec = load(path, s);
  if (!spec) return print(s, nullptr, format);
  if (*validate) {
    s = sk_validate(spec.get(), timing, &report);
  } else {
    sk_check_options opt = sk_check_options_default();
    opt.mode = mode.c_str();
    opt.n = n;
    opt.oracle = oracle;
    opt.seed = seed;
    opt.timing = timing;
    s = sk_check(spec.get(), &opt, &report);
  }
  return print(s, report, format);
}
