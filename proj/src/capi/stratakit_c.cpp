#include "stratakit/stratakit.h"

#include "cli/commands.hpp"

#include <fstream>
#include <new>
#include <sstream>
#include <string>

struct sk_spec {
  std::string text;
};

struct sk_report {
  int exit_code = 0;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

sk_status fail(sk_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
sk_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const std::bad_alloc&) {
    return fail(SK_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(SK_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(SK_INTERNAL_ERROR, "unknown exception");
  }
}

sk_status emit(const stratakit::cli::CommandResult& r, sk_report** out) {
  auto* rep = new sk_report;
  rep->exit_code = r.exit_code;
  rep->json = stratakit::cli::render_json(r.report);
  rep->text = stratakit::cli::render_text(r.report);
  *out = rep;
  if (r.report.contains("error")) last_error = r.report["error"]["message"].get<std::string>();
  return static_cast<sk_status>(r.exit_code);
}

}  // namespace

extern "C" {

const char* sk_version(void) { return stratakit::cli::version(); }

const char* sk_status_string(sk_status s) {
  switch (s) {
    case SK_OK: return "ok";
    case SK_SCHEMA_ERROR: return "schema error";
    case SK_INVARIANT_FAILURE: return "invariant failure";
    case SK_ORACLE_REFUSED: return "oracle refused";
    case SK_IO_ERROR: return "i/o error";
    case SK_INVALID_ARGUMENT: return "invalid argument";
    case SK_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

sk_status sk_spec_load_file(const char* path, sk_spec** out) {
  if (!path || !out) return fail(SK_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(SK_IO_ERROR, std::string("cannot open ") + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    *out = new sk_spec{ss.str()};
    return SK_OK;
  });
}

sk_status sk_spec_load_string(const char* text, size_t len, sk_spec** out) {
  if (!text || !out) return fail(SK_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sk_spec{std::string(text, len)};
    return SK_OK;
  });
}

void sk_spec_free(sk_spec* spec) { delete spec; }

sk_check_options sk_check_options_default(void) { return {"recollement", 2, 0, 0, 0}; }

sk_status sk_validate(const sk_spec* spec, int timing, sk_report** out) {
  if (!spec || !out) return fail(SK_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(stratakit::cli::cmd_validate(spec->text, timing != 0), out); });
}

sk_status sk_check(const sk_spec* spec, const sk_check_options* opt, sk_report** out) {
  if (!spec || !opt || !out) return fail(SK_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    stratakit::cli::CheckOptions o;
    o.mode = opt->mode ? opt->mode : "recollement";
    o.n = opt->n;
    o.oracle = opt->oracle != 0;
    o.seed = opt->seed;
    o.timing = opt->timing != 0;
    return emit(stratakit::cli::cmd_check(spec->text, o), out);
  });
}

sk_status sk_corpus(const char* filter, uint64_t seed, int timing, sk_report** out) {
  if (!out) return fail(SK_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(stratakit::cli::cmd_corpus(filter ? filter : "", seed, timing != 0), out); });
}

const char* sk_report_json(const sk_report* r) { return r ? r->json.c_str() : ""; }
const char* sk_report_text(const sk_report* r) { return r ? r->text.c_str() : ""; }
int sk_report_exit_code(const sk_report* r) { return r ? r->exit_code : SK_INVALID_ARGUMENT; }
void sk_report_free(sk_report* r) { delete r; }

const char* sk_last_error(void) { return last_error.c_str(); }

}  // extern "C"
