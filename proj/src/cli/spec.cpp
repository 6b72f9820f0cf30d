#include "cli/spec.hpp"

#include "json.hpp"

#include <openssl/evp.h>

#include <set>

namespace stratakit::cli {

using Json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw SchemaError(where + ": " + what); }

void only_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed,
               std::initializer_list<const char*> required) {
  if (!j.is_object()) fail(where, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) fail(where, "unknown key '" + k + "'");
  for (const char* r : required)
    if (!j.contains(r)) fail(where, std::string("missing key '") + r + "'");
}

const Json& array_at(const Json& j, const char* key, const std::string& where) {
  const Json& a = j.at(key);
  if (!a.is_array()) fail(where + "." + key, "expected an array");
  return a;
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const Json& a, const std::string& where) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string_of(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

la::Scalar scalar_of(const la::Field& f, const Json& j, const std::string& where) {
  std::string text;
  if (j.is_number_integer())
    text = j.dump();
  else if (j.is_string())
    text = j.get<std::string>();
  else
    fail(where, "coefficient must be an integer or a string such as \"3/4\"");
  try {
    return la::Scalar::parse(f, text);
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

la::Field field_of(const Json& j) {
  only_keys(j, "field", {"kind", "p"}, {"kind"});
  std::string kind = string_of(j.at("kind"), "field.kind");
  if (kind == "Q") {
    if (j.contains("p")) fail("field", "'p' is only allowed for GF");
    return la::Field::rationals();
  }
  if (kind != "GF") fail("field.kind", "expected \"GF\" or \"Q\"");
  if (!j.contains("p") || !j.at("p").is_number_integer()) fail("field.p", "expected an integer");
  try {
    return la::Field::gf(j.at("p").get<std::int64_t>());
  } catch (const std::exception& e) {
    fail("field.p", e.what());
  }
}

alg::Presentation presentation_of(const la::Field& f, const Json& quiver, const Json* relations,
                                  const std::string& where) {
  alg::Presentation p;
  p.field = f;
  only_keys(quiver, where + ".quiver", {"vertices", "arrows"}, {"vertices"});
  p.quiver.vertices = strings_of(array_at(quiver, "vertices", where + ".quiver"), where + ".quiver.vertices");
  if (quiver.contains("arrows")) {
    const Json& arrows = array_at(quiver, "arrows", where + ".quiver");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      std::string w = where + ".quiver.arrows[" + std::to_string(i) + "]";
      only_keys(arrows[i], w, {"name", "from", "to"}, {"name", "from", "to"});
      p.quiver.arrows.push_back({string_of(arrows[i].at("name"), w + ".name"), string_of(arrows[i].at("from"), w + ".from"),
                                 string_of(arrows[i].at("to"), w + ".to")});
    }
  }
  if (relations) {
    if (!relations->is_array()) fail(where + ".relations", "expected an array");
    for (std::size_t i = 0; i < relations->size(); ++i) {
      std::string w = where + ".relations[" + std::to_string(i) + "]";
      const Json& rel = (*relations)[i];
      only_keys(rel, w, {"terms"}, {"terms"});
      alg::Relation r;
      const Json& terms = array_at(rel, "terms", w);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        std::string wt = w + ".terms[" + std::to_string(t) + "]";
        only_keys(terms[t], wt, {"coeff", "path"}, {"coeff", "path"});
        r.terms.push_back({scalar_of(f, terms[t].at("coeff"), wt + ".coeff"),
                           strings_of(array_at(terms[t], "path", wt), wt + ".path")});
      }
      p.relations.push_back(std::move(r));
    }
  }
  return p;
}

std::vector<std::pair<std::string, std::string>> string_map(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : j.items()) out.emplace_back(k, string_of(v, where + "." + k));
  return out;
}

StratSpec strat_of(const Json& j) {
  only_keys(j, "stratification", {"poset", "rho", "epsilon"}, {"poset", "rho"});
  StratSpec s;
  const Json& poset = j.at("poset");
  only_keys(poset, "stratification.poset", {"elements", "leq"}, {"elements"});
  s.elements = strings_of(array_at(poset, "elements", "stratification.poset"), "stratification.poset.elements");
  if (poset.contains("leq")) {
    const Json& leq = array_at(poset, "leq", "stratification.poset");
    for (std::size_t i = 0; i < leq.size(); ++i) {
      std::string w = "stratification.poset.leq[" + std::to_string(i) + "]";
      if (!leq[i].is_array() || leq[i].size() != 2) fail(w, "expected a pair [a, b] meaning a <= b");
      s.leq.emplace_back(string_of(leq[i][0], w), string_of(leq[i][1], w));
    }
  }
  s.rho = string_map(j.at("rho"), "stratification.rho");
  if (j.contains("epsilon")) {
    s.epsilon = string_map(j.at("epsilon"), "stratification.epsilon");
    for (const auto& [e, v] : *s.epsilon)
      if (v != "+" && v != "-") fail("stratification.epsilon." + e, "expected \"+\" or \"-\"");
  }
  return s;
}

la::Matrix square_of(const la::Field& f, const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim) fail(where, "expected " + std::to_string(dim) + " rows");
  la::Matrix m(f, dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim) fail(where, "expected rows of length " + std::to_string(dim));
    for (std::size_t c = 0; c < dim; ++c)
      m.set(r, c, scalar_of(f, j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
  }
  return m;
}

BimoduleSpec bimodule_of(const la::Field& f, const Json& j, const std::string& where) {
  only_keys(j, where, {"dim", "left", "right"}, {"dim", "left", "right"});
  if (!j.at("dim").is_number_unsigned()) fail(where + ".dim", "expected a non-negative integer");
  BimoduleSpec b;
  b.dim = j.at("dim").get<std::size_t>();
  for (const char* side : {"left", "right"}) {
    const Json& a = array_at(j, side, where);
    auto& out = std::string(side) == "left" ? b.left : b.right;
    for (std::size_t i = 0; i < a.size(); ++i)
      out.push_back(square_of(f, a[i], b.dim, where + "." + side + "[" + std::to_string(i) + "]"));
  }
  return b;
}

MVSpec mv_of(const la::Field& f, const Json& j) {
  only_keys(j, "mv", {"r", "s", "m", "n", "theta"}, {"r", "s", "m", "n", "theta"});
  MVSpec m;
  for (const char* side : {"r", "s"}) {
    const Json& a = j.at(side);
    std::string w = std::string("mv.") + side;
    only_keys(a, w, {"quiver", "relations"}, {"quiver"});
    auto p = presentation_of(f, a.at("quiver"), a.contains("relations") ? &a.at("relations") : nullptr, w);
    (std::string(side) == "r" ? m.r : m.s) = std::move(p);
  }
  m.m = bimodule_of(f, j.at("m"), "mv.m");
  m.n = bimodule_of(f, j.at("n"), "mv.n");
  const Json& t = array_at(j, "theta", "mv");
  for (std::size_t r = 0; r < t.size(); ++r) {
    std::string w = "mv.theta[" + std::to_string(r) + "]";
    if (!t[r].is_array()) fail(w, "expected a row");
    std::vector<la::Scalar> row;
    for (std::size_t c = 0; c < t[r].size(); ++c) row.push_back(scalar_of(f, t[r][c], w + "[" + std::to_string(c) + "]"));
    if (r > 0 && row.size() != m.theta.front().size()) fail(w, "rows of different length");
    m.theta.push_back(std::move(row));
  }
  return m;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

SpecFile parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  only_keys(j, "spec", {"field", "quiver", "relations", "stratification", "mv"}, {"field", "quiver"});
  SpecFile s;
  la::Field f = field_of(j.at("field"));
  s.presentation = presentation_of(f, j.at("quiver"), j.contains("relations") ? &j.at("relations") : nullptr, "spec");
  if (j.contains("stratification")) s.stratification = strat_of(j.at("stratification"));
  if (j.contains("mv")) s.mv = mv_of(f, j.at("mv"));
  s.input_hash = "sha256:" + sha256_hex(j.dump());
  return s;
}

BuiltSpec build_spec(const SpecFile& spec) {
  using strat::StratError;
  BuiltSpec b;
  b.algebra = alg::build_bound_quiver_algebra(spec.presentation);
  auto report = alg::validate_algebra(b.algebra);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw alg::AlgebraError(alg::AlgebraError::Code::InvalidData, v.check + ": " + v.witness);
  }
  if (spec.stratification) {
    const auto& st = *spec.stratification;
    strat::Poset poset(st.elements, st.leq);
    std::vector<std::size_t> rho(b.algebra.vertex_count(), poset.size());
    for (const auto& [vertex, element] : st.rho) {
      const auto& names = b.algebra.vertex_names();
      auto it = std::find(names.begin(), names.end(), vertex);
      if (it == names.end()) throw StratError(StratError::Code::InvalidLabeling, "rho names unknown vertex '" + vertex + "'");
      rho[static_cast<std::size_t>(it - names.begin())] = poset.index(element);
    }
    for (std::size_t v = 0; v < rho.size(); ++v)
      if (rho[v] == poset.size())
        throw StratError(StratError::Code::InvalidLabeling, "rho misses vertex '" + b.algebra.vertex_names()[v] + "'");
    std::optional<strat::SignMap> eps;
    if (st.epsilon) {
      std::vector<int> seen(poset.size(), 0);
      strat::SignMap e(poset.size(), strat::Sign::Plus);
      for (const auto& [element, sign] : *st.epsilon) {
        std::size_t i = poset.index(element);
        e[i] = sign == "+" ? strat::Sign::Plus : strat::Sign::Minus;
        seen[i] = 1;
      }
      for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw StratError(StratError::Code::InvalidLabeling, "epsilon misses element '" + poset.elements()[i] + "'");
      eps = e;
    }
    b.stratification.emplace(b.algebra, poset, rho, eps);
    auto axioms = strat::check_stratification(*b.stratification);
    if (!axioms.ok())
      throw StratError(StratError::Code::Inconsistent, axioms.failures.front().first + ": " + axioms.failures.front().second);
  }
  if (spec.mv) {
    const auto& m = *spec.mv;
    mv::MVData d;
    d.r = alg::build_bound_quiver_algebra(m.r);
    d.s = alg::build_bound_quiver_algebra(m.s);
    d.m = {m.m.dim, m.m.left, m.m.right};
    d.n = {m.n.dim, m.n.left, m.n.right};
    const la::Field& f = spec.presentation.field;
    std::size_t cols = m.theta.empty() ? 0 : m.theta.front().size();
    d.theta = la::Matrix(f, m.theta.size(), cols);
    for (std::size_t r = 0; r < m.theta.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) d.theta.set(r, c, m.theta[r][c]);
    mv::require_valid(d);
    b.mv = std::move(d);
  }
  return b;
}

}  // namespace stratakit::cli
