#include "tlimm/io/json.hpp"

#include <charconv>
#include <string>

#include "tlimm/error.hpp"

namespace tlimm::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::int64_t parse_int64(const std::string& text) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) bad("bad integer coefficient '" + text + "'");
  return v;
}

Json index_set(const IndexSet& s) { return Json(s); }

}  // namespace

Json to_json(const Immanant& f) {
  Json terms = Json::array();
  for (const auto& [u, c] : f.coeffs()) terms.push_back({{"perm", u.str()}, {"coeff", std::to_string(c)}});
  return {{"n", f.size()}, {"terms", std::move(terms)}};
}

Immanant immanant_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 1) bad("n must be positive");
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  Immanant f(n);
  for (const auto& t : terms) {
    const auto u = Permutation::parse(as_string(field(t, "perm"), "perm"));
    if (u.size() != n) bad("term " + u.str() + " has the wrong size");
    const auto& c = field(t, "coeff");
    f.add_term(u, c.is_number_integer() ? c.get<std::int64_t>() : parse_int64(as_string(c, "coeff")));
  }
  return f;
}

Json to_json(const SkewShape& s) { return {{"n", s.size()}, {"lambda", s.lambda()}, {"mu", s.mu()}}; }

SkewShape shape_from_json(const Json& j) {
  const auto lambda = int_list(field(j, "lambda"), "lambda");
  const int n = j.contains("n") ? as_int(j["n"], "n") : static_cast<int>(lambda.size());
  try {
    return SkewShape(n, lambda, int_list(field(j, "mu"), "mu"));
  } catch (const PreconditionError& e) {
    bad(e.what());
  }
}

Json to_json(const Decomposition& d) {
  if (d.kind == Decomposition::Kind::None) return {{"kind", "none"}};
  Json shapes = Json::array();
  for (const auto& s : d.shapes) shapes.push_back(to_json(s));
  return {{"kind", to_string(d.kind)}, {"sign", d.sign}, {"shapes", std::move(shapes)}};
}

Decomposition decomposition_from_json(const Json& j) {
  const auto kind = as_string(field(j, "kind"), "kind");
  Decomposition d;
  if (kind == "none") return d;
  if (kind == "one") d.kind = Decomposition::Kind::One;
  else if (kind == "two") d.kind = Decomposition::Kind::Two;
  else bad("unknown kind '" + kind + "'");
  d.sign = as_int(field(j, "sign"), "sign");
  if (d.sign != 1 && d.sign != -1) bad("sign must be 1 or -1");
  const auto& shapes = field(j, "shapes");
  if (!shapes.is_array()) bad("shapes must be an array");
  for (const auto& s : shapes) d.shapes.push_back(shape_from_json(s));
  if (d.shapes.size() != (d.kind == Decomposition::Kind::One ? 1u : 2u)) bad("shape count does not match kind");
  return d;
}

Json to_json(const CaseParams& p) {
  if (const auto* c = std::get_if<Case1Params>(&p))
    return {{"case", "case1"}, {"a", c->a}, {"b", c->b}, {"e", c->e}, {"c", c->c}, {"d", c->d}};
  const auto& c = std::get<Case2Params>(p);
  return {{"case", "case2"}, {"a", c.a}, {"e", c.e}, {"b", c.b}, {"c", c.c}, {"f", c.f}, {"d", c.d}};
}

CaseParams case_params_from_json(const Json& j) {
  const auto tag = as_string(field(j, "case"), "case");
  auto get = [&](const char* key) { return as_int(field(j, key), key); };
  if (tag == "case1") return Case1Params{get("a"), get("b"), get("e"), get("c"), get("d")};
  if (tag == "case2") return Case2Params{get("a"), get("e"), get("b"), get("c"), get("f"), get("d")};
  bad("unknown case '" + tag + "'");
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int k = 1; k <= m.size(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  const int n = static_cast<int>(j.size());
  RationalMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) bad("matrix must be square");
    for (int k = 1; k <= n; ++k) {
      const auto& x = row[static_cast<std::size_t>(k - 1)];
      m(i, k) = x.is_number_integer() ? Rational(x.get<std::int64_t>()) : parse_rational(as_string(x, "entry"));
    }
  }
  return m;
}

Json to_json(const std::vector<CmTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back({{"sign", t.sign}, {"I", index_set(t.I)}, {"J", index_set(t.J)}});
  return out;
}

Json to_json(const std::vector<RectTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back({{"I", index_set(t.I)}, {"J", index_set(t.J)}});
  return out;
}

Json to_json(const std::vector<BasisTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms)
    out.push_back({{"representative", t.representative.str()}, {"coefficient", to_string(t.coefficient)}});
  return out;
}

std::vector<BasisTerm> basis_terms_from_json(const Json& j) {
  if (!j.is_array()) bad("basis terms must be an array");
  std::vector<BasisTerm> out;
  for (const auto& t : j)
    out.push_back({Permutation::parse(as_string(field(t, "representative"), "representative")),
                   parse_rational(as_string(field(t, "coefficient"), "coefficient"))});
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

}  // namespace tlimm::io
