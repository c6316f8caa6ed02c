#include "bchcov/json_io.hpp"

#include "bchcov/error.hpp"

namespace bchcov {

namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw PreconditionError(std::string("JSON: missing field \"") + key + "\"");
  }
  return j.at(key);
}

Json felts(const std::vector<Felt>& v) {
  Json out = Json::array();
  for (const auto x : v) out.push_back(to_hex(x));
  return out;
}

}  // namespace

Json to_json(const FieldSpec& f) {
  return Json{{"m", f.m()}, {"modulus", to_hex(f.modulus())}, {"generator", to_hex(f.generator())}};
}

FieldSpec field_from_json(const Json& j) {
  const int m = field_of(j, "m").get<int>();
  std::optional<std::uint64_t> modulus;
  if (j.contains("modulus")) modulus = parse_hex(j.at("modulus").get<std::string>());
  FieldSpec f = FieldSpec::make(m, modulus);
  if (j.contains("generator") && parse_felt(f, j.at("generator").get<std::string>()) != f.generator()) {
    throw PreconditionError("JSON: generator does not match the field's canonical generator");
  }
  return f;
}

Json to_json(const BinaryCode& c) {
  Json gen = Json::array();
  for (const auto& r : c.generator().rows()) gen.push_back(r.to_string());
  return Json{{"n", c.n()}, {"k", c.k()}, {"gen", gen}};
}

BinaryCode code_from_json(const Json& j) {
  const auto n = field_of(j, "n").get<std::size_t>();
  const auto rows = field_of(j, "gen").get<std::vector<std::string>>();
  BitMatrix gen = rows.empty() ? BitMatrix(n) : BitMatrix::parse(rows);
  if (gen.width() != n) throw PreconditionError("JSON: row width differs from n");
  BinaryCode c = BinaryCode::from_generator(gen);
  if (j.contains("k") && j.at("k").get<std::size_t>() != c.k()) {
    throw PreconditionError("JSON: generator rows are dependent or k is wrong");
  }
  return c;
}

Json to_json(const ColumnSystem& cs) {
  Json cols = Json::array();
  for (const auto& c : cs.columns()) cols.push_back(pair_to_json(c));
  return Json{{"field", to_json(cs.field())}, {"columns", cols}};
}

Json pair_to_json(SyndromePair p) { return Json::array({to_hex(p.a), to_hex(p.b)}); }

SyndromePair pair_from_json(const FieldSpec& f, const Json& j) {
  if (!j.is_array() || j.size() != 2) throw PreconditionError("JSON: pair must be [a, b]");
  return {parse_felt(f, j[0].get<std::string>()), parse_felt(f, j[1].get<std::string>())};
}

Json to_json(const CoverCertificate& cert) {
  Json targets = Json::array();
  for (const auto& t : cert.targets) targets.push_back(pair_to_json(t));
  Json out{{"field", to_json(cert.field)},
           {"targets", targets},
           {"t", cert.t},
           {"verdict", to_string(cert.verdict)},
           {"subsets_checked", cert.subsets_checked}};
  out["witness"] = cert.witness ? Json(*cert.witness) : Json(nullptr);
  return out;
}

CoverCertificate certificate_from_json(const Json& j) {
  CoverCertificate cert{field_from_json(field_of(j, "field")), {}, 0, 0, Verdict::kNoCoverAtT,
                        std::nullopt};
  for (const auto& t : field_of(j, "targets")) cert.targets.push_back(pair_from_json(cert.field, t));
  cert.t = field_of(j, "t").get<int>();
  cert.verdict = parse_verdict(field_of(j, "verdict").get<std::string>());
  cert.subsets_checked = field_of(j, "subsets_checked").get<std::uint64_t>();
  if (j.contains("witness") && !j.at("witness").is_null()) {
    cert.witness = j.at("witness").get<std::vector<std::size_t>>();
  }
  return cert;
}

Json to_json(const BoundReport& b) {
  Json out{{"kind", to_string(b.kind)}, {"k", b.k_or_r}};
  out["m"] = b.m ? Json(*b.m) : Json(nullptr);
  out["bound"] = b.bound ? Json(*b.bound) : Json(nullptr);
  out["hypothesis_holds"] = b.hypothesis_holds;
  return out;
}

Json to_json(const CoverSolution& sol, bool verified) {
  return Json{{"x", to_hex(sol.x)},
              {"ys", felts(sol.ys)},
              {"zs", felts(sol.zs)},
              {"columns", felts(sol.columns)},
              {"coefficients", sol.coefficients},
              {"candidates_scanned", sol.candidates_scanned},
              {"verified", verified}};
}

Json to_json(const EisensteinInt& z) { return Json{{"a", z.a}, {"b", z.b}}; }

Json to_json(const CharSumReport& r) {
  Json out{{"kind", r.kind}, {"m", r.m}, {"family", r.family}};
  if (r.mult_sum) out["sum"] = to_json(*r.mult_sum);
  if (r.add_sum) out["sum"] = *r.add_sum;
  out[r.kind == "weil" ? "s" : "L"] = r.parameter;
  if (r.reduced_parameter) out["L_reduced"] = *r.reduced_parameter;
  out["squared_magnitude"] = r.squared_magnitude;
  out["bound_squared"] = r.bound_squared;
  out["pass"] = r.pass;
  return out;
}

}  // namespace bchcov
