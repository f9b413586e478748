#include "resolv/serialize.hpp"

#include <string>

#include "resolv/error.hpp"

namespace resolv {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::uint64_t unsigned_value(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_error(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (FieldElement x : m.row(r)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const FiniteField& field, const Json& j) {
  if (!j.is_array() || j.empty()) parse_error("generator must be a non-empty array of rows");
  std::vector<std::vector<FieldElement>> rows;
  std::size_t width = 0;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) parse_error("generator rows must be non-empty arrays");
    if (width == 0) width = row.size();
    if (row.size() != width) parse_error("generator rows differ in length");
    std::vector<FieldElement> v;
    for (const auto& x : row) {
      std::uint64_t e = unsigned_value(x, "generator entry");
      if (e >= field.order()) parse_error("generator entry " + std::to_string(e) + " outside the field");
      v.push_back(static_cast<FieldElement>(e));
    }
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(field, rows);
}

Json subcode_json(const Subcode& s, std::size_t n) {
  Json j;
  j["dim"] = s.dim;
  j["weight"] = s.weight();
  j["support"] = support_to_json(s.support, n);
  j["basis"] = matrix_rows(s.basis);
  return j;
}

}  // namespace

Json support_to_json(Support support, std::size_t n) {
  Json out = Json::array();
  for (std::size_t e = 0; e < n; ++e)
    if ((support >> e) & 1) out.push_back(e);
  return out;
}

Json to_json(const FiniteField& field) {
  Json j;
  j["p"] = field.characteristic();
  j["e"] = field.degree();
  j["modulus"] = field.modulus();
  return j;
}

Json to_json(const LinearCode& code) {
  Json j;
  j["field"] = to_json(code.field());
  j["n"] = code.length();
  j["k"] = code.dimension();
  j["generator"] = matrix_rows(code.generator());
  return j;
}

Json to_json(const ProjectiveSystem& system) {
  Json j;
  j["field"] = to_json(system.field);
  j["k"] = system.k;
  j["points"] = system.points;
  return j;
}

Json to_json(const BettiTable& table) {
  Json j;
  j["n"] = table.n;
  j["k"] = table.k;
  j["q"] = table.q;
  j["method"] = to_string(table.method);
  Json entries = Json::array();
  for (const auto& [cell, beta] : table.entries) {
    Json e;
    e["i"] = cell.first;
    e["j"] = cell.second;
    e["beta"] = beta.get_str();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  j["pure"] = table.pure();
  j["ghw"] = table.ghw();
  return j;
}

Json to_json(const PurityReport& report, std::size_t n) {
  Json j;
  j["pure"] = report.pure;
  j["pure_type"] = report.pure_type ? Json(*report.pure_type) : Json(nullptr);
  j["left_pure_from"] = report.left_pure_from ? Json(*report.left_pure_from) : Json(nullptr);
  Json steps = Json::array();
  for (std::size_t i = 0; i < report.step_weights.size(); ++i) {
    Json s;
    s["i"] = i + 1;
    s["weights"] = report.step_weights[i] ? Json(*report.step_weights[i]) : Json(nullptr);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json x;
    x["step"] = w.step;
    x["lighter"] = subcode_json(w.lighter, n);
    x["heavier"] = subcode_json(w.heavier, n);
    witnesses.push_back(std::move(x));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json to_json(const WeightDistribution& distribution) {
  Json j = Json::object();
  for (const auto& [w, count] : distribution) j[std::to_string(w)] = std::to_string(count);
  return j;
}

FiniteField field_from_json(const Json& j) {
  if (j.is_number()) return FiniteField::of_order(unsigned_value(j, "q"));
  auto p = unsigned_value(member(j, "p"), "p");
  auto e = unsigned_value(member(j, "e"), "e");
  if (p > 65536 || e == 0 || e > 16) throw Error(ErrorKind::InvalidParameters, "field parameters out of range");
  std::optional<std::vector<unsigned>> modulus;
  if (j.contains("modulus")) {
    std::vector<unsigned> m;
    if (!j.at("modulus").is_array()) parse_error("modulus must be an array");
    for (const auto& c : j.at("modulus")) m.push_back(static_cast<unsigned>(unsigned_value(c, "modulus coefficient")));
    modulus = std::move(m);
  }
  return FiniteField::make(static_cast<unsigned>(p), static_cast<unsigned>(e), modulus);
}

LinearCode code_from_json(const Json& j) {
  FiniteField field = j.contains("field") ? field_from_json(j.at("field")) : field_from_json(member(j, "q"));
  LinearCode code = LinearCode::make(matrix_from_json(field, member(j, "generator")));
  if (j.contains("k") && unsigned_value(j.at("k"), "k") != code.dimension())
    parse_error("declared k does not match the generator rank");
  if (j.contains("n") && unsigned_value(j.at("n"), "n") != code.length())
    parse_error("declared n does not match the generator width");
  return code;
}

BettiTable betti_from_json(const Json& j) {
  BettiTable t;
  t.n = unsigned_value(member(j, "n"), "n");
  t.k = unsigned_value(member(j, "k"), "k");
  t.q = unsigned_value(member(j, "q"), "q");
  const Json& m = member(j, "method");
  if (!m.is_string()) parse_error("method must be a string");
  auto method = betti_method_from_string(m.get<std::string>());
  if (!method) parse_error("unknown method " + m.get<std::string>());
  t.method = *method;
  const Json& entries = member(j, "entries");
  if (!entries.is_array()) parse_error("entries must be an array");
  for (const auto& e : entries) {
    const Json& beta = member(e, "beta");
    if (!beta.is_string()) parse_error("beta must be a decimal string");
    BigInt v;
    if (v.set_str(beta.get<std::string>(), 10) != 0) parse_error("beta is not a decimal integer");
    t.entries[{unsigned_value(member(e, "i"), "i"), unsigned_value(member(e, "j"), "j")}] = v;
  }
  return t;
}

LinearCode parse_code_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
  if (j.is_object() && j.contains("code") && j["code"].is_object()) return code_from_json(j["code"]);
  return code_from_json(j);
}

}  // namespace resolv
