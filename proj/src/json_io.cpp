#include "flatdelta/json_io.hpp"

#include <string>

namespace flatdelta {

using nlohmann::json;

json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return json(static_cast<long long>(value.get_si()));
  return json(value.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw JsonFormatError("not an integer string: \"" + s + "\"");
    return Integer(s);
  }
  throw JsonFormatError("expected an integer, got " + j.dump());
}

json simplex_to_json(const Simplex& s) {
  json vertices = json::array();
  for (const auto& v : s.vertices()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(integer_to_json(x));
    vertices.push_back(std::move(row));
  }
  return json{{"dim", s.dim()}, {"vertices", std::move(vertices)}};
}

Simplex simplex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw JsonFormatError("simplex JSON needs \"dim\" and \"vertices\"");
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() < 1)
    throw JsonFormatError("\"dim\" must be a positive integer");
  const auto dim = j["dim"].get<std::size_t>();
  const json& rows = j["vertices"];
  if (!rows.is_array()) throw JsonFormatError("\"vertices\" must be an array");
  if (rows.size() != dim + 1)
    throw JsonFormatError("expected " + std::to_string(dim + 1) + " vertices, got " + std::to_string(rows.size()));
  std::vector<IntVector> vertices;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim)
      throw JsonFormatError("every vertex must be an array of length " + std::to_string(dim));
    std::vector<Integer> coords;
    for (const auto& x : row) coords.push_back(integer_from_json(x));
    vertices.emplace_back(std::move(coords));
  }
  return Simplex(std::move(vertices));
}

json delta_to_json(const DeltaVector& delta) {
  json entries = json::array();
  for (const auto& e : delta.entries()) entries.push_back(integer_to_json(e));
  return json{{"d", delta.dim()}, {"delta", std::move(entries)}};
}

std::vector<Integer> delta_entries_from_json(const json& j) {
  const json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("delta")) throw JsonFormatError("delta JSON needs \"delta\"");
    entries = &j["delta"];
  }
  if (!entries->is_array() || entries->size() < 2) throw JsonFormatError("delta must be an array of length >= 2");
  std::vector<Integer> out;
  for (const auto& x : *entries) out.push_back(integer_from_json(x));
  if (j.is_object() && j.contains("d")) {
    if (!j["d"].is_number_unsigned() || j["d"].get<std::size_t>() + 1 != out.size())
      throw JsonFormatError("\"d\" must equal the delta length minus one");
  }
  return out;
}

json recipe_to_json(const ConstructionRecipe& recipe) {
  return json{{"kind", std::string(to_string(recipe.kind))},
              {"base_dim", recipe.base_dim},
              {"k", recipe.k},
              {"a", recipe.a},
              {"pyramids", recipe.pyramids}};
}

namespace {

json comparison_to_json(const CountComparison& c) {
  return json{{"dilation", c.dilation},
              {"quantity", c.quantity == Quantity::Count ? "count" : "interior"},
              {"value_P", integer_to_json(c.value_p)},
              {"value_Q", integer_to_json(c.value_q)}};
}

}  // namespace

json report_to_json(const VerificationReport& report) {
  json agreements = json::array();
  for (const auto& c : report.agreements) {
    json entry = comparison_to_json(c);
    entry["value"] = entry["value_P"];
    agreements.push_back(std::move(entry));
  }
  json divergence = json::array();
  for (const auto& c : report.first_divergence) divergence.push_back(comparison_to_json(c));
  json out{{"theorem", report.theorem},
           {"params",
            {{"d", report.params.d}, {"k", report.params.k}, {"l", report.params.l}, {"a", report.params.a_values}}},
           {"agreements", std::move(agreements)},
           {"first_divergence", std::move(divergence)},
           {"passed", report.passed}};
  if (!report.pairs.empty()) {
    json pairs = json::array();
    for (const auto& p : report.pairs) pairs.push_back(report_to_json(p));
    out["pairs"] = std::move(pairs);
  }
  return out;
}

}  // namespace flatdelta
