#pragma once

// JSON wire formats:
//   simplex: {"dim": d, "vertices": [[int, ...], ...]}  (d+1 vertices of length d)
//   delta:   {"d": d, "delta": [int, ...]}                (length d+1, leading 1)
//   report:  VerificationReport fields.
// Integers outside the int64 range are written as decimal strings; both
// forms are accepted on input.

#include "flatdelta/ehrhart.hpp"
#include "flatdelta/flat.hpp"
#include "flatdelta/polytope.hpp"
#include "flatdelta/theorem_suite.hpp"

#include <json.hpp>

#include <stdexcept>
#include <vector>

namespace flatdelta {

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

nlohmann::json integer_to_json(const Integer& value);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json simplex_to_json(const Simplex& s);
/// Throws JsonFormatError on schema violations; degenerate or mis-sized
/// vertex sets raise the Simplex errors.
Simplex simplex_from_json(const nlohmann::json& j);

nlohmann::json delta_to_json(const DeltaVector& delta);
/// Raw entries of {"d": d, "delta": [...]} or a bare array, unvalidated
/// beyond integrality and the length/d agreement.
std::vector<Integer> delta_entries_from_json(const nlohmann::json& j);

nlohmann::json recipe_to_json(const ConstructionRecipe& recipe);
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace flatdelta
