#pragma once

// Text and JSON forms of the specs consumed by the CLI and fixtures:
//   groups        "Z4xZ2"            {"moduli":[4,2]}
//   fields        "GF(9);f=Z^2+1"    {"p":3,"m":2,"f_plus_coeffs":[1,0,1]}
//   matrix rings  "M2(Z3)", "M2(GF(4))"
// Parse failures throw ParseError carrying the offending byte position.

#include <string>
#include <variant>

#include "qftlab/field.hpp"
#include "qftlab/group.hpp"
#include "qftlab/matrix_ring.hpp"

namespace qftlab {

using AnySpec = std::variant<GroupSpec, FieldSpec, MatrixRingSpec>;

GroupSpec parse_group_spec(const std::string& text);
FieldSpec parse_field_spec(const std::string& text);
MatrixRingSpec parse_matrix_ring_spec(const std::string& text);

/// Dispatches on the leading token (Z / GF / M).
AnySpec parse_spec(const std::string& text);

std::string spec_to_string(const AnySpec& spec);

/// Underlying additive group of whichever spec was parsed.
GroupSpec additive_group_of(const AnySpec& spec);

GroupSpec group_spec_from_json(const std::string& json_text);
FieldSpec field_spec_from_json(const std::string& json_text);

/// "3" (index) or "3,1" / "(3,1)" (coordinates) for the given group.
GroupElement parse_element(const GroupSpec& g, const std::string& text);

}  // namespace qftlab
