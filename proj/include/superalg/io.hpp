#pragma once

// JSON structure-constant files and report serialization.
//
// Algebra file:
//   {"name": "...", "kind": "lie_super" | "leibniz_super",
//    "even_basis": ["x1", ...], "odd_basis": ["y1", ...],
//    "brackets": [{"left": "x1", "right": "x2",
//                  "result": [{"basis": "x3", "coeff": "1"}]}, ...]}
// Coefficients are decimal strings "p" or "p/q" (JSON integers are also
// accepted); floats are rejected. Lie files may list each pair once.
//
// Actions file (for `extend`):
//   {"torus": [{"label": "t1", "left": {"x1": "x1", "y1": "2*y1"},
//               "right": {...}}],
//    "torus_brackets": [...same shape as "brackets"...]}
// "right" is optional for Lie nilradicals and defaults to -left.
//
// Basis-change file (for `iso`):
//   {"even": [{"label": "t1", "image": "z1 + 2*z2 + z3"}, ...], "odd": [...]}

#include "superalg/derivations.hpp"
#include "superalg/extension.hpp"
#include "superalg/invariants.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace superalg {

using Json = nlohmann::ordered_json;

/// Upper bound on accepted algebra dimensions: SUPERALG_MAX_DIM, default 64.
Index max_dimension();
/// Throws DimensionCapExceeded when a.dim() > max_dimension().
void enforce_dimension_cap(const SuperAlgebra& a);

struct LoadOptions {
  bool skip_validate = false;
};

/// Throws ParseError for malformed input and ValidationError when the law
/// fails its identities (unless skip_validate).
SuperAlgebra algebra_from_json(const Json& j, LoadOptions options = {});
SuperAlgebra load_algebra(std::istream& in, LoadOptions options = {});
SuperAlgebra load_algebra_file(const std::string& path, LoadOptions options = {});

Json algebra_to_json(const SuperAlgebra& a);
void save_algebra(const SuperAlgebra& a, std::ostream& out);

Json read_json_file(const std::string& path);
BasisChange basis_change_from_json(const Json& j);
ExtensionSpec extension_from_json(SuperAlgebra nilradical, const Json& j);

enum class Format { json, text };
Format parse_format(std::string_view text);

Json to_json(const Rational& q);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const Subspace& s);
Json to_json(const SuperAlgebra& a, const ValidationReport& r);
Json to_json(const Classification& c);
Json to_json(const SuperAlgebra& a, const CharacteristicSequence& c);
Json to_json(const DerivationSpace& d);
Json to_json(const InnernessReport& r);
Json to_json(const NilradicalVerdict& v);

std::string to_text(const SuperAlgebra& a, const ValidationReport& r);
std::string to_text(const Classification& c);
std::string to_text(const SuperAlgebra& a, const std::vector<Subspace>& chain, std::string_view which);
std::string to_text(const SuperAlgebra& a, const CharacteristicSequence& c);
std::string to_text(const SuperAlgebra& a, const Subspace& s, std::string_view title);
std::string to_text(const SuperAlgebra& a, const DerivationSpace& d);
std::string to_text(const InnernessReport& r);
std::string to_text(const NilradicalVerdict& v);

/// Serialized JSON with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace superalg
