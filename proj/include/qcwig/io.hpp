#pragma once

// JSON reading and writing. Rationals travel as "p/q" strings; complex
// coefficients as {"re","im"} with optional exact "scale" and "phase".
// Parse failures throw InputError naming the JSON path of the bad field.

#include <json.hpp>

#include <string>

#include "qcwig/quasicrystal.hpp"

namespace qcwig {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& field);
Json to_json(const RVec& v);
RVec rvec_from_json(const Json& j, const std::string& field);
/// Rows of p/q strings.
Json to_json(const RMat& m);
RMat rmat_from_json(const Json& j, const std::string& field);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j, const std::string& field);

/// {"dim","atoms":[{"point","order","coeff"}],"combs":[{"step","shift","modulation","coeff"}],"growth"}.
/// A 1D comb step is ["a"]; in 2D it is a list of rows.
Json to_json(const AtomicDistribution& mu);
AtomicDistribution measure_from_json(const Json& j);

/// {"dim","resolution":"atomic"|"semi-atomic","terms":[...]}; generators are
/// listed as columns, characters as rational angles in [0,1).
Json to_json(const PhaseSpace& psi);
PhaseSpace phase_space_from_json(const Json& j);

/// {"dim","points":[[...],...]}
Json to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j);

/// {"dim","T":[[...]]} or {"kind":"ambiguity","dim":1}.
Json to_json(const NamedTransform& t);
NamedTransform transform_from_json(const Json& j);

Json to_json(const SetDescriptor& s);
Json to_json(const SupportPredicates& p);
Json to_json(const HarnessReport& r);
Json to_json(const CanonicalForm& f);
CanonicalForm canonical_form_from_json(const Json& j);

/// Throws InputError("<path>", ...) when the file is missing or not JSON.
Json read_json_file(const std::string& path);
/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace qcwig
