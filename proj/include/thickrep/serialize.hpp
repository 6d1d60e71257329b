#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "thickrep/repcore.hpp"

namespace thickrep {

using Json = nlohmann::json;

// JSON conventions: scalars are strings ("3/2", "4"), matrices are arrays of
// rows, wedge vectors are sparse maps keyed by 1-based index lists ("1,2").
// Objects keep sorted keys, so dump() of a parsed document reproduces the
// serializer output byte for byte. Every *_from_json throws ParseError.

/// "Q", "F5", "F2^2".
FieldSpec parse_field(const std::string& text);

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const FieldSpec& f, const Json& j);

Json matrix_to_json(const Matrix& m);
/// `cols` is used only when the array has no rows.
Matrix matrix_from_json(const FieldSpec& f, const Json& j, std::size_t cols = 0);

/// {"ambient": N, "basis": [[...], ...]} with the canonical basis.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const FieldSpec& f, const Json& j);

Json wedge_to_json(const WedgeVector& w);
WedgeVector wedge_from_json(const FieldSpec& f, std::size_t n, std::size_t m, const Json& j);

Json representation_to_json(const Representation& r);
/// Validates the result (shapes, invertibility in group mode).
Representation representation_from_json(const Json& j);

/// Self-contained: embeds the representation so the certificate can be audited alone.
Json report_to_json(const Representation& r, const ThicknessReport& report);
struct ReportDocument {
  Representation rep;
  ThicknessReport report;
};
ReportDocument report_from_json(const Json& j);

Verdict parse_verdict(const std::string& s);
RepMode parse_mode(const std::string& s);

Json read_json_file(const std::string& path);
/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace thickrep
