#ifndef SIMPLEX_JSON_IO_HPP
#define SIMPLEX_JSON_IO_HPP

#include "simplex/centers.hpp"
#include "simplex/cevians.hpp"
#include "simplex/classify.hpp"
#include "simplex/geometry.hpp"
#include "simplex/verify.hpp"

#include "json.hpp"

#include <string>

namespace simplex {

using Json = nlohmann::ordered_json;

/// Shortest text that parses back to exactly the same double (17 significant
/// digits); non-finite values become "null".
std::string format_double(double x);

/// Serializes with every floating-point number printed through
/// format_double, so files round-trip bit-exactly. `indent` < 0 emits a
/// single line.
std::string serialize(const Json& doc, int indent = 2);

Json simplex_document(const Simplex& s);
Json gram_document(const Matrix& gram);

/// Reads {"dimension": d, "vertices": [[...], ...]} (vertices as rows).
Simplex parse_simplex(const Json& doc, const Tolerance& tol = {});

/// Reads {"gram": [[...], ...]}.
Matrix parse_gram(const Json& doc);

/// Parses a JSON document holding either format; a "gram" key is factored
/// into coordinates first.
Simplex simplex_from_document(const Json& doc, const Tolerance& tol = {});

/// Loads and dispatches a JSON file. Throws std::runtime_error when the file
/// cannot be read, nlohmann::json::exception on malformed JSON.
Simplex load_simplex(const std::string& path, const Tolerance& tol = {});

Json center_report_document(const CenterReport& report);
Json classification_document(const ClassificationReport& report);
Json cevian_document(const CevianReport& report);
Json verification_document(const VerificationRun& run);

} // namespace simplex

#endif
