#pragma once

#include <string>

#include <json.hpp>

#include "eo/curves.hpp"
#include "eo/dieudonne.hpp"
#include "eo/search.hpp"
#include "eo/stable.hpp"

namespace eo {

// Element wire format: an integer in [0, p) for k = 1, a length-k array of
// such integers (constant term first) for k > 1. Matrices are row-major
// nested arrays of elements.

nlohmann::json element_to_json(const FieldElement& x);
FieldElement element_from_json(const FiniteField& f, const nlohmann::json& j);

nlohmann::json matrix_to_json(const MatrixOverF& m);
MatrixOverF matrix_from_json(const FieldPtr& f, const nlohmann::json& j);

/// { "p", "k", "model": "hyperelliptic", "f": [elements] }
HyperellipticCurve curve_from_json(const nlohmann::json& j);
nlohmann::json curve_to_json(const HyperellipticCurve& c);

/// { "p", "k", "g", "F": [[..]], "V": [[..]], "b": [[..]] }
DieudonneModule module_from_json(const nlohmann::json& j);
nlohmann::json module_to_json(const DieudonneModule& d);

/// { "p", "k", "vertices": [{ "id", "genus", "payload"? }], "edges": [[..]] }
/// payload: a curve object, a module object, or a bare delta array.
StableCurveGraph stable_from_json(const nlohmann::json& j);

nlohmann::json curve_report(const HyperellipticCurve& c, bool emit_matrix);
nlohmann::json module_report(const DieudonneModule& d);
nlohmann::json stable_report(const InvariantReport& rep, const StableCurveGraph& g);
nlohmann::json enumerate_report(int g, const std::optional<std::vector<int>>& delta_filter);
nlohmann::json table_report(int g);
nlohmann::json search_report(const SearchSpec& spec, const SearchResult& r);

std::string render_curve_text(const nlohmann::json& rep);
std::string render_module_text(const nlohmann::json& rep);
std::string render_stable_text(const nlohmann::json& rep);
std::string render_enumerate_text(const nlohmann::json& rep);
std::string render_table_text(const nlohmann::json& rep);
std::string render_search_text(const nlohmann::json& rep);

nlohmann::json load_json_file(const std::string& path);

}  // namespace eo
