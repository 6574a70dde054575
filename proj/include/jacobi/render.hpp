#pragma once

// Text, JSON and LaTeX output. JSON objects have sorted keys and carry no
// timing, so equal inputs give byte-identical documents.

#include <string>

#include <json.hpp>

#include "jacobi/characters.hpp"
#include "jacobi/ido.hpp"
#include "jacobi/pbw.hpp"
#include "jacobi/sl2_reps.hpp"

namespace jacobi {

using Json = nlohmann::json;

enum class Format : std::uint8_t { text, json, latex };

std::string latex(const GaussianRational& g);
std::string latex(const ParamScalar& s);
std::string latex(const UeaElement& e);
std::string latex(const IdoElement& e);

Json to_json(const UeaElement& e);
Json to_json(const IdoElement& e);
Json to_json(const Character& chi);
Json to_json(const VerifyReport& r);
/// Module descriptor with the action on the weights in [from, to].
Json to_json(const WeightModule& m, const GaussianRational& from, const GaussianRational& to);
Json to_json(const Restriction& r);

/// Plain-text weight diagram on the weights in [from, to].
std::string weight_diagram(const WeightModule& m, const GaussianRational& from, const GaussianRational& to);
std::string report_text(const VerifyReport& r);

/// Adds "schema": "1" and dumps with two-space indentation.
std::string dump_document(Json doc);

}  // namespace jacobi
