#pragma once

#include <json.hpp>

#include "halphen/classifier.hpp"
#include "halphen/hilbert_polynomial.hpp"
#include "halphen/ideal.hpp"
#include "halphen/invariants.hpp"

namespace halphen::cli {

using Json = nlohmann::ordered_json;

/// Envelope shared by every JSON document: schema_version and command.
Json document(std::string_view command);

Json to_json(const IdealSpec& ideal);
Json to_json(const HilbertPolynomial& p);
Json to_json(const HilbertSeriesNumerator& n);
Json to_json(const ProjectiveInvariants& inv);
Json to_json(const Verdict& v);
Json rational_array(std::span<const Rational> values);

}  // namespace halphen::cli
