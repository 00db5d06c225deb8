#pragma once

#include <json.hpp>

#include "cdim/curves.hpp"

namespace cdim {

using Json = nlohmann::ordered_json;

// scalars as "p/q" strings, Laurent polynomials in the text format,
// exponents as integer arrays

Json to_json(const ExponentSet& set);
ExponentSet exponent_set_from_json(const Json& j);

Json to_json(const DmParameters& p);
Json to_json(const DetReport& r);
Json to_json(const Hypersurface& h);
Json to_json(const TrCheckReport& r);
Json to_json(const CDimWitnessReport& r);
Json to_json(const CollapseReport& r);
Json to_json(const ExpGraphReport& r);
Json to_json(const ReductionStep& r);
Json to_json(const CdimTriple& t);

Json curve_to_json(const CurveSpec& curve);
CurveSpec curve_from_json(const Json& j);

Json error_to_json(const error& e);

} // namespace cdim
