#pragma once

#include <json.hpp>

#include "swcalc/laurent.hpp"
#include "swcalc/ledger.hpp"
#include "swcalc/mcg.hpp"
#include "swcalc/pipeline.hpp"
#include "swcalc/plumbing.hpp"

// JSON schemas for every value the CLI emits or reads. Key order is fixed
// (ordered_json) so that parse -> serialize round-trips are byte-identical.
// Coefficients and Seiberg-Witten values are decimal strings: they outgrow
// every fixed-width integer type.

namespace swcalc {

using Json = nlohmann::ordered_json;

// {"generators": ["T", "E1"], "terms": [{"exp": [1, 0], "coeff": "-3"}, ...]}
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json census_to_json(const FiberCensus& census);
Json matrix_to_json(const SL2Matrix& m);

// {"p":.., "q":.., "coefficients":[..], "lens_space":{"order":..,"twist":..},
//  "checks":{...}}
Json chain_to_json(const Chain& chain, const ChainReport& report);

Json homology_class_to_json(const HomologyClass& cls, std::size_t e_count);

// {"e":.., "sigma":.., "b2plus":.., "c1sq":.., "chi_h":..,
//  "simply_connected":.., "sw":{...}, "basic_classes":[...], "verdict":"..",
//  "history":[...]}
Json state_to_json(const ManifoldState& m);

Json recipe_to_json(const ConstructionRecipe& rec);
ConstructionRecipe recipe_from_json(const Json& j);

// The state document plus {"recipe":.., "top_value":.., "certificate":..}.
Json result_to_json(const ConstructionResult& result);

Json geography_to_json(std::int64_t n, std::int64_t floor_c1sq,
                       const std::vector<GeographyPoint>& points);

Json certificate_to_json(const DistinctnessCertificate& cert);

}  // namespace swcalc
