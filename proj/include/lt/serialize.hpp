#pragma once

// JSON forms of the core values. Matrices are arrays of arrays of decimal
// strings; cyclotomic numbers are {level, coeffs} with fraction strings.

#include <json.hpp>

#include "lt/dlengine.hpp"

namespace lt {

using Json = nlohmann::json;

Json cyclo_to_json(const Cyclo& c);
Cyclo cyclo_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json datum_to_json(const RootDatum& rd);
/// Accepts a name string ("GL(2)") or {rank, roots, coroots, simple[, name]}.
RootDatum datum_from_json(const Json& j);

/// {source, target, matrix}
DualMorphism morphism_from_json(const Json& j);
Json morphism_to_json(const DualMorphism& m);

/// {"group": name, "q": q, "classes": {label: cyclo}}
Json stable_to_json(const StableFunction& f);
StableFunction stable_from_json(const Json& j, ContextPtr ctx);

/// {pair-label: cyclo}
Json uniform_to_json(const UniformFunction& u);

/// Strips the class label prefix and parses the point.
QmodZVec point_from_label(const std::string& label);

}  // namespace lt
