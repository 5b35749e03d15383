#pragma once

#include <json.hpp>

#include "spinc/cohomology.hpp"
#include "spinc/io.hpp"
#include "spinc/matrix.hpp"
#include "spinc/structures.hpp"

namespace spinc::cli {

using Json = nlohmann::json;

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const Integer& v);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
/// {"rank": r, "torsion": [d...]}
Json to_json(const AbelianGroup& g);
/// {"free": [...], "torsion": [...]}
Json to_json(const GroupElement& x);
/// Nonzero values as [{"simplex": [...], "value": v}] in simplex order.
Json cochain_to_json(const SimplicialComplex& k, const Cochain& z);

GroupElement element_from_json(const AbelianGroup& g, const Json& j);
/// `{"torsor":"spinc","offset":{...}}`
GroupElement structure_offset_from_json(const AbelianGroup& g, const Json& j);

/// A cochain from `.cyc` entries; every listed simplex must exist in k.
Cochain cochain_from_entries(const SimplicialComplex& k, const std::vector<CochainEntry>& entries, int degree,
                             Ring ring);

}  // namespace spinc::cli
