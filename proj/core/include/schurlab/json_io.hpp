#pragma once

#include <json.hpp>

#include "schurlab/laurent.hpp"
#include "schurlab/partition.hpp"

namespace schurlab {

/// {"arity": n, "terms": [{"exp": [e1..en], "num": "...", "den": "..."}]}
/// with terms in canonical order (leading term first), exponents as signed
/// integers and coefficients as decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalFn& f);
RationalFn rationalfn_from_json(const nlohmann::json& j);

/// Partitions serialize as integer arrays preserving trailing zeros.
nlohmann::json to_json(const GeneralizedPartition& p);
GeneralizedPartition partition_from_json(const nlohmann::json& j);

} // namespace schurlab
