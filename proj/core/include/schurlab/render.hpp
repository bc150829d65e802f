#pragma once

#include <string>
#include <vector>

#include "schurlab/laurent.hpp"
#include "schurlab/partition.hpp"

namespace schurlab {

/// Plain-text form: terms in canonical order (leading term first), `^` for
/// powers with explicit `^-k` for negative exponents. Default variable
/// names are x1, x2, ...
std::string to_text(const LaurentPoly& p, const std::vector<std::string>& names = {});
std::string to_text(const RationalFn& f, const std::vector<std::string>& names = {});
std::string to_text(const GeneralizedPartition& p);

} // namespace schurlab
