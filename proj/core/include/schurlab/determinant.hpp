#pragma once

#include <vector>

#include "schurlab/laurent.hpp"

namespace schurlab {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Exact determinant over the Laurent ring. Cofactor expansion up to 6x6,
/// fraction-free elimination (exact single-step division) above that.
/// The Laurent ring over the rationals is an integral domain, so every
/// division taken by the elimination is exact.
LaurentPoly det(const PolyMatrix& m);

LaurentPoly det_cofactor(const PolyMatrix& m);
LaurentPoly det_fraction_free(const PolyMatrix& m);

} // namespace schurlab
