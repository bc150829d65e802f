#pragma once

#include "schurlab/homogeneous.hpp"
#include "schurlab/laurent.hpp"
#include "schurlab/partition.hpp"

namespace schurlab {

/// Schur polynomial by the determinant in complete homogeneous functions,
/// det(h_{la_i - i + j}), of size max(length(la), N).
LaurentPoly schur_jt(const GeneralizedPartition& la, std::size_t N);
LaurentPoly schur_jt(const GeneralizedPartition& la, const Alphabet& alphabet);

/// Skew Schur polynomial det(h_{la_i - mu_j - i + j}) of size
/// max(length(la), length(mu)); 0 when mu is not contained in la.
LaurentPoly skew_schur_jt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                          std::size_t N);
LaurentPoly skew_schur_jt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                          const Alphabet& alphabet);

/// Skew Schur polynomial as a sum over interlacing chains
/// mu = w_0 < w_1 < ... < w_N = la with weights x_i^{|w_i| - |w_{i-1}|}.
/// Type-A values ignore trailing zeros, so inputs are normalized first.
LaurentPoly skew_schur_gt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                          std::size_t N);

} // namespace schurlab
