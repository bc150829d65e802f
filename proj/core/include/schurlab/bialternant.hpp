#pragma once

#include "schurlab/laurent.hpp"
#include "schurlab/partition.hpp"

namespace schurlab {

/// Schur polynomial as the ratio of two alternants,
/// det(x_i^{la_j + N - j}) / det(x_i^{N - j}). Requires <= N nonzero parts.
LaurentPoly schur_bialt(const GeneralizedPartition& la, std::size_t N);

/// Symplectic Schur Laurent polynomial,
/// det(x_i^{la_j + N - j + 1} - x_i^{-(la_j + N - j + 1)}) over the la = 0
/// alternant. Requires <= N nonzero parts.
LaurentPoly sp_bialt(const GeneralizedPartition& la, std::size_t N);

/// Even orthogonal Schur Laurent polynomial as a bialternant with the
/// prefactor 2(-1)^{N(N-1)/2}. Numerator entries are
/// x_i^{-(la_j + N - j)} + x_i^{la_j + N - j}, except that the last column
/// keeps a single copy when la_N = 0 (the two monomials coincide there).
/// N = 1 is rejected: the degenerate bialternant disagrees with the
/// determinant formula, which is treated as normative.
LaurentPoly o_bialt(const GeneralizedPartition& la, std::size_t N);

} // namespace schurlab
