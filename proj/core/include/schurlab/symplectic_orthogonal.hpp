#pragma once

#include "schurlab/laurent.hpp"
#include "schurlab/partition.hpp"

namespace schurlab {

/// Symplectic Schur Laurent polynomial by the determinant
/// (1/2) det(h_{la_i-i+j}(x^±) + h_{la_i-i-j+2}(x^±)) of size N.
/// The half always clears; NonIntegerResult otherwise.
LaurentPoly sp_jt(const GeneralizedPartition& la, std::size_t N);

/// Even orthogonal Schur Laurent polynomial by the determinant
/// det(h_{la_i-i+j}(x^±) - h_{la_i-i-j}(x^±)) of size N.
LaurentPoly o_jt(const GeneralizedPartition& la, std::size_t N);

/// Skew symplectic Schur function as an (l+N)x(l+N) determinant, where
/// l = length(mu). Columns j <= l+1 carry h_{la_i - mu_j - i + j}(x^±)
/// (with mu_{l+1} read as 0); columns j >= l+2 carry
/// h_{la_i-i+j}(x^±) + h_{la_i-i-j+2l+2}(x^±).
/// Lengths are strict: length(la) must equal length(mu) + N. Trailing
/// zeros are significant and never added silently.
LaurentPoly skew_sp_jt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                       std::size_t N);

/// Skew orthogonal analogue: columns j <= l carry h_{la_i - mu_j - i + j},
/// columns j >= l+1 carry h_{la_i-i+j}(x^±) - h_{la_i-i-j+2l}(x^±).
LaurentPoly skew_o_jt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                      std::size_t N);

/// Skew symplectic Schur function as a sum over pattern chains
/// mu = z_0 < ... < z_{2N} = la with weights
/// x_i^{2|z_{2i-1}| - |z_{2i}| - |z_{2i-2}|}.
LaurentPoly skew_sp_gt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                       std::size_t N);

/// Skew orthogonal analogue. Chains additionally satisfy
/// z_{2i-1, l+i} in {0, min(z_{2i, l+i}, z_{2i-2, l+i-1})} and each
/// variable contributes the multiplicity 1 + [z_{2i,l+i} > 0][z_{2i-2,l+i-1} = 0].
/// At the l = 0, i = 1 boundary the missing part of z_0 drops both the min
/// bound and the doubling.
LaurentPoly skew_o_gt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                      std::size_t N);

/// One-variable skew symplectic value by direct enumeration of the middle
/// partition: sum of t^{2|alpha| - |la| - |nu|} over nu < alpha < la.
/// Requires length(la) == length(nu) + 1. Kept independent of both the
/// determinant and the general chain routes.
LaurentPoly sp_single_var(const GeneralizedPartition& la, const GeneralizedPartition& nu);

/// One-variable skew orthogonal value: same enumeration restricted to
/// alpha_{l+1} in {0, min(la_{l+1}, nu_l)} with the doubling factor
/// 1 + [la_{l+1} > 0][nu_l = 0].
LaurentPoly o_single_var(const GeneralizedPartition& la, const GeneralizedPartition& nu);

/// The symmetric rational function pairing with the skew families in the
/// Cauchy-type identities: an (l+N)x(l+N) determinant divided by the NxN
/// Vandermonde det(x_i^{N-j}). Rows i <= N carry monomials x_i^{la_j-j+N};
/// rows i > N carry h_{mu_{i-N} - la_j + j - i}(x^±).
/// Requires length(la) == length(mu) + N.
RationalFn sstar(const GeneralizedPartition& la, const GeneralizedPartition& mu, std::size_t N);

/// The numerator determinant of sstar before the Vandermonde division.
/// Both sides of the skew Cauchy comparison clear the same Vandermonde, so
/// the truncated checks work on this directly.
LaurentPoly sstar_det(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                      std::size_t N);

} // namespace schurlab
