#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "schurlab/errors.hpp"

namespace schurlab {

/// Weakly decreasing sequence of nonnegative integers. The length is part
/// of the identity: (2,1) and (2,1,0) are different values. Symplectic and
/// orthogonal skew functions are sensitive to that distinction; type-A
/// contexts strip the zeros first via normalized().
class GeneralizedPartition {
public:
    GeneralizedPartition() = default;
    explicit GeneralizedPartition(std::vector<int> parts);

    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// 1-based part access; indices past the length read 0.
    int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    int last_part() const { return parts_.empty() ? 0 : parts_.back(); }

    /// Sum of parts.
    long long weight() const;
    /// Number of nonzero parts.
    std::size_t nonzero_length() const;

    GeneralizedPartition normalized() const;
    GeneralizedPartition padded(std::size_t len) const;

    bool operator==(const GeneralizedPartition& o) const = default;
    std::strong_ordering operator<=>(const GeneralizedPartition& o) const {
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
};

/// nu interlaces la (nu < la in the pattern sense): la_i >= nu_i >= la_{i+1}
/// for every i, missing parts reading as 0.
bool interlaces(const GeneralizedPartition& nu, const GeneralizedPartition& la);

/// Containment mu within la: la_i >= mu_i for every i.
bool contains(const GeneralizedPartition& mu, const GeneralizedPartition& la);

/// Every alpha of the requested length with lo < alpha and alpha < hi
/// (interlacing on both sides), in ascending lexicographic order.
std::vector<GeneralizedPartition> enumerate_between(const GeneralizedPartition& lo,
                                                    const GeneralizedPartition& hi,
                                                    std::size_t len);

/// A pattern chain z_0 < z_1 < ... < z_{2N}, where z_k has length
/// base_length + ceil(k/2) and consecutive steps interlace.
struct GTChain {
    std::vector<GeneralizedPartition> steps;
    std::size_t base_length = 0;
    std::size_t halfsteps = 0; // N; the chain has 2N+1 entries
};

/// All chains from mu up to la with N variable steps (2N half-steps).
/// Requires length(la) == length(mu) + N; empty when mu is not contained
/// in la.
std::vector<GTChain> enumerate_gt_chains(const GeneralizedPartition& mu,
                                         const GeneralizedPartition& la, std::size_t halfsteps);

/// All ordinary partitions (no trailing zeros) with length <= max_len and
/// weight <= max_weight, ordered by weight and then lexicographically
/// decreasing within a weight.
std::vector<GeneralizedPartition> partitions_up_to(std::size_t max_len, long long max_weight);

/// All generalized partitions of exactly the given length with weight
/// <= max_weight (partitions_up_to zero-padded to the length).
std::vector<GeneralizedPartition> padded_partitions(std::size_t len, long long max_weight);

/// All generalized partitions of exactly the given length contained in la.
std::vector<GeneralizedPartition> contained_partitions(const GeneralizedPartition& la,
                                                       std::size_t len);

} // namespace schurlab
