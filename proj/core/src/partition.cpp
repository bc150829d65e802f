#include "schurlab/partition.hpp"

#include <algorithm>
#include <string>

namespace schurlab {

GeneralizedPartition::GeneralizedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("GeneralizedPartition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("GeneralizedPartition: parts must be weakly decreasing");
    }
}

long long GeneralizedPartition::weight() const {
    long long w = 0;
    for (int p : parts_) w += p;
    return w;
}

std::size_t GeneralizedPartition::nonzero_length() const {
    std::size_t n = parts_.size();
    while (n > 0 && parts_[n - 1] == 0) --n;
    return n;
}

GeneralizedPartition GeneralizedPartition::normalized() const {
    std::vector<int> p(parts_.begin(), parts_.begin() + nonzero_length());
    return GeneralizedPartition(std::move(p));
}

GeneralizedPartition GeneralizedPartition::padded(std::size_t len) const {
    if (len < parts_.size())
        throw std::invalid_argument("GeneralizedPartition::padded: shorter than current length");
    std::vector<int> p(parts_);
    p.resize(len, 0);
    return GeneralizedPartition(std::move(p));
}

bool interlaces(const GeneralizedPartition& nu, const GeneralizedPartition& la) {
    const std::size_t top = std::max(nu.length(), la.length());
    for (std::size_t i = 1; i <= top; ++i) {
        if (la.part(i) < nu.part(i)) return false;
        if (nu.part(i) < la.part(i + 1)) return false;
    }
    return true;
}

bool contains(const GeneralizedPartition& mu, const GeneralizedPartition& la) {
    for (std::size_t i = 1; i <= mu.length(); ++i)
        if (la.part(i) < mu.part(i)) return false;
    return true;
}

std::vector<GeneralizedPartition> enumerate_between(const GeneralizedPartition& lo,
                                                    const GeneralizedPartition& hi,
                                                    std::size_t len) {
    std::vector<GeneralizedPartition> out;
    // Out-of-range interlacing conditions force these length caps.
    if (hi.nonzero_length() > len + 1 || lo.nonzero_length() > len) return out;
    std::vector<int> lower(len), upper(len);
    for (std::size_t j = 1; j <= len; ++j) {
        lower[j - 1] = std::max(hi.part(j + 1), lo.part(j));
        upper[j - 1] = hi.part(j);
        if (j >= 2) upper[j - 1] = std::min(upper[j - 1], lo.part(j - 1));
        if (lower[j - 1] > upper[j - 1]) return out;
    }
    // The per-position ranges are independent; weak decrease follows from
    // the lo-derived bounds. Odometer walk in ascending lexicographic order.
    std::vector<int> cur(lower);
    if (len == 0) {
        out.emplace_back();
        return out;
    }
    while (true) {
        out.emplace_back(GeneralizedPartition(cur));
        std::size_t j = len;
        while (j > 0 && cur[j - 1] == upper[j - 1]) {
            cur[j - 1] = lower[j - 1];
            --j;
        }
        if (j == 0) break;
        ++cur[j - 1];
    }
    return out;
}

namespace {

// All beta of the given length with beta < hi (interlacing) and mu inside
// beta, ascending lexicographic. Weak decrease is enforced through the
// running upper bound.
void below_rec(const GeneralizedPartition& hi, const GeneralizedPartition& mu, std::size_t len,
               std::vector<int>& prefix, std::vector<GeneralizedPartition>& out) {
    const std::size_t j = prefix.size() + 1;
    if (j > len) {
        out.emplace_back(GeneralizedPartition(prefix));
        return;
    }
    int upper = hi.part(j);
    if (j >= 2) upper = std::min(upper, prefix[j - 2]);
    const int lower = std::max(hi.part(j + 1), mu.part(j));
    for (int a = lower; a <= upper; ++a) {
        prefix.push_back(a);
        below_rec(hi, mu, len, prefix, out);
        prefix.pop_back();
    }
}

std::vector<GeneralizedPartition> interlacing_below(const GeneralizedPartition& hi,
                                                    const GeneralizedPartition& mu,
                                                    std::size_t len) {
    std::vector<GeneralizedPartition> out;
    if (hi.nonzero_length() > len + 1) return out;
    std::vector<int> prefix;
    below_rec(hi, mu, len, prefix, out);
    return out;
}

void chains_rec(const GeneralizedPartition& mu, std::size_t l, std::size_t k,
                std::vector<GeneralizedPartition>& steps, std::vector<GTChain>& out,
                std::size_t halfsteps) {
    if (k == 0) {
        out.push_back(GTChain{steps, l, halfsteps});
        return;
    }
    const std::size_t len = l + (k + 1) / 2;
    const auto candidates = (k == 1) ? enumerate_between(mu, steps[k + 1], len)
                                     : interlacing_below(steps[k + 1], mu, len);
    for (const auto& c : candidates) {
        steps[k] = c;
        chains_rec(mu, l, k - 1, steps, out, halfsteps);
    }
}

} // namespace

std::vector<GTChain> enumerate_gt_chains(const GeneralizedPartition& mu,
                                         const GeneralizedPartition& la, std::size_t halfsteps) {
    const std::size_t l = mu.length();
    if (la.length() != l + halfsteps)
        throw LengthMismatch("enumerate_gt_chains: length(la) = " + std::to_string(la.length()) +
                             " but length(mu) + N = " + std::to_string(l + halfsteps));
    std::vector<GTChain> out;
    if (!contains(mu, la)) return out;
    std::vector<GeneralizedPartition> steps(2 * halfsteps + 1);
    steps[0] = mu;
    steps[2 * halfsteps] = la;
    if (halfsteps == 0) {
        if (mu == la) out.push_back(GTChain{steps, l, 0});
        return out;
    }
    chains_rec(mu, l, 2 * halfsteps - 1, steps, out, halfsteps);
    return out;
}

namespace {

void partitions_rec(long long remaining, std::size_t slots, int bound, std::vector<int>& prefix,
                    std::vector<GeneralizedPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(GeneralizedPartition(prefix));
        return;
    }
    if (slots == 0) return;
    const int hi = static_cast<int>(std::min<long long>(remaining, bound));
    for (int a = hi; a >= 1; --a) {
        if (static_cast<long long>(a) * static_cast<long long>(slots) < remaining) break;
        prefix.push_back(a);
        partitions_rec(remaining - a, slots - 1, a, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<GeneralizedPartition> partitions_up_to(std::size_t max_len, long long max_weight) {
    std::vector<GeneralizedPartition> out;
    for (long long w = 0; w <= max_weight; ++w) {
        std::vector<int> prefix;
        partitions_rec(w, max_len, static_cast<int>(w), prefix, out);
    }
    return out;
}

std::vector<GeneralizedPartition> padded_partitions(std::size_t len, long long max_weight) {
    std::vector<GeneralizedPartition> out;
    for (const auto& p : partitions_up_to(len, max_weight)) out.push_back(p.padded(len));
    return out;
}

namespace {

void contained_rec(const GeneralizedPartition& la, std::size_t len, std::vector<int>& prefix,
                   std::vector<GeneralizedPartition>& out) {
    const std::size_t j = prefix.size() + 1;
    if (j > len) {
        out.emplace_back(GeneralizedPartition(prefix));
        return;
    }
    int upper = la.part(j);
    if (j >= 2) upper = std::min(upper, prefix[j - 2]);
    for (int a = 0; a <= upper; ++a) {
        prefix.push_back(a);
        contained_rec(la, len, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<GeneralizedPartition> contained_partitions(const GeneralizedPartition& la,
                                                       std::size_t len) {
    std::vector<GeneralizedPartition> out;
    std::vector<int> prefix;
    contained_rec(la, len, prefix, out);
    return out;
}

} // namespace schurlab
