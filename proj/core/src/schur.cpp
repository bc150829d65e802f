#include "schurlab/schur.hpp"

#include <algorithm>

#include "schurlab/determinant.hpp"

namespace schurlab {

LaurentPoly schur_jt(const GeneralizedPartition& la, const Alphabet& alphabet) {
    const std::size_t N = alphabet.n_vars;
    const std::size_t k = std::max(la.length(), N);
    if (k == 0) return LaurentPoly::one(N);
    PolyMatrix m(k, std::vector<LaurentPoly>(k, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j)
            m[i - 1][j - 1] = h_value(la.part(i) - static_cast<long long>(i) + j, alphabet);
    return det(m);
}

LaurentPoly schur_jt(const GeneralizedPartition& la, std::size_t N) {
    return schur_jt(la, Alphabet::plain(N));
}

LaurentPoly skew_schur_jt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                          const Alphabet& alphabet) {
    const std::size_t N = alphabet.n_vars;
    const std::size_t k = std::max(la.length(), mu.length());
    if (k == 0) return LaurentPoly::one(N);
    PolyMatrix m(k, std::vector<LaurentPoly>(k, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j)
            m[i - 1][j - 1] =
                h_value(la.part(i) - mu.part(j) - static_cast<long long>(i) + j, alphabet);
    return det(m);
}

LaurentPoly skew_schur_jt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                          std::size_t N) {
    return skew_schur_jt(la, mu, Alphabet::plain(N));
}

namespace {

// All alpha of the given length with prev < alpha and alpha contained in
// top, in ascending lexicographic order.
void grow_rec(const GeneralizedPartition& prev, const GeneralizedPartition& top, std::size_t len,
              std::vector<int>& prefix, std::vector<GeneralizedPartition>& out) {
    const std::size_t j = prefix.size() + 1;
    if (j > len) {
        out.emplace_back(GeneralizedPartition(prefix));
        return;
    }
    int upper = top.part(j);
    if (j >= 2) upper = std::min(upper, prev.part(j - 1));
    const int lower = prev.part(j);
    for (int a = lower; a <= upper; ++a) {
        prefix.push_back(a);
        grow_rec(prev, top, len, prefix, out);
        prefix.pop_back();
    }
}

void chain_sum_rec(const GeneralizedPartition& prev, const GeneralizedPartition& la,
                   std::size_t step, std::size_t N, const Monomial& weight, LaurentPoly& acc) {
    if (step == N) {
        if (interlaces(prev, la)) {
            std::vector<int> e(weight.exponents());
            e[N - 1] += static_cast<int>(la.weight() - prev.weight());
            acc += LaurentPoly::term(Monomial(std::move(e)), 1);
        }
        return;
    }
    std::vector<GeneralizedPartition> nexts;
    std::vector<int> prefix;
    grow_rec(prev, la, prev.length() + 1, prefix, nexts);
    for (const auto& w : nexts) {
        std::vector<int> e(weight.exponents());
        e[step - 1] += static_cast<int>(w.weight() - prev.weight());
        chain_sum_rec(w, la, step + 1, N, Monomial(std::move(e)), acc);
    }
}

} // namespace

LaurentPoly skew_schur_gt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                          std::size_t N) {
    const GeneralizedPartition lam = la.normalized();
    const GeneralizedPartition m = mu.normalized();
    LaurentPoly acc(N);
    if (N == 0) return lam == m ? LaurentPoly::one(0) : acc;
    if (lam.length() > m.length() + N || !contains(m, lam)) return acc;
    const GeneralizedPartition top = lam.padded(m.length() + N);
    chain_sum_rec(m, top, 1, N, Monomial::unit(N), acc);
    return acc;
}

} // namespace schurlab
