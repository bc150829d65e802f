#include "schurlab/symplectic_orthogonal.hpp"

#include <string>

#include "schurlab/determinant.hpp"
#include "schurlab/homogeneous.hpp"

namespace schurlab {

namespace {

GeneralizedPartition straight_pad(const GeneralizedPartition& la, std::size_t N, const char* who) {
    GeneralizedPartition norm = la.normalized();
    if (norm.length() > N)
        throw LengthMismatch(std::string(who) + ": partition has " + std::to_string(norm.length()) +
                             " nonzero parts but only " + std::to_string(N) + " variables");
    return norm.padded(N);
}

void require_lengths(const GeneralizedPartition& la, const GeneralizedPartition& mu, std::size_t N,
                     const char* who) {
    if (la.length() != mu.length() + N)
        throw LengthMismatch(std::string(who) + ": length(la) = " + std::to_string(la.length()) +
                             " must equal length(mu) + N = " + std::to_string(mu.length() + N));
}

} // namespace

LaurentPoly sp_jt(const GeneralizedPartition& la, std::size_t N) {
    const GeneralizedPartition nu = straight_pad(la, N, "sp_jt");
    PolyMatrix m(N, std::vector<LaurentPoly>(N, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= N; ++i) {
        for (std::size_t j = 1; j <= N; ++j) {
            const long long base = nu.part(i) - static_cast<long long>(i);
            m[i - 1][j - 1] = h_sympl(base + j, N) + h_sympl(base - static_cast<long long>(j) + 2, N);
        }
    }
    LaurentPoly value = det(m).scaled(Rational(1, 2));
    if (!value.has_integer_coefficients())
        throw NonIntegerResult("sp_jt: the half prefactor failed to clear");
    return value;
}

LaurentPoly o_jt(const GeneralizedPartition& la, std::size_t N) {
    const GeneralizedPartition nu = straight_pad(la, N, "o_jt");
    PolyMatrix m(N, std::vector<LaurentPoly>(N, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= N; ++i) {
        for (std::size_t j = 1; j <= N; ++j) {
            const long long base = nu.part(i) - static_cast<long long>(i);
            m[i - 1][j - 1] = h_sympl(base + j, N) - h_sympl(base - static_cast<long long>(j), N);
        }
    }
    return det(m);
}

LaurentPoly skew_sp_jt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                       std::size_t N) {
    require_lengths(la, mu, N, "skew_sp_jt");
    const std::size_t l = mu.length();
    const std::size_t k = l + N;
    PolyMatrix m(k, std::vector<LaurentPoly>(k, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= k; ++i) {
        const long long base = la.part(i) - static_cast<long long>(i);
        for (std::size_t j = 1; j <= k; ++j) {
            if (j <= l + 1) {
                m[i - 1][j - 1] = h_sympl(base - mu.part(j) + j, N);
            } else {
                m[i - 1][j - 1] = h_sympl(base + j, N) +
                                  h_sympl(base - static_cast<long long>(j) + 2 * l + 2, N);
            }
        }
    }
    return det(m);
}

LaurentPoly skew_o_jt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                      std::size_t N) {
    require_lengths(la, mu, N, "skew_o_jt");
    const std::size_t l = mu.length();
    const std::size_t k = l + N;
    PolyMatrix m(k, std::vector<LaurentPoly>(k, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= k; ++i) {
        const long long base = la.part(i) - static_cast<long long>(i);
        for (std::size_t j = 1; j <= k; ++j) {
            if (j <= l) {
                m[i - 1][j - 1] = h_sympl(base - mu.part(j) + j, N);
            } else {
                m[i - 1][j - 1] =
                    h_sympl(base + j, N) - h_sympl(base - static_cast<long long>(j) + 2 * l, N);
            }
        }
    }
    return det(m);
}

LaurentPoly skew_sp_gt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                       std::size_t N) {
    require_lengths(la, mu, N, "skew_sp_gt");
    LaurentPoly acc(N);
    for (const GTChain& chain : enumerate_gt_chains(mu, la, N)) {
        std::vector<int> e(N, 0);
        for (std::size_t i = 1; i <= N; ++i)
            e[i - 1] = static_cast<int>(2 * chain.steps[2 * i - 1].weight() -
                                        chain.steps[2 * i].weight() - chain.steps[2 * i - 2].weight());
        acc += LaurentPoly::term(Monomial(std::move(e)), 1);
    }
    return acc;
}

LaurentPoly skew_o_gt(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                      std::size_t N) {
    require_lengths(la, mu, N, "skew_o_gt");
    const std::size_t l = mu.length();
    LaurentPoly acc(N);
    for (const GTChain& chain : enumerate_gt_chains(mu, la, N)) {
        long long multiplicity = 1;
        bool admissible = true;
        for (std::size_t i = 1; i <= N && admissible; ++i) {
            const int tail = chain.steps[2 * i - 1].part(l + i);
            const int even_tail = chain.steps[2 * i].part(l + i);
            const bool below_exists = l + i >= 2; // z_{2i-2} has a part at index l+i-1
            if (below_exists) {
                const int below_tail = chain.steps[2 * i - 2].part(l + i - 1);
                if (tail != 0 && tail != std::min(even_tail, below_tail)) admissible = false;
                if (even_tail > 0 && below_tail == 0) multiplicity *= 2;
            } else {
                if (tail != 0 && tail != even_tail) admissible = false;
            }
        }
        if (!admissible) continue;
        std::vector<int> e(N, 0);
        for (std::size_t i = 1; i <= N; ++i)
            e[i - 1] = static_cast<int>(2 * chain.steps[2 * i - 1].weight() -
                                        chain.steps[2 * i].weight() - chain.steps[2 * i - 2].weight());
        acc += LaurentPoly::term(Monomial(std::move(e)), multiplicity);
    }
    return acc;
}

LaurentPoly sp_single_var(const GeneralizedPartition& la, const GeneralizedPartition& nu) {
    if (la.length() != nu.length() + 1)
        throw LengthMismatch("sp_single_var: length(la) must equal length(nu) + 1");
    LaurentPoly acc(1);
    const long long offset = la.weight() + nu.weight();
    for (const auto& alpha : enumerate_between(nu, la, nu.length() + 1))
        acc += LaurentPoly::variable(1, 0, static_cast<int>(2 * alpha.weight() - offset));
    return acc;
}

LaurentPoly o_single_var(const GeneralizedPartition& la, const GeneralizedPartition& nu) {
    if (la.length() != nu.length() + 1)
        throw LengthMismatch("o_single_var: length(la) must equal length(nu) + 1");
    const std::size_t l = nu.length();
    LaurentPoly acc(1);
    const long long offset = la.weight() + nu.weight();
    for (const auto& alpha : enumerate_between(nu, la, l + 1)) {
        const int tail = alpha.part(l + 1);
        long long multiplicity = 1;
        if (l >= 1) {
            if (tail != 0 && tail != std::min(la.part(l + 1), nu.part(l))) continue;
            if (la.part(l + 1) > 0 && nu.part(l) == 0) multiplicity = 2;
        } else {
            if (tail != 0 && tail != la.part(1)) continue;
        }
        acc += LaurentPoly::variable(1, 0, static_cast<int>(2 * alpha.weight() - offset))
                   .scaled(multiplicity);
    }
    return acc;
}

LaurentPoly sstar_det(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                      std::size_t N) {
    require_lengths(la, mu, N, "sstar");
    const std::size_t l = mu.length();
    const std::size_t k = l + N;
    PolyMatrix m(k, std::vector<LaurentPoly>(k, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= k; ++i) {
        for (std::size_t j = 1; j <= k; ++j) {
            if (i <= N) {
                m[i - 1][j - 1] = LaurentPoly::variable(
                    N, i - 1, la.part(j) - static_cast<int>(j) + static_cast<int>(N));
            } else {
                m[i - 1][j - 1] = h_sympl(
                    mu.part(i - N) - la.part(j) + static_cast<long long>(j) - static_cast<long long>(i),
                    N);
            }
        }
    }
    return det(m);
}

RationalFn sstar(const GeneralizedPartition& la, const GeneralizedPartition& mu, std::size_t N) {
    LaurentPoly numerator = sstar_det(la, mu, N);
    PolyMatrix v(N, std::vector<LaurentPoly>(N, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j)
            v[i - 1][j - 1] = LaurentPoly::variable(N, i - 1, static_cast<int>(N - j));
    return RationalFn(std::move(numerator), det(v));
}

} // namespace schurlab
