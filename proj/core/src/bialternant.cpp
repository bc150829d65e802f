#include "schurlab/bialternant.hpp"

#include <string>

#include "schurlab/determinant.hpp"

namespace schurlab {

namespace {

GeneralizedPartition pad_to(const GeneralizedPartition& la, std::size_t N, const char* who) {
    GeneralizedPartition norm = la.normalized();
    if (norm.length() > N)
        throw LengthMismatch(std::string(who) + ": partition has " + std::to_string(norm.length()) +
                             " nonzero parts but only " + std::to_string(N) + " variables");
    return norm.padded(N);
}

} // namespace

LaurentPoly schur_bialt(const GeneralizedPartition& la, std::size_t N) {
    const GeneralizedPartition nu = pad_to(la, N, "schur_bialt");
    PolyMatrix num(N, std::vector<LaurentPoly>(N, LaurentPoly::zero(N)));
    PolyMatrix den(N, std::vector<LaurentPoly>(N, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= N; ++i) {
        for (std::size_t j = 1; j <= N; ++j) {
            const int k = static_cast<int>(N - j);
            num[i - 1][j - 1] = LaurentPoly::variable(N, i - 1, nu.part(j) + k);
            den[i - 1][j - 1] = LaurentPoly::variable(N, i - 1, k);
        }
    }
    return det(num).exact_div(det(den));
}

LaurentPoly sp_bialt(const GeneralizedPartition& la, std::size_t N) {
    const GeneralizedPartition nu = pad_to(la, N, "sp_bialt");
    auto entry = [N](std::size_t i, int exp) {
        return LaurentPoly::variable(N, i - 1, exp) - LaurentPoly::variable(N, i - 1, -exp);
    };
    PolyMatrix num(N, std::vector<LaurentPoly>(N, LaurentPoly::zero(N)));
    PolyMatrix den(N, std::vector<LaurentPoly>(N, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= N; ++i) {
        for (std::size_t j = 1; j <= N; ++j) {
            const int k = static_cast<int>(N - j + 1);
            num[i - 1][j - 1] = entry(i, nu.part(j) + k);
            den[i - 1][j - 1] = entry(i, k);
        }
    }
    return det(num).exact_div(det(den));
}

LaurentPoly o_bialt(const GeneralizedPartition& la, std::size_t N) {
    if (N == 1)
        throw UnsupportedArity("o_bialt: N = 1 is rejected; use the determinant route");
    const GeneralizedPartition nu = pad_to(la, N, "o_bialt");
    const bool halve_last = nu.part(N) == 0;
    PolyMatrix num(N, std::vector<LaurentPoly>(N, LaurentPoly::zero(N)));
    PolyMatrix den(N, std::vector<LaurentPoly>(N, LaurentPoly::zero(N)));
    for (std::size_t i = 1; i <= N; ++i) {
        for (std::size_t j = 1; j <= N; ++j) {
            const int kappa = nu.part(j) + static_cast<int>(N - j);
            LaurentPoly e = LaurentPoly::variable(N, i - 1, -kappa);
            if (!(halve_last && j == N)) e += LaurentPoly::variable(N, i - 1, kappa);
            num[i - 1][j - 1] = e;
            den[i - 1][j - 1] = LaurentPoly::variable(N, i - 1, -static_cast<int>(j) + 1) +
                                LaurentPoly::variable(N, i - 1, static_cast<int>(j) - 1);
        }
    }
    const Rational prefactor = (N * (N - 1) / 2) % 2 == 0 ? 2 : -2;
    return det(num).scaled(prefactor).exact_div(det(den));
}

} // namespace schurlab
