#include "schurlab/determinant.hpp"

#include <string>

namespace schurlab {

namespace {

void validate(const PolyMatrix& m) {
    if (m.empty()) throw NonSquareMatrix("det: empty matrix");
    const std::size_t n = m.size();
    const std::size_t arity = m[0].empty() ? 0 : m[0][0].arity();
    for (const auto& row : m) {
        if (row.size() != n)
            throw NonSquareMatrix("det: " + std::to_string(n) + " rows but a row of length " +
                                  std::to_string(row.size()));
        for (const auto& e : row)
            if (e.arity() != arity) throw ArityMismatch("det: entries of mixed arity");
    }
}

LaurentPoly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t> cols, std::size_t row) {
    const std::size_t arity = m[0][0].arity();
    if (cols.size() == 1) return m[row][cols[0]];
    LaurentPoly acc(arity);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const LaurentPoly& pivot = m[row][cols[k]];
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        LaurentPoly minor = cofactor_rec(m, std::move(rest), row + 1);
        if (k % 2 == 0)
            acc += pivot * minor;
        else
            acc -= pivot * minor;
    }
    return acc;
}

} // namespace

LaurentPoly det_cofactor(const PolyMatrix& m) {
    validate(m);
    std::vector<std::size_t> cols(m.size());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return cofactor_rec(m, std::move(cols), 0);
}

LaurentPoly det_fraction_free(const PolyMatrix& input) {
    validate(input);
    PolyMatrix m = input;
    const std::size_t n = m.size();
    const std::size_t arity = m[0][0].arity();
    int sign = 1;
    LaurentPoly prev = LaurentPoly::one(arity);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return LaurentPoly::zero(arity);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = LaurentPoly::zero(arity);
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly det(const PolyMatrix& m) {
    validate(m);
    return m.size() <= 6 ? det_cofactor(m) : det_fraction_free(m);
}

} // namespace schurlab
