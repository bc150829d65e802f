#include "schurlab/homogeneous.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace schurlab {

namespace {

// h_m over a prefix of letters satisfies
//   h_m(letters 1..v) = h_m(letters 1..v-1) + letter_v * h_{m-1}(letters 1..v),
// which fills a table column by column. Letters are x_1, x_2, ... for the
// plain alphabet and x_1, x_1^{-1}, x_2, x_2^{-1}, ... for the doubled one.
LaurentPoly h_compute(long long n, std::size_t N, bool doubled) {
    const std::size_t letters = doubled ? 2 * N : N;
    std::vector<LaurentPoly> row(static_cast<std::size_t>(n) + 1, LaurentPoly::zero(N));
    row[0] = LaurentPoly::one(N);
    for (std::size_t letter = 0; letter < letters; ++letter) {
        const std::size_t var = doubled ? letter / 2 : letter;
        const int power = doubled && letter % 2 == 1 ? -1 : 1;
        const LaurentPoly x = LaurentPoly::variable(N, var, power);
        for (long long m = 1; m <= n; ++m)
            row[static_cast<std::size_t>(m)] += x * row[static_cast<std::size_t>(m - 1)];
    }
    return row[static_cast<std::size_t>(n)];
}

LaurentPoly h_cached(long long n, std::size_t N, bool doubled) {
    if (n < 0) return LaurentPoly::zero(N);
    if (n == 0) return LaurentPoly::one(N);
    static std::mutex mx;
    static std::map<std::tuple<bool, long long, std::size_t>, LaurentPoly> cache;
    const auto key = std::make_tuple(doubled, n, N);
    {
        std::lock_guard lock(mx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    LaurentPoly value = h_compute(n, N, doubled);
    std::lock_guard lock(mx);
    return cache.emplace(key, std::move(value)).first->second;
}

} // namespace

LaurentPoly h_plain(long long n, std::size_t N) { return h_cached(n, N, false); }

LaurentPoly h_sympl(long long n, std::size_t N) { return h_cached(n, N, true); }

LaurentPoly h_value(long long n, const Alphabet& a) { return h_cached(n, a.n_vars, a.doubled); }

} // namespace schurlab
