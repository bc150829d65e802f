#pragma once

#include <cstddef>

#include "schurlab/laurent.hpp"

namespace schurlab {

/// A variable alphabet. `doubled` means each x_i is accompanied by its
/// inverse x_i^{-1}; the pair is realized as signed exponents on the same
/// symbol, so the ring arity stays n_vars.
struct Alphabet {
    std::size_t n_vars = 0;
    bool doubled = false;

    static Alphabet plain(std::size_t n) { return {n, false}; }
    static Alphabet doubled_of(std::size_t n) { return {n, true}; }
};

/// Complete homogeneous polynomial of degree n in x_1..x_N; 0 for n < 0,
/// 1 for n = 0. Memoized per (n, N) for the current process.
LaurentPoly h_plain(long long n, std::size_t N);

/// Complete homogeneous polynomial of degree n in the 2N letters
/// {x_i, x_i^{-1}}; 0 for n < 0. Memoized per (n, N).
LaurentPoly h_sympl(long long n, std::size_t N);

LaurentPoly h_value(long long n, const Alphabet& a);

} // namespace schurlab
