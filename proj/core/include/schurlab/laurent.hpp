#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schurlab/errors.hpp"

namespace schurlab {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps the canonical form for us:
/// positive denominator, gcd(|num|, den) = 1, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector of a Laurent monomial; one signed entry per variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {}

    static Monomial unit(std::size_t arity) { return Monomial(std::vector<int>(arity, 0)); }

    std::size_t arity() const { return exps_.size(); }
    int exponent(std::size_t v) const { return exps_[v]; }
    const std::vector<int>& exponents() const { return exps_; }

    Monomial times(const Monomial& o) const;
    Monomial over(const Monomial& o) const;

    /// Sum of exponents over a variable subset.
    long long degree_on(const std::vector<std::size_t>& vars) const;
    long long total_degree() const;

    bool operator==(const Monomial& o) const = default;
    /// Canonical order: lexicographic on the exponent vector, index 0 most
    /// significant.
    std::strong_ordering operator<=>(const Monomial& o) const {
        return exps_ <=> o.exps_;
    }

private:
    std::vector<int> exps_;
};

/// Sparse exact multivariate Laurent polynomial. Terms are kept sorted in
/// the canonical monomial order (ascending internally; serialization and
/// rendering walk them leading-term first), with no zero coefficients
/// stored. Immutable in style: every operation returns a fresh value, so
/// instances can be shared freely across threads.
class LaurentPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    explicit LaurentPoly(std::size_t arity = 0) : arity_(arity) {}

    static LaurentPoly zero(std::size_t arity) { return LaurentPoly(arity); }
    static LaurentPoly constant(std::size_t arity, const Rational& c);
    static LaurentPoly one(std::size_t arity) { return constant(arity, 1); }
    static LaurentPoly term(Monomial m, const Rational& c);
    /// The monomial x_index^power in an `arity`-variable ring.
    static LaurentPoly variable(std::size_t arity, std::size_t index, int power = 1);
    /// Builds from an unsorted term list (duplicates combined, zeros dropped).
    static LaurentPoly from_terms(std::size_t arity, std::vector<Term> terms);
    /// Fast path: `terms` must already be sorted ascending, combined, zero-free.
    static LaurentPoly from_terms_sorted(std::size_t arity, std::vector<Term> terms);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly scaled(const Rational& c) const;

    /// Exact quotient in the Laurent ring; throws NotDivisible when none
    /// exists. Implemented by leading-term elimination after shifting both
    /// operands into the polynomial cone.
    LaurentPoly exact_div(const LaurentPoly& divisor) const;

    /// Negates every exponent on the selected variables (x_i -> x_i^{-1}).
    LaurentPoly invert_vars(const std::vector<std::size_t>& vars) const;

    /// Drops every term whose total degree on `vars` exceeds `cap`.
    /// Requires all exponents on `vars` to be nonnegative.
    LaurentPoly truncate(const std::vector<std::size_t>& vars, long long cap) const;
    /// Same cut without the nonnegativity requirement (used internally when
    /// negative powers are expected to cancel across a sum).
    LaurentPoly truncate_keep_negative(const std::vector<std::size_t>& vars, long long cap) const;

    /// Variable relabeling: old variable v becomes variable perm[v].
    LaurentPoly permute_vars(const std::vector<std::size_t>& perm) const;

    /// Embeds into a larger ring: old variable v maps to slot slots[v].
    LaurentPoly embed(std::size_t new_arity, const std::vector<std::size_t>& slots) const;

    bool has_integer_coefficients() const;
    long long min_degree_on(const std::vector<std::size_t>& vars) const;
    long long max_degree_on(const std::vector<std::size_t>& vars) const;

private:
    std::size_t arity_ = 0;
    std::vector<Term> terms_;

    void check_same_arity(const LaurentPoly& o, const char* op) const;
};

inline LaurentPoly operator*(const LaurentPoly& p, const Rational& c) { return p.scaled(c); }
inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p.scaled(c); }

/// Reduced pair of Laurent polynomials. Canonical form: when the denominator
/// divides the numerator exactly, the value is stored with denominator 1.
class RationalFn {
public:
    RationalFn() : num_(0), den_(LaurentPoly::one(0)) {}
    RationalFn(LaurentPoly num, LaurentPoly den);
    static RationalFn from_poly(LaurentPoly p);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_polynomial() const;

    /// Equality by cross-multiplication; no normal-form GCD is computed.
    bool operator==(const RationalFn& o) const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace schurlab
