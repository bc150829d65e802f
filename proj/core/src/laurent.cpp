#include "schurlab/laurent.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace schurlab {

Monomial Monomial::times(const Monomial& o) const {
    std::vector<int> e(exps_);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += o.exps_[v];
    return Monomial(std::move(e));
}

Monomial Monomial::over(const Monomial& o) const {
    std::vector<int> e(exps_);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] -= o.exps_[v];
    return Monomial(std::move(e));
}

long long Monomial::degree_on(const std::vector<std::size_t>& vars) const {
    long long d = 0;
    for (std::size_t v : vars) d += exps_[v];
    return d;
}

long long Monomial::total_degree() const {
    long long d = 0;
    for (int e : exps_) d += e;
    return d;
}

void LaurentPoly::check_same_arity(const LaurentPoly& o, const char* op) const {
    if (arity_ != o.arity_)
        throw ArityMismatch(std::string(op) + ": arities " + std::to_string(arity_) + " and " +
                            std::to_string(o.arity_) + " differ");
}

LaurentPoly LaurentPoly::constant(std::size_t arity, const Rational& c) {
    LaurentPoly p(arity);
    if (c != 0) p.terms_.emplace_back(Monomial::unit(arity), c);
    return p;
}

LaurentPoly LaurentPoly::term(Monomial m, const Rational& c) {
    LaurentPoly p(m.arity());
    if (c != 0) p.terms_.emplace_back(std::move(m), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t arity, std::size_t index, int power) {
    std::vector<int> e(arity, 0);
    e[index] = power;
    return term(Monomial(std::move(e)), 1);
}

LaurentPoly LaurentPoly::from_terms(std::size_t arity, std::vector<Term> terms) {
    std::map<Monomial, Rational> acc;
    for (auto& [m, c] : terms) {
        auto [it, fresh] = acc.emplace(std::move(m), c);
        if (!fresh) it->second += c;
    }
    LaurentPoly p(arity);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
    return r;
}

namespace {

LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    LaurentPoly r(a.arity());
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.term_count() + b.term_count());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            out.emplace_back(ib->first, subtract ? Rational(-ib->second) : ib->second);
            ++ib;
        } else {
            Rational c = subtract ? Rational(ia->second - ib->second) : Rational(ia->second + ib->second);
            if (c != 0) out.emplace_back(ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    return LaurentPoly::from_terms_sorted(a.arity(), std::move(out));
}

} // namespace

LaurentPoly LaurentPoly::from_terms_sorted(std::size_t arity, std::vector<Term> terms) {
    LaurentPoly p(arity);
    p.terms_ = std::move(terms);
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_arity(b, "add");
    return merge(a, b, false);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_arity(b, "sub");
    return merge(a, b, true);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_arity(b, "mul");
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.arity());
    std::map<Monomial, Rational> acc;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma.times(mb);
            auto [it, fresh] = acc.emplace(std::move(m), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    std::vector<LaurentPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.emplace_back(m, std::move(c));
    return LaurentPoly::from_terms_sorted(a.arity(), std::move(out));
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0) return LaurentPoly(arity_);
    LaurentPoly r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, k] : terms_) r.terms_.emplace_back(m, k * c);
    return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
    check_same_arity(divisor, "exact_div");
    if (divisor.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    if (is_zero()) return LaurentPoly(arity_);

    const std::size_t n = arity_;

    // Shift both operands into the polynomial cone: per-variable minimum
    // exponent becomes 0. Exactness is preserved, and the quotient of the
    // shifted polynomials is itself an honest polynomial.
    auto min_exps = [n](const LaurentPoly& p) {
        std::vector<int> mins(n, 0);
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            for (std::size_t v = 0; v < n; ++v)
                mins[v] = first ? m.exponent(v) : std::min(mins[v], m.exponent(v));
            first = false;
        }
        return mins;
    };
    const std::vector<int> shift_a = min_exps(*this);
    const std::vector<int> shift_b = min_exps(divisor);

    std::map<Monomial, Rational> rem;
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(m.exponents());
        for (std::size_t v = 0; v < n; ++v) e[v] -= shift_a[v];
        rem.emplace(Monomial(std::move(e)), c);
    }
    std::vector<Term> div_terms;
    div_terms.reserve(divisor.term_count());
    for (const auto& [m, c] : divisor.terms()) {
        std::vector<int> e(m.exponents());
        for (std::size_t v = 0; v < n; ++v) e[v] -= shift_b[v];
        div_terms.emplace_back(Monomial(std::move(e)), c);
    }
    const Monomial& lead_b = div_terms.back().first;
    const Rational& lead_b_coeff = div_terms.back().second;

    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto lt = std::prev(rem.end());
        std::vector<int> qe(lt->first.exponents());
        for (std::size_t v = 0; v < n; ++v) {
            qe[v] -= lead_b.exponent(v);
            if (qe[v] < 0) throw NotDivisible("exact_div: no quotient in the Laurent ring");
        }
        Monomial qm(std::move(qe));
        Rational qc = lt->second / lead_b_coeff;
        for (const auto& [m, c] : div_terms) {
            Monomial target = qm.times(m);
            auto [it, fresh] = rem.emplace(std::move(target), -qc * c);
            if (!fresh) {
                it->second -= qc * c;
                if (it->second == 0) rem.erase(it);
            } else if (it->second == 0) {
                rem.erase(it);
            }
        }
        quotient.emplace_back(std::move(qm), std::move(qc));
    }

    // Undo the shifts: q = x^{shift_a - shift_b} * (A / B).
    std::vector<Term> out;
    out.reserve(quotient.size());
    for (auto& [m, c] : quotient) {
        std::vector<int> e(m.exponents());
        for (std::size_t v = 0; v < n; ++v) e[v] += shift_a[v] - shift_b[v];
        out.emplace_back(Monomial(std::move(e)), std::move(c));
    }
    return from_terms(n, std::move(out));
}

LaurentPoly LaurentPoly::invert_vars(const std::vector<std::size_t>& vars) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(m.exponents());
        for (std::size_t v : vars) e[v] = -e[v];
        out.emplace_back(Monomial(std::move(e)), c);
    }
    return from_terms(arity_, std::move(out));
}

LaurentPoly LaurentPoly::truncate(const std::vector<std::size_t>& vars, long long cap) const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        for (std::size_t v : vars)
            if (m.exponent(v) < 0)
                throw NegativeExponentInGrading("truncate: negative exponent on graded variable " +
                                                std::to_string(v));
    }
    return truncate_keep_negative(vars, cap);
}

LaurentPoly LaurentPoly::truncate_keep_negative(const std::vector<std::size_t>& vars,
                                                long long cap) const {
    LaurentPoly r(arity_);
    for (const auto& t : terms_)
        if (t.first.degree_on(vars) <= cap) r.terms_.push_back(t);
    return r;
}

LaurentPoly LaurentPoly::permute_vars(const std::vector<std::size_t>& perm) const {
    return embed(arity_, perm);
}

LaurentPoly LaurentPoly::embed(std::size_t new_arity, const std::vector<std::size_t>& slots) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(new_arity, 0);
        for (std::size_t v = 0; v < arity_; ++v) e[slots[v]] = m.exponent(v);
        out.emplace_back(Monomial(std::move(e)), c);
    }
    return from_terms(new_arity, std::move(out));
}

bool LaurentPoly::has_integer_coefficients() const {
    for (const auto& [m, c] : terms_) {
        (void)m;
        if (denominator(c) != 1) return false;
    }
    return true;
}

long long LaurentPoly::min_degree_on(const std::vector<std::size_t>& vars) const {
    long long best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        long long d = m.degree_on(vars);
        best = first ? d : std::min(best, d);
        first = false;
    }
    return best;
}

long long LaurentPoly::max_degree_on(const std::vector<std::size_t>& vars) const {
    long long best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        long long d = m.degree_on(vars);
        best = first ? d : std::max(best, d);
        first = false;
    }
    return best;
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
    try {
        num_ = num_.exact_div(den_);
        den_ = LaurentPoly::one(den_.arity());
    } catch (const NotDivisible&) {
        // keep the pair as given
    }
}

RationalFn RationalFn::from_poly(LaurentPoly p) {
    RationalFn f;
    f.num_ = std::move(p);
    f.den_ = LaurentPoly::one(f.num_.arity());
    return f;
}

bool RationalFn::is_polynomial() const {
    return den_ == LaurentPoly::one(den_.arity());
}

bool RationalFn::operator==(const RationalFn& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

} // namespace schurlab
