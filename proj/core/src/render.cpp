#include "schurlab/render.hpp"

#include <sstream>

namespace schurlab {

namespace {

std::string var_name(const std::vector<std::string>& names, std::size_t v) {
    if (v < names.size()) return names[v];
    return "x" + std::to_string(v + 1);
}

std::string rational_str(const Rational& c) {
    std::ostringstream os;
    os << numerator(c).str();
    if (denominator(c) != 1) os << "/" << denominator(c).str();
    return os.str();
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t v = 0; v < m.arity(); ++v) {
        const int e = m.exponent(v);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(names, v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace

std::string to_text(const LaurentPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string s;
    const auto& terms = p.terms();
    // leading term first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        const Rational abs_c = negative ? Rational(-c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        const std::string mono = monomial_str(m, names);
        if (mono.empty()) {
            s += rational_str(abs_c);
        } else {
            if (abs_c != 1) s += rational_str(abs_c) + "*";
            s += mono;
        }
    }
    return s;
}

std::string to_text(const RationalFn& f, const std::vector<std::string>& names) {
    if (f.is_polynomial()) return to_text(f.num(), names);
    return "(" + to_text(f.num(), names) + ") / (" + to_text(f.den(), names) + ")";
}

std::string to_text(const GeneralizedPartition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + "]";
}

} // namespace schurlab
