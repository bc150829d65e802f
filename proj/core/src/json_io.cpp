#include "schurlab/json_io.hpp"

namespace schurlab {

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    const auto& ts = p.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const auto& [m, c] = *it;
        terms.push_back({{"exp", m.exponents()},
                         {"num", numerator(c).str()},
                         {"den", denominator(c).str()}});
    }
    return {{"arity", p.arity()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    const std::size_t arity = j.at("arity").get<std::size_t>();
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
        std::vector<int> exps = t.at("exp").get<std::vector<int>>();
        if (exps.size() != arity)
            throw ArityMismatch("laurent_from_json: exponent vector length != arity");
        const Int num(t.at("num").get<std::string>());
        const Int den(t.at("den").get<std::string>());
        terms.emplace_back(Monomial(std::move(exps)), Rational(num, den));
    }
    return LaurentPoly::from_terms(arity, std::move(terms));
}

nlohmann::json to_json(const RationalFn& f) {
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFn rationalfn_from_json(const nlohmann::json& j) {
    return RationalFn(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

nlohmann::json to_json(const GeneralizedPartition& p) { return nlohmann::json(p.parts()); }

GeneralizedPartition partition_from_json(const nlohmann::json& j) {
    return GeneralizedPartition(j.get<std::vector<int>>());
}

} // namespace schurlab
