#pragma once

#include <random>
#include <string>

#include "solvquot/dsl.hpp"
#include "solvquot/pipeline.hpp"

namespace solvquot::testing {

inline ActionSpec spec_from(const std::string& text) { return dsl::parse(text); }

inline Poly P(const VarTableRef& tab, const std::string& expr) {
    return dsl::parse_expression(expr, tab);
}

inline Poly P(const ActionSpec& spec, const std::string& expr) {
    return dsl::parse_expression(expr, spec.table);
}

// Trivial localization (denominator 1) over the action's table.
inline DenomRef unit_denom(const VarTableRef& tab) {
    return make_denom(Poly::from_long(tab, 1));
}

inline Localized L(const VarTableRef& tab, const std::string& expr, const DenomRef& den) {
    return Localized::embed(P(tab, expr), den);
}

// Random sparse polynomial in the given variables, for property tests.
inline Poly random_poly(std::mt19937_64& rng, const VarTableRef& tab,
                        const std::vector<int>& vars, int max_terms = 4,
                        int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<long> coeff(-5, 5);
    Poly p = Poly::zero(tab);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(tab->size());
        for (int v : vars) m.set(v, expd(rng));
        p = p + Poly::monomial(tab, m, tab->field().from_long(coeff(rng) == 0 ? 1 : coeff(rng)));
    }
    return p;
}

} // namespace solvquot::testing
