#ifndef RESINT_TESTS_IDEAL_FIXTURES_HPP
#define RESINT_TESTS_IDEAL_FIXTURES_HPP

#include "resint/oracle.hpp"

namespace resint::testutil {

inline IdealPresentation::Generator gen_of(int degree,
                                           std::vector<std::pair<Exponents, long>> terms) {
    IdealPresentation::Generator g;
    g.degree = degree;
    for (auto& [e, c] : terms) g.terms.emplace_back(e, Rat(c));
    return g;
}

// twisted cubic in P^3: 2x2 minors of [[x0,x1,x2],[x1,x2,x3]]
inline IdealPresentation twisted_cubic(FieldSpec field = {}) {
    IdealPresentation I;
    I.numVars = 4;
    I.field = field;
    I.gens.push_back(gen_of(2, {{{1, 0, 1, 0}, 1}, {{0, 2, 0, 0}, -1}}));  // x0x2 - x1^2
    I.gens.push_back(gen_of(2, {{{0, 1, 0, 1}, 1}, {{0, 0, 2, 0}, -1}}));  // x1x3 - x2^2
    I.gens.push_back(gen_of(2, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}}));  // x0x3 - x1x2
    return I;
}

// principal ideal (f) with f a dense-ish degree-2 form in numVars variables
inline IdealPresentation quadric_hypersurface(int numVars, FieldSpec field = {}) {
    IdealPresentation I;
    I.numVars = numVars;
    I.field = field;
    IdealPresentation::Generator g;
    g.degree = 2;
    for (int i = 0; i < numVars; ++i) {
        Exponents e(static_cast<size_t>(numVars), 0);
        e[static_cast<size_t>(i)] = 2;
        g.terms.emplace_back(e, Rat(i + 1));
    }
    Exponents mix(static_cast<size_t>(numVars), 0);
    if (numVars >= 2) {
        mix[0] = 1;
        mix[1] = 1;
        g.terms.emplace_back(mix, Rat(1));
    }
    I.gens.push_back(std::move(g));
    return I;
}

// exact twisted cubic power series [[R/I^j]] = N_j/(1-t)^2, j = 1..4
inline RationalSeries cubic_power_series(int j) {
    static const std::vector<std::vector<int>> nums = {
        {1, 2}, {1, 2, 3, 4, -1}, {1, 2, 3, 4, 5, 6, -3}, {1, 2, 3, 4, 5, 6, 7, 8, -6}};
    LaurentPoly n;
    const auto& v = nums[static_cast<size_t>(j - 1)];
    for (size_t e = 0; e < v.size(); ++e) n.add_term(static_cast<long>(e), v[e]);
    return RationalSeries(n, 2);
}

}  // namespace resint::testutil

#endif
