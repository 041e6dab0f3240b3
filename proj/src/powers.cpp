#include "resint/powers.hpp"

#include <functional>

namespace resint {

void KoszulInput::validate() const {
    if (g < 1) throw ValidationError("koszul: g >= 1 required");
    if (r + 1 - g < 0) throw ValidationError("koszul: q = r+1-g must be nonnegative");
    if (degrees.size() != r + 1) throw ValidationError("koszul: need r+1 auxiliary degrees");
    int need = (q() - 1) / 2 + 1;
    if (static_cast<int>(knownPowers.size()) < need)
        throw ValidationError("koszul: known powers through p=" + std::to_string(need - 1) +
                              " required");
}

RationalSeries koszul_relation(int p, std::span<const RationalSeries> hSeries,
                               const DegreeList& degrees) {
    if (p < 0) throw ValidationError("koszul_relation: p >= 0 required");
    if (static_cast<int>(hSeries.size()) < p + 1)
        throw ValidationError("koszul_relation: homology series through H_p required");
    RationalSeries acc;
    for (int i = 0; i <= p; ++i) {
        RationalSeries term = hSeries[static_cast<size_t>(i)] * complete_sym(p - i, degrees);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

RationalSeries koszul_duality(const RationalSeries& hOpposite, const Int& a, int dimQuotient,
                              const DegreeList& degrees) {
    Int shift = a;
    for (int di : degrees.d) shift += di;
    if (!shift.fits_slong_p()) throw ValidationError("koszul_duality: weight shift overflow");
    RationalSeries img = substitute_inverse(hOpposite).shifted(shift.get_si());
    return dimQuotient % 2 == 0 ? img : -img;
}

std::vector<std::vector<Rat>> solve_all_powers(const KoszulInput& in, int pmax) {
    in.validate();
    const int q = in.q();
    const int half = (q - 1) / 2;
    if (q >= 1 && !in.assumeDuality)
        throw ValidationError("solve_all_powers: duality (2)_p required but not assumed");

    std::vector<RationalSeries> H(static_cast<size_t>(q) + 1);
    // triangular solve of (1)_p for the lower half (s_0 = 1)
    for (int p = 0; p <= half; ++p) {
        RationalSeries acc = in.knownPowers[static_cast<size_t>(p)];
        for (int i = 0; i < p; ++i) {
            RationalSeries term = H[static_cast<size_t>(i)] * complete_sym(p - i, in.degrees);
            acc = (i % 2 == 0) ? acc - term : acc + term;
        }
        H[static_cast<size_t>(p)] = (p % 2 == 0) ? acc : -acc;
    }
    // duality for the upper half
    for (int p = 0; p <= half; ++p) {
        if (q - p <= half) continue;  // q = 0: H_0 is already known
        H[static_cast<size_t>(q - p)] =
            koszul_duality(H[static_cast<size_t>(p)], in.aInvariant, in.dimQuotient, in.degrees);
    }
    // Euler relation (3): alternating sum equals Delta_{r+1} [[R]]
    RationalSeries euler = in.seriesR * delta_poly(in.degrees);
    if (q % 2 == 0 && q >= 2) {
        int mid = q / 2;
        RationalSeries acc = euler;
        for (int p = 0; p <= q; ++p) {
            if (p == mid) continue;
            RationalSeries term = H[static_cast<size_t>(p)];
            acc = (p % 2 == 0) ? acc - term : acc + term;
        }
        H[static_cast<size_t>(mid)] = (mid % 2 == 0) ? acc : -acc;
        // the middle must be self-dual up to level r
        RationalSeries img =
            koszul_duality(H[static_cast<size_t>(mid)], in.aInvariant, in.dimQuotient, in.degrees);
        if (!equiv_r(H[static_cast<size_t>(mid)], img, in.ambientN, in.r))
            throw InconsistencyError("solve_all_powers: middle Koszul homology not self-dual");
    } else {
        RationalSeries acc;
        for (int p = 0; p <= q; ++p) {
            RationalSeries term = H[static_cast<size_t>(p)];
            acc = (p % 2 == 0) ? acc + term : acc - term;
        }
        if (!equiv_r(acc, euler, in.ambientN, in.r))
            throw InconsistencyError("solve_all_powers: Euler relation violated");
    }
    // forward (1)_p
    std::vector<std::vector<Rat>> out;
    out.reserve(static_cast<size_t>(pmax) + 1);
    for (int p = 0; p <= pmax; ++p) {
        RationalSeries acc;
        for (int i = 0; i <= std::min(p, q); ++i) {
            RationalSeries term = H[static_cast<size_t>(i)] * complete_sym(p - i, in.degrees);
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        out.push_back(extended_coeffs(acc, in.ambientN, in.r));
    }
    return out;
}

namespace {

Rat gbinom_rat(long a, long k) { return Rat(binomial(Int(a), k)); }

void require_integer(const Rat& v, const char* what) {
    if (!is_integer(v))
        throw InconsistencyError(std::string("formulas_25: non-integer ") + what +
                                 " (inconsistent base coefficients)");
}

}  // namespace

std::array<Rat, 4> formulas_25(int g, const Formulas25Base& b, int p) {
    if (p < 0) throw ValidationError("formulas_25: p >= 0 required");
    if (g < 1) throw ValidationError("formulas_25: g >= 1 required");
    const long G = g, P = p;
    Rat e0 = gbinom_rat(G + P - 1, P) * b.e00;
    Rat e1 = G * gbinom_rat(G + P - 1, P - 1) * b.e00 +
             Rat(G + 2 * P) / Rat(G + P) * gbinom_rat(G + P, P) * b.e10;
    Rat e2 = Rat(G * (G + 1)) / 2 * gbinom_rat(G + P - 1, P - 2) * b.e00 +
             (G + 1) * gbinom_rat(G + P - 1, P - 2) * b.e10 -
             Rat((P - 1) * G) / Rat(G + P) * gbinom_rat(G + P + 1, P) * b.e20 +
             gbinom_rat(G + P, P - 1) * b.e21;
    Rat e3 = Rat(G * (G + 1) * (G + 2)) / 6 * gbinom_rat(G + P - 1, P - 3) * b.e00 -
             Rat((G + 1) * (G + 2)) / 2 * gbinom_rat(G + P - 1, P - 2) * b.e10 -
             (G + 2) * (G + P + 1) * gbinom_rat(G + P - 1, P - 2) * b.e20 +
             (G + 2) * gbinom_rat(G + P, P - 2) * b.e21 -
             Rat((P - 1) * (G + 2 * P)) / Rat(G + P) * gbinom_rat(G + P + 1, P) * b.e30 +
             Rat(G + 2 * P) / Rat(G + 2) * gbinom_rat(G + P, P - 1) * b.e31;
    std::array<Rat, 4> out{e0, e1, e2, e3};
    const char* names[4] = {"e_0(p)", "e_1(p)", "e_2(p)", "e_3(p)"};
    for (int i = 0; i < 4; ++i) require_integer(out[static_cast<size_t>(i)], names[i]);
    return out;
}

Int CIData::alpha1() const { return sigma_value(ciDegrees, 1) - g; }
Int CIData::alpha2() const {
    Int s1 = sigma_value(ciDegrees, 1);
    return s1 * s1 - 2 * sigma_value(ciDegrees, 2) - g;
}
Int CIData::alpha3() const {
    Int s1 = sigma_value(ciDegrees, 1);
    Int s2 = sigma_value(ciDegrees, 2);
    return s1 * s1 * s1 - 3 * s1 * s2 + 3 * sigma_value(ciDegrees, 3) - g;
}

std::array<Rat, 4> ci_base_coeffs(const CIData& data) {
    if (data.g < 1 || data.ciDegrees.size() != data.g)
        throw ValidationError("ci_base_coeffs: need g >= 1 degrees");
    Rat sg(sigma_value(data.ciDegrees, data.g));
    Rat a1(data.alpha1()), a2(data.alpha2());
    Rat e0 = sg;
    Rat e1 = sg / 2 * a1;
    Rat e2 = sg / 24 * (3 * a1 * a1 - 6 * a1 + a2);
    Rat e3 = sg / 48 * (a1 * a1 * a1 - 6 * a1 * a1 + 8 * a1 + a1 * a2 - 2 * a2);
    return {e0, e1, e2, e3};
}

Rat remark26_e3(const Rat& e0, const Rat& e1, const Rat& e2) {
    if (e0 == 0) throw ValidationError("remark26_e3: e0 must be nonzero");
    // sign calibrated against the alpha-forms of ci_base_coeffs; the commonly
    // printed display carries the opposite overall sign on the right-hand side
    return -e2 + e1 * e2 / e0 - e1 / 6 + e1 * e1 / (2 * e0) - e1 * e1 * e1 / (3 * e0 * e0);
}

DeWegerReport deweger_check(const DegreeList& a, const DegreeList& b) {
    if (a.size() != 4 || b.size() != 4)
        throw ValidationError("deweger_check: both lists must have length 4");
    DeWegerReport rep;
    for (int m = 1; m <= 4; ++m) {
        rep.sigmaA[static_cast<size_t>(m - 1)] = sigma_value(a, m);
        rep.sigmaB[static_cast<size_t>(m - 1)] = sigma_value(b, m);
    }
    rep.pattern = rep.sigmaA[0] == rep.sigmaB[0] && rep.sigmaA[1] == rep.sigmaB[1] &&
                  rep.sigmaA[3] == rep.sigmaB[3] && rep.sigmaA[2] != rep.sigmaB[2];
    auto baseA = ci_conormal_evec(a, 0, 3);
    auto baseB = ci_conormal_evec(b, 0, 3);
    for (int i = 0; i < 4; ++i) {
        rep.baseA[static_cast<size_t>(i)] = baseA[static_cast<size_t>(i)];
        rep.baseB[static_cast<size_t>(i)] = baseB[static_cast<size_t>(i)];
    }
    rep.e31A = ci_conormal_evec(a, 1, 3)[3];
    rep.e31B = ci_conormal_evec(b, 1, 3)[3];
    return rep;
}

RationalSeries ci_conormal_series(const DegreeList& gens, int p, int n) {
    int g = gens.size();
    if (g < 1) throw ValidationError("ci_conormal_series: empty regular sequence");
    LaurentPoly weights;  // sum over multisets of size p of t^{a.d}
    std::function<void(int, int, long)> rec = [&](int pos, int start, long acc) {
        if (pos == p) {
            weights.add_term(acc, 1);
            return;
        }
        for (int i = start; i < g; ++i) rec(pos + 1, i, acc + gens.d[static_cast<size_t>(i)]);
    };
    rec(0, 0, 0);
    return RationalSeries(delta_poly(gens) * weights, n);
}

std::vector<Rat> ci_conormal_evec(const DegreeList& gens, int p, int kmax) {
    int g = gens.size();
    // own-dimension normalization: the ambient cancels, any n >= g works
    RationalSeries s = ci_conormal_series(gens, p, g);
    return extended_coeffs(s, 0, kmax);
}

std::vector<Rat> ci_quotient_evec(const DegreeList& gens, int j, int kmax) {
    std::vector<Rat> acc(static_cast<size_t>(kmax) + 1, Rat(0));
    for (int p = 0; p < j; ++p) {
        auto v = ci_conormal_evec(gens, p, kmax);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
    }
    return acc;
}

}  // namespace resint
