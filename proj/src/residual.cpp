#include "resint/residual.hpp"

#include <functional>

namespace resint {

namespace {

bool is_a_variant(SeriesVariant v) {
    return v == SeriesVariant::General14a || v == SeriesVariant::PolyRing15a;
}
bool is_poly_variant(SeriesVariant v) {
    return v == SeriesVariant::PolyRing15a || v == SeriesVariant::PolyRing15b;
}

}  // namespace

void ResidualInput::validate(SeriesVariant v) const {
    if (g < 1 || g > s) throw ValidationError("residual: need 1 <= g <= s");
    if (degrees.size() != s) throw ValidationError("residual: degree list length must be s");
    int need = s - g + (is_a_variant(v) ? 0 : 1);
    const auto& pw = is_poly_variant(v) ? quotientPowers : omegaPowers;
    if (static_cast<int>(pw.size()) < need)
        throw ValidationError(is_a_variant(v) ? "residual: power series through j=s-g required"
                                              : "residual: power series through j=s-g+1 required");
}

RationalSeries series_residual(SeriesVariant v, const ResidualInput& in) {
    in.validate(v);
    bool aform = is_a_variant(v);
    bool polyring = is_poly_variant(v);
    const auto& pw = polyring ? in.quotientPowers : in.omegaPowers;
    int jmax = in.s - in.g + (aform ? 0 : 1);

    RationalSeries rhs = in.seriesR * delta_poly(in.degrees);
    for (int j = 1; j <= jmax; ++j) {
        int m = aform ? in.g + j : in.g + j - 1;
        LaurentPoly sigma = elementary_sym(m, in.degrees);
        RationalSeries dual = substitute_inverse(pw[static_cast<size_t>(j - 1)]);
        RationalSeries term = dual * sigma;
        // -(-1)^{n-g}(-1)^{j} (14a), -(-1)^{n-g}(-1)^{j-1} (14b); the
        // polynomial-ring forms fold (-t)^{-n} = (-1)^n t^{-n} into the same parity
        if (polyring) term = term.shifted(-in.n);
        int parity = (in.n + in.g + j + (aform ? 0 : 1)) % 2;
        rhs = (parity == 0) ? rhs - term : rhs + term;
    }
    return rhs;
}

namespace {

bool is_a_coeff(CoeffVariant v) {
    return v == CoeffVariant::General19a || v == CoeffVariant::PolyRing110a;
}
bool is_poly_coeff(CoeffVariant v) {
    return v == CoeffVariant::PolyRing110a || v == CoeffVariant::PolyRing110b;
}

Rat vec_at(const std::vector<Rat>& v, long k) {
    return (k >= 0 && k < static_cast<long>(v.size())) ? v[static_cast<size_t>(k)] : Rat(0);
}

// sum over all size-m subsets T of the degree list of C(sum_T d + shift, bot)
Int subset_binomial_sum(const DegreeList& degrees, int m, long shift, long bot) {
    Int total = 0;
    int s = degrees.size();
    std::vector<int> idx(static_cast<size_t>(m));
    std::function<void(int, int, long)> rec = [&](int pos, int start, long dsum) {
        if (pos == m) {
            total += binomial(Int(dsum + shift), bot);
            return;
        }
        for (int i = start; i < s; ++i) rec(pos + 1, i + 1, dsum + degrees.d[static_cast<size_t>(i)]);
    };
    rec(0, 0, 0);
    return total;
}

}  // namespace

Rat coeff_residual(CoeffVariant v, const CoeffInput& in, int i) {
    if (in.g < 1 || in.g > in.s) throw ValidationError("coeff_residual: need 1 <= g <= s");
    if (in.degrees.size() != in.s) throw ValidationError("coeff_residual: degrees length != s");
    if (i < 0 || i > in.r - in.s)
        throw ValidationError("coeff_residual: index outside [0, r-s]");
    bool aform = is_a_coeff(v);
    bool polyring = is_poly_coeff(v);
    if (polyring != in.quotientMode)
        throw ValidationError("coeff_residual: vector mode does not match the variant");
    int delta = in.s - in.g;
    int jmax = delta + (aform ? 0 : 1);
    if (static_cast<int>(in.powers.size()) < jmax)
        throw ValidationError("coeff_residual: power coefficient vectors through j=" +
                              std::to_string(jmax) + " required");
    for (const auto& vec : in.powers)
        if (static_cast<long>(vec.size()) < delta + i + 1)
            throw ValidationError("coeff_residual: power vectors need entries through k=" +
                                  std::to_string(delta + i) + " (extended convention)");

    // sum_k e_{i-k}(d) e_k(R)
    Rat val = 0;
    for (int k = 0; k <= i; ++k) {
        Rat ek = polyring ? (k == 0 ? Rat(1) : Rat(0)) : vec_at(in.eR, k);
        if (ek != 0) val += Rat(theorem19_e(in.degrees, i - k)) * ek;
    }
    int sd = delta % 2;  // parity of (-1)^{s-g}
    if (aform) {
        // in quotient mode e(R/I) is the j=1 power vector
        const std::vector<Rat>& ri = (in.eRI.empty() && polyring) ? in.powers[0] : in.eRI;
        if (static_cast<long>(ri.size()) < delta + i + 1)
            throw ValidationError("coeff_residual: e(R/I) needs entries through k=" +
                                  std::to_string(delta + i));
        Rat eri = ri[static_cast<size_t>(delta + i)];
        val += (sd == 0) ? -eri : eri;
    }
    long shift = polyring ? -static_cast<long>(in.g) : static_cast<long>(in.n - in.g);
    for (int j = 1; j <= jmax; ++j) {
        const auto& vec = in.powers[static_cast<size_t>(j - 1)];
        int subset = aform ? in.g + j : in.g + j - 1;
        for (int k = 0; k <= delta + i; ++k) {
            Rat ek = vec_at(vec, k);
            if (ek == 0) continue;
            Int b = subset_binomial_sum(in.degrees, subset, shift - k, i + delta - k);
            if (b == 0) continue;
            // a: -(-1)^{delta} (-1)^{j+k};  b: +(-1)^{delta} (-1)^{j+k}
            int parity = (sd + j + k + (aform ? 1 : 0)) % 2;
            Rat term = Rat(b) * ek;
            val += (parity == 0) ? term : Rat(-term);
        }
    }
    return val;
}

CriterionResult criterion_111(const CoeffInput& in) {
    if (in.quotientMode)
        throw ValidationError("criterion_111 expects omega-form coefficient vectors");
    if (in.r < in.s) throw ValidationError("criterion_111: r >= s required");
    int delta = in.s - in.g;
    if (static_cast<int>(in.powers.size()) < delta)
        throw ValidationError("criterion_111: omega vectors through j=s-g required");
    for (const auto& vec : in.powers)
        if (static_cast<int>(vec.size()) < delta + 1)
            throw ValidationError("criterion_111: omega vectors need entries through k=s-g");
    if (static_cast<int>(in.eRI.size()) < delta + 1)
        throw ValidationError("criterion_111: e(R/I) needs entries through k=s-g");
    Rat lhs = vec_at(in.eR, 0) * Rat(sigma_value(in.degrees, in.s));
    if (delta % 2 != 0) lhs = -lhs;
    Rat rhs = in.eRI[static_cast<size_t>(delta)];
    for (int j = 1; j <= delta; ++j) {
        const auto& vec = in.powers[static_cast<size_t>(j - 1)];
        for (int k = 0; k <= delta; ++k) {
            Rat ek = vec_at(vec, k);
            if (ek == 0) continue;
            Int b = subset_binomial_sum(in.degrees, in.g + j, in.n - in.g - k, delta - k);
            if (b == 0) continue;
            Rat term = Rat(b) * ek;
            rhs += ((j + k) % 2 == 0) ? term : Rat(-term);
        }
    }
    CriterionResult res{lhs - rhs, false};
    res.passes = (res.margin == 0);
    return res;
}

DegreeDeltaInput DegreeDeltaInput::from_degrees(int delta, int g, const DegreeList& degrees) {
    DegreeDeltaInput in;
    in.delta = delta;
    in.g = g;
    if (degrees.size() != g + delta)
        throw ValidationError("degree_delta: list length must be g+delta");
    in.sigma_s = sigma_value(degrees, degrees.size());
    in.sigma1 = sigma_value(degrees, 1);
    in.sigma2 = sigma_value(degrees, 2);
    in.sigma3 = sigma_value(degrees, 3);
    return in;
}

Rat degree_delta(const DegreeDeltaInput& in, DegreeFormVariant variant) {
    const Rat ss(in.sigma_s), s1(in.sigma1), s2(in.sigma2), s3(in.sigma3);
    const long g = in.g;
    switch (in.delta) {
        case 0:
            return ss - in.e00;
        case 1:
            return ss - (s1 - g) * in.e00 + 2 * in.e10;
        case 2: {
            Rat c0 = (variant == DegreeFormVariant::Printed)
                         ? s3 - g * s2 + Rat(binomial(g + 1, 1))
                         : s2 - g * s1 + Rat(binomial(g + 1, 2));
            return ss - c0 * in.e00 + (2 * s1 - (g + 1)) * in.e10 + (g + 1) * in.e20 - in.ep21;
        }
        case 3: {
            Rat c0 = s3 - g * s2 + Rat(binomial(g + 1, 2)) * s1 - Rat(binomial(g + 2, 3));
            Rat common = ss - c0 * in.e00 + ((g + 1) * s1 - (g + 2) * (g + 3)) * in.e20 -
                         (s1 - (g + 2)) * in.ep21 + 2 * in.ep31;
            if (variant == DegreeFormVariant::Printed)
                return common - (2 * s2 - (g + 1) * s1) * in.e10 + 2 * (g + 1) * in.e30;
            return common + (2 * s2 - (g + 1) * s1) * in.e10 - 2 * (g + 3) * in.e30;
        }
        default:
            throw ValidationError("degree_delta: delta must be in {0,1,2,3}");
    }
}

}  // namespace resint
