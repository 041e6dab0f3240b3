#include "resint/symfunc.hpp"

#include <algorithm>

namespace resint {

bool DegreeList::zero_mode() const {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

void DegreeList::validate() const {
    if (d.empty()) return;
    if (zero_mode()) return;
    for (int x : d)
        if (x < 1) throw ValidationError("degree list entries must be >= 1 (or all zero)");
}

LaurentPoly elementary_sym(int m, const DegreeList& degrees) {
    if (m < 0) throw ValidationError("elementary_sym: m >= 0 required");
    int s = degrees.size();
    if (m > s) return LaurentPoly();
    // coefficients of z^0..z^m in prod (1 + t^{d_i} z)
    std::vector<LaurentPoly> z(static_cast<size_t>(m) + 1);
    z[0] = LaurentPoly::constant(1);
    for (int i = 0; i < s; ++i) {
        LaurentPoly ti = LaurentPoly::monomial(degrees.d[static_cast<size_t>(i)]);
        for (int k = std::min(m, i + 1); k >= 1; --k)
            z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] + z[static_cast<size_t>(k - 1)] * ti;
    }
    return z[static_cast<size_t>(m)];
}

LaurentPoly complete_sym(int j, const DegreeList& degrees) {
    if (j < 0) throw ValidationError("complete_sym: j >= 0 required");
    std::vector<LaurentPoly> z(static_cast<size_t>(j) + 1);
    z[0] = LaurentPoly::constant(1);
    for (int i = 0; i < degrees.size(); ++i) {
        LaurentPoly ti = LaurentPoly::monomial(degrees.d[static_cast<size_t>(i)]);
        for (int k = 1; k <= j; ++k)
            z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] + z[static_cast<size_t>(k - 1)] * ti;
    }
    return z[static_cast<size_t>(j)];
}

LaurentPoly delta_poly(const DegreeList& degrees) {
    LaurentPoly p = LaurentPoly::constant(1);
    for (int di : degrees.d) {
        LaurentPoly f = LaurentPoly::constant(1) - LaurentPoly::monomial(di);
        p = p * f;
    }
    return p;
}

Int sigma_value(const DegreeList& degrees, int m) {
    if (m < 0) throw ValidationError("sigma_value: m >= 0 required");
    int s = degrees.size();
    if (m > s) return 0;
    std::vector<Int> z(static_cast<size_t>(m) + 1, Int(0));
    z[0] = 1;
    for (int i = 0; i < s; ++i)
        for (int k = std::min(m, i + 1); k >= 1; --k)
            z[static_cast<size_t>(k)] += z[static_cast<size_t>(k - 1)] * degrees.d[static_cast<size_t>(i)];
    return z[static_cast<size_t>(m)];
}

namespace {

// sum over i_1..i_s >= 1 with sum = target of prod C(d_j, i_j)
Int clamped_composition_sum(const DegreeList& degrees, long target) {
    if (degrees.size() == 0) return target == 0 ? 1 : 0;
    std::vector<Int> acc{Int(1)};  // acc[v] = partial sum with running index total v
    long reached = 0;
    for (int j = 0; j < degrees.size(); ++j) {
        int dj = degrees.d[static_cast<size_t>(j)];
        long remaining = degrees.size() - 1 - j;  // factors still to place, each >= 1
        long cap = target - remaining;
        std::vector<Int> next(static_cast<size_t>(std::min<long>(cap, reached + dj)) + 1, Int(0));
        for (long v = 0; v <= reached; ++v) {
            if (acc[static_cast<size_t>(v)] == 0) continue;
            for (int i = 1; i <= dj && v + i <= cap; ++i)
                next[static_cast<size_t>(v + i)] += acc[static_cast<size_t>(v)] * binomial(Int(dj), i);
        }
        acc = std::move(next);
        reached = static_cast<long>(acc.size()) - 1;
        if (reached < 0) return 0;
    }
    return target <= reached ? acc[static_cast<size_t>(target)] : Int(0);
}

}  // namespace

Int bezout_c(const DegreeList& degrees, int k) {
    if (k < 0) throw ValidationError("bezout_c: k >= 0 required");
    Int s = clamped_composition_sum(degrees, k + degrees.size());
    return k % 2 == 0 ? s : -s;
}

Int theorem19_e(const DegreeList& degrees, int ell) {
    if (ell < 0) throw ValidationError("theorem19_e: ell >= 0 required");
    return clamped_composition_sum(degrees, ell + degrees.size());
}

std::vector<Rat> taylor_at_one(const LaurentPoly& p, int order) {
    if (order < 0) throw ValidationError("taylor_at_one: order >= 0 required");
    return p.taylor_at_one(order);
}

}  // namespace resint
