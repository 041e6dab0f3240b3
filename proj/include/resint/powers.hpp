#ifndef RESINT_POWERS_HPP
#define RESINT_POWERS_HPP

#include <array>
#include <span>
#include <vector>

#include "resint/series.hpp"
#include "resint/symfunc.hpp"

namespace resint {

// Inputs of the Koszul-homology solver.  The Koszul complex is taken on r+1
// forms of the given auxiliary degrees (all-zero mode allowed; the output
// classes do not depend on the choice).  Known conormal-power series are
// required for p = 0 .. floor((q-1)/2), q = r+1-g (the bound is often
// stated as floor((r-g)/2), which is the same number).
struct KoszulInput {
    int r = 0;
    int g = 0;
    Int aInvariant;      // a(R)
    int dimQuotient = 0; // dim R/I
    int ambientN = 0;    // dim R
    DegreeList degrees;  // length r+1
    std::vector<RationalSeries> knownPowers;  // [[I^p/I^{p+1}]]
    RationalSeries seriesR;
    // the duality step (2)_p encodes the licci hypothesis, which this layer
    // cannot check; callers assert it via this flag
    bool assumeDuality = true;

    int q() const { return r + 1 - g; }
    void validate() const;
};

// (1)_p right-hand side: sum_{i<=p} (-1)^i s_{p-i}(t^{d}) [[H_i]]
RationalSeries koszul_relation(int p, std::span<const RationalSeries> hSeries,
                               const DegreeList& degrees);

// (2)_p image: t^{a + sum d} (-1)^{dim R/I} [[H_{q-p}]](t^{-1}); in zero mode
// the weight shift is just t^a.
RationalSeries koszul_duality(const RationalSeries& hOpposite, const Int& a, int dimQuotient,
                              const DegreeList& degrees);

// Solve (1)_p triangularly for the lower homology, reflect with (2)_p,
// fill an even middle with the Euler relation (3), then run (1)_p forward.  Output: the r-equivalence class of [[I^p/I^{p+1}]] for p <= pmax,
// as the coefficient vector (e_0^n, ..., e_r^n) over the ambient dimension.
std::vector<std::vector<Rat>> solve_all_powers(const KoszulInput& in, int pmax);

struct Formulas25Base {
    Rat e00, e10, e20, e21, e30, e31;  // e_i(0) and e_i(1) seeds
};

// Closed forms for e_0(p)..e_3(p) of the conormal powers of a locally
// complete intersection threefold.  The e_2/e_3 rows are the recalibrated
// forms that agree with the conormal oracle (see NOTES in the test suite);
// exact rational intermediates, integer results enforced.
std::array<Rat, 4> formulas_25(int g, const Formulas25Base& base, int p);

struct CIData {
    int g = 0;
    DegreeList ciDegrees;  // degrees of the defining regular sequence

    Int alpha1() const;  // sigma_1 - g
    Int alpha2() const;  // sigma_1^2 - 2 sigma_2 - g
    Int alpha3() const;  // sigma_1^3 - 3 sigma_1 sigma_2 + 3 sigma_3 - g
};

// e_0(0)..e_3(0) of a global complete intersection from the alpha-combinations
std::array<Rat, 4> ci_base_coeffs(const CIData& data);

// e_3 of a complete intersection of dimension >= 3 as a rational function of
// e_0, e_1, e_2 (sign calibrated against ci_base_coeffs)
Rat remark26_e3(const Rat& e0, const Rat& e1, const Rat& e2);

struct DeWegerReport {
    std::array<Int, 4> sigmaA, sigmaB;   // sigma_1..sigma_4 of each list
    bool pattern = false;                // sigma_1,2,4 equal and sigma_3 unequal
    std::array<Rat, 4> baseA, baseB;     // e_0(0)..e_3(0)
    Rat e31A, e31B;                      // e_3(I/I^2) via the conormal oracle
    Rat e31Difference() const { return e31A - e31B; }
};

DeWegerReport deweger_check(const DegreeList& a, const DegreeList& b);

// CI conormal ground truth: [[I^p/I^{p+1}]] = sum_{|a|=p} t^{a.d} [[R/I]]
// with [[R/I]] = Delta_g/(1-t)^n.  Used as the oracle throughout.
RationalSeries ci_conormal_series(const DegreeList& gens, int p, int n);
// e-vector at the module's own dimension (independent of the ambient n)
std::vector<Rat> ci_conormal_evec(const DegreeList& gens, int p, int kmax);
// e-vector of R/I^j = sum of the conormal pieces p < j
std::vector<Rat> ci_quotient_evec(const DegreeList& gens, int j, int kmax);

}  // namespace resint

#endif
