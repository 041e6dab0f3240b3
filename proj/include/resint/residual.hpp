#ifndef RESINT_RESIDUAL_HPP
#define RESINT_RESIDUAL_HPP

#include <vector>

#include "resint/series.hpp"
#include "resint/symfunc.hpp"

namespace resint {

// Which residual-series formula to evaluate: the general forms take Hilbert
// series of omega/I^j omega, the polynomial-ring forms take R/I^j.
enum class SeriesVariant { General14a, General14b, PolyRing15a, PolyRing15b };

struct ResidualInput {
    int n = 0;  // dim R
    int g = 0;  // height of I
    int s = 0;  // number of forms
    int r = 0;  // equivalence level
    DegreeList degrees;                          // length s
    RationalSeries seriesR;                      // [[R]]
    std::vector<RationalSeries> omegaPowers;     // [[omega/I^j omega]], j = 1..
    std::vector<RationalSeries> quotientPowers;  // [[R/I^j]], j = 1.. (polynomial-ring mode)
    bool polynomialRingMode = false;

    void validate(SeriesVariant v) const;
};

// Exact right-hand side of the residual-series formula; the contract with
// [[R/A]] resp. [[R/RR]] is r-equivalence (project via equiv_r).
RationalSeries series_residual(SeriesVariant v, const ResidualInput& in);

enum class CoeffVariant { General19a, General19b, PolyRing110a, PolyRing110b };

struct CoeffInput {
    int n = 0;
    int g = 0;
    int s = 0;
    int r = 0;
    DegreeList degrees;                    // length s
    std::vector<Rat> eR;                   // e_k(R); {1} for a polynomial ring
    std::vector<Rat> eRI;                  // e_k(R/I), extended entries allowed (a-variants)
    std::vector<std::vector<Rat>> powers;  // j = 1..: e_k(omega/I^j omega) or e_k(R/I^j)
    bool quotientMode = false;             // true: vectors are e_k(R/I^j) (110a/110b)
};

// e_i^{n-s} of I/A (a-variants) or R/RR (b-variants); valid for 0 <= i <= r-s.
Rat coeff_residual(CoeffVariant v, const CoeffInput& in, int i);

struct CriterionResult {
    Rat margin;
    bool passes = false;  // margin == 0  <=>  ht RR >= r+1 (given ht RR >= s)
};

// Codimension criterion: margin = LHS - RHS of the equality.  Expects the
// omega-form vectors (quotientMode must be false) plus eR and eRI.
CriterionResult criterion_111(const CoeffInput& in);

enum class DegreeFormVariant { Printed, Corrected };

// Inputs of the closed-form degree formulas: numeric symmetric functions of
// the s degrees, the coefficients e_i(0) = e_i(R/I), and the cumulative
// e'_i(1) = e_i(R/I^2).
struct DegreeDeltaInput {
    int delta = 0;
    int g = 0;
    Int sigma_s;                       // product of all s degrees
    Int sigma1, sigma2, sigma3;        // as needed for the chosen delta
    Rat e00, e10, e20, e30;            // e_0(0)..e_3(0)
    Rat ep21, ep31;                    // e'_2(1), e'_3(1)

    static DegreeDeltaInput from_degrees(int delta, int g, const DegreeList& degrees);
};

// Degree of the codimension-s part of R/RR for delta = s-g <= 3.  The
// printed variant follows the printed display verbatim; the corrected
// variant is calibrated against coeff_residual (the engine), which the
// verification suites treat as authoritative.
Rat degree_delta(const DegreeDeltaInput& in, DegreeFormVariant variant);

}  // namespace resint

#endif
