#ifndef RESINT_SERIES_HPP
#define RESINT_SERIES_HPP

#include <string>
#include <vector>

#include "resint/laurent.hpp"
#include "resint/numpoly.hpp"

namespace resint {

// Element of Z[t, t^{-1}, (1-t)^{-1}] (rational coefficients admitted):
// value = num / (1-t)^pole.  Normal form: pole == 0 or (1-t) does not divide
// num, so equality of values is structural equality.
class RationalSeries {
public:
    RationalSeries() = default;
    // normalizes: cancels (1-t) factors against the pole
    RationalSeries(LaurentPoly num, int pole);

    static RationalSeries zero() { return RationalSeries(); }
    static RationalSeries constant(const Rat& c) { return RationalSeries(LaurentPoly::constant(c), 0); }
    static RationalSeries monomial(long e, const Rat& c = 1) {
        return RationalSeries(LaurentPoly::monomial(e, c), 0);
    }
    // 1/(1-t)^k
    static RationalSeries geometric(int k) { return RationalSeries(LaurentPoly::constant(1), k); }

    const LaurentPoly& num() const { return num_; }
    int pole() const { return pole_; }
    bool is_zero() const { return num_.is_zero(); }

    // order of the pole at t=1 as a rational function; a zero of order m
    // counts as pole order -m.  Only meaningful for nonzero series.
    int pole_order_at_one() const;

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator-() const;
    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries operator*(const LaurentPoly& p) const;
    RationalSeries scaled(const Rat& c) const;
    RationalSeries shifted(long e) const;  // multiply by t^e
    bool operator==(const RationalSeries& o) const { return pole_ == o.pole_ && num_ == o.num_; }

    std::string str() const;

private:
    LaurentPoly num_;
    int pole_ = 0;
};

// Laurent-series coefficients over the index window [lo, hi] (inclusive).
std::vector<Rat> expand(const RationalSeries& s, long lo, long hi);

// S(t^{-1}) via (1-t^{-1})^{-1} = -t(1-t)^{-1}; an involution and a ring map.
RationalSeries substitute_inverse(const RationalSeries& s);

// S = sum_{i<D} (-1)^i e_i (1-t)^{i-D} + F with F a Laurent polynomial.
// e holds the full Taylor expansion of P = S (1-t)^D at 1 when P is an honest
// polynomial (finitely many entries); otherwise just the principal part
// e_0..e_{D-1} (use extended_coeff for arbitrary indices).
struct EDecomposition {
    int level = 0;            // D
    std::vector<Rat> e;       // size >= D
    LaurentPoly remainder;    // F

    RationalSeries reconstruct() const;
};

EDecomposition decompose(const RationalSeries& s, int level);

// e_i^D(S) = (d^i/dt^i)[S (1-t)^D](1) / i!, defined for every i >= 0.
Rat extended_coeff(const RationalSeries& s, int level, long i);
std::vector<Rat> extended_coeffs(const RationalSeries& s, int level, long imax);

// pole order of (a-b) at 1 is < n-r; for r = n-1 this is equality of Hilbert
// polynomials.  Equivalent to e_i^n(a) = e_i^n(b) for all i <= r.
bool equiv_r(const RationalSeries& a, const RationalSeries& b, int ambient_n, int r);

// Q(t) = sum_{i<D} (-1)^i e_i C(t+D-1-i, D-1-i); Q(i) equals the i-th series
// coefficient beyond the top exponent of the remainder.
NumericalPolynomial associated_polynomial(const RationalSeries& s, int level);

// (-1)^n S(t^{-1}); compare against a canonical-module series with equiv_r.
RationalSeries canonical_dual_class(const RationalSeries& s, int ambient_n);

}  // namespace resint

#endif
