#ifndef RESINT_NUMPOLY_HPP
#define RESINT_NUMPOLY_HPP

#include <string>
#include <vector>

#include "resint/numeric.hpp"

namespace resint {

// Numerical polynomial in the signed binomial basis,
//   P(t) = sum_{i=0}^{m} (-1)^i e_i C(t+m-i, m-i),
// the carrier for Hilbert polynomials and their coefficient vectors e_i.
class NumericalPolynomial {
public:
    NumericalPolynomial() : m_(0), e_{Int(0)} {}
    NumericalPolynomial(int m, std::vector<Int> e);

    int degree_bound() const { return m_; }
    const std::vector<Int>& coeffs() const { return e_; }

    Int eval(const Int& t0) const;
    // re-express in the degree-m2 basis (m2 >= m), same values everywhere
    NumericalPolynomial rebase(int m2) const;
    // Q(t) = P(-t+d); coefficients by the closed form
    //   h_i = (-1)^m sum_{k<=i} (-1)^k C(d+m+1-k, i-k) e_k
    NumericalPolynomial reflect(const Int& d) const;

    // sanity check on a window of 2m+3 consecutive integers (integrality is
    // automatic with integer e_i; this guards constructors fed external data)
    bool integer_valued_on_window() const;

    bool operator==(const NumericalPolynomial& o) const { return m_ == o.m_ && e_ == o.e_; }
    std::string str() const;

private:
    int m_;
    std::vector<Int> e_;  // size m_+1
};

// e-vector of the twist M(-a): out_i = sum_k C(a, i-k) e_k.  Works for any
// integer a (generalized binomials); output truncated to the input length.
std::vector<Rat> twist_evector(const std::vector<Rat>& e, long a);
std::vector<Int> twist_evector(const std::vector<Int>& e, long a);

}  // namespace resint

#endif
