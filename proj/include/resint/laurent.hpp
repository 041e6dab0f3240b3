#ifndef RESINT_LAURENT_HPP
#define RESINT_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "resint/numeric.hpp"

namespace resint {

// Sparse Laurent polynomial over Q.  No zero coefficients are stored, so the
// term map is a normal form and equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const Rat& c);
    static LaurentPoly monomial(long e, const Rat& c = 1);
    // 1 + t + ... + t^{d-1}, the cyclotomic-free factor of (1-t^d)/(1-t)
    static LaurentPoly geometric_block(long d);
    static LaurentPoly one_minus_t_power(long k);

    bool is_zero() const { return terms_.empty(); }
    long min_exp() const;
    long max_exp() const;
    const std::map<long, Rat>& terms() const { return terms_; }
    Rat coeff(long e) const;
    void add_term(long e, const Rat& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly shifted(long e) const;  // multiply by t^e
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    Rat eval_one() const;
    // t -> t^{-1}
    LaurentPoly substitute_inverse() const;
    // multiplicity of (1-t) dividing this (0 for the zero polynomial by convention)
    int order_at_one() const;
    bool divisible_by_one_minus_t() const { return !is_zero() && eval_one() == 0; }
    // exact division by (1-t); requires divisibility
    LaurentPoly divide_one_minus_t() const;
    // coefficients of (t-1)^0 .. (t-1)^order in the expansion about t=1;
    // exact even for negative exponents (generalized binomials)
    std::vector<Rat> taylor_at_one(int order) const;
    bool all_integer() const;

    std::string str(const std::string& var = "t") const;

private:
    std::map<long, Rat> terms_;
};

}  // namespace resint

#endif
