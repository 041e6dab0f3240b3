#ifndef RESINT_NUMERIC_HPP
#define RESINT_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace resint {

// Exact number tower: arbitrary-precision integers and rationals (GMP).
// Hilbert-series data is integral in practice; the rational carrier lets the
// secant tables reuse the same arithmetic for fractional Chern combinations.
using Int = mpz_class;
using Rat = mpq_class;

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class NotStabilizedError : public std::runtime_error {
public:
    explicit NotStabilizedError(const std::string& what) : std::runtime_error(what) {}
};

class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for any integer a and
// k >= 0; zero for k < 0.  Negative upper arguments occur throughout the
// coefficient formulas (e.g. C(-1, 0) = 1, C(-2, 1) = -2).
inline Int binomial(const Int& a, long k) {
    if (k < 0) return 0;
    Int num = 1;
    Int den = 1;
    for (long i = 0; i < k; ++i) {
        num *= a - i;
        den *= i + 1;
    }
    return num / den;  // exact: k! divides any product of k consecutive integers
}

inline Int binomial(long a, long k) { return binomial(Int(a), k); }

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw ValidationError("expected integer value, got " + q.get_str());
    return q.get_num();
}

}  // namespace resint

#endif
