#include "resint/laurent.hpp"

#include <sstream>

namespace resint {

LaurentPoly LaurentPoly::constant(const Rat& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(long e, const Rat& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::geometric_block(long d) {
    LaurentPoly p;
    for (long e = 0; e < d; ++e) p.add_term(e, 1);
    return p;
}

LaurentPoly LaurentPoly::one_minus_t_power(long k) {
    LaurentPoly p = constant(1);
    LaurentPoly f;
    f.add_term(0, 1);
    f.add_term(1, -1);
    for (long i = 0; i < k; ++i) p = p * f;
    return p;
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw ValidationError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw ValidationError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Rat LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(long e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly r;
    for (const auto& [e1, c] : terms_) r.terms_.emplace(e1 + e, c);
    return r;
}

Rat LaurentPoly::eval_one() const {
    Rat s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

int LaurentPoly::order_at_one() const {
    if (is_zero()) return 0;
    int ord = 0;
    LaurentPoly p = *this;
    while (p.divisible_by_one_minus_t()) {
        p = p.divide_one_minus_t();
        ++ord;
    }
    return ord;
}

LaurentPoly LaurentPoly::divide_one_minus_t() const {
    // (1-t) = -(t-1); divide by (t-1) with synthetic division at 1, then negate.
    // Working top-down keeps the quotient sparse-friendly.
    if (!divisible_by_one_minus_t()) throw ValidationError("polynomial not divisible by (1-t)");
    LaurentPoly q;
    Rat carry = 0;
    long lo = min_exp();
    long hi = max_exp();
    for (long e = hi; e > lo; --e) {
        carry += coeff(e);
        q.add_term(e - 1, -carry);
    }
    return q;
}

std::vector<Rat> LaurentPoly::taylor_at_one(int order) const {
    std::vector<Rat> out(static_cast<size_t>(order) + 1, Rat(0));
    for (const auto& [e, c] : terms_) {
        for (int j = 0; j <= order; ++j) {
            Int b = binomial(Int(e), j);
            if (b != 0) out[static_cast<size_t>(j)] += c * Rat(b);
        }
    }
    return out;
}

bool LaurentPoly::all_integer() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace resint
