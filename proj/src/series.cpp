#include "resint/series.hpp"

#include <sstream>

namespace resint {

RationalSeries::RationalSeries(LaurentPoly num, int pole) : num_(std::move(num)), pole_(pole) {
    if (pole_ < 0) throw ValidationError("pole order must be nonnegative");
    if (num_.is_zero()) {
        pole_ = 0;
        return;
    }
    while (pole_ > 0 && num_.divisible_by_one_minus_t()) {
        num_ = num_.divide_one_minus_t();
        --pole_;
    }
}

int RationalSeries::pole_order_at_one() const {
    if (is_zero()) throw ValidationError("pole order of the zero series");
    if (pole_ > 0) return pole_;  // normalized: numerator coprime to (1-t)
    return -num_.order_at_one();
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    int k = std::max(pole_, o.pole_);
    LaurentPoly a = num_ * LaurentPoly::one_minus_t_power(k - pole_);
    LaurentPoly b = o.num_ * LaurentPoly::one_minus_t_power(k - o.pole_);
    return RationalSeries(a + b, k);
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const { return *this + (-o); }

RationalSeries RationalSeries::operator-() const {
    RationalSeries r;
    r.num_ = -num_;
    r.pole_ = pole_;
    return r;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    return RationalSeries(num_ * o.num_, pole_ + o.pole_);
}

RationalSeries RationalSeries::operator*(const LaurentPoly& p) const {
    return RationalSeries(num_ * p, pole_);
}

RationalSeries RationalSeries::scaled(const Rat& c) const {
    return RationalSeries(num_.scaled(c), pole_);
}

RationalSeries RationalSeries::shifted(long e) const {
    RationalSeries r;
    r.num_ = num_.shifted(e);
    r.pole_ = pole_;
    return r;
}

std::string RationalSeries::str() const {
    std::ostringstream os;
    if (pole_ == 0) return num_.str();
    os << "(" << num_.str() << ") / (1-t)";
    if (pole_ != 1) os << "^" << pole_;
    return os.str();
}

std::vector<Rat> expand(const RationalSeries& s, long lo, long hi) {
    if (lo > hi) throw ValidationError("expand: window bounds inverted");
    std::vector<Rat> out(static_cast<size_t>(hi - lo + 1), Rat(0));
    if (s.is_zero()) return out;
    int k = s.pole();
    for (const auto& [e, c] : s.num().terms()) {
        if (k == 0) {
            if (e >= lo && e <= hi) out[static_cast<size_t>(e - lo)] += c;
            continue;
        }
        // c * t^e * sum_{m>=0} C(m+k-1, k-1) t^m
        for (long i = std::max(lo, e); i <= hi; ++i)
            out[static_cast<size_t>(i - lo)] += c * Rat(binomial(Int(i - e + k - 1), k - 1));
    }
    return out;
}

RationalSeries substitute_inverse(const RationalSeries& s) {
    if (s.is_zero()) return s;
    int k = s.pole();
    LaurentPoly n = s.num().substitute_inverse().shifted(k);
    if (k % 2 != 0) n = -n;
    RationalSeries r(std::move(n), k);
    return r;
}

RationalSeries EDecomposition::reconstruct() const {
    RationalSeries acc(remainder, 0);
    for (int i = 0; i < level; ++i) {
        Rat c = e[static_cast<size_t>(i)];
        if (i % 2 != 0) c = -c;
        acc = acc + RationalSeries(LaurentPoly::constant(c), level - i);
    }
    return acc;
}

namespace {

LaurentPoly cleared_numerator(const RationalSeries& s, int level) {
    if (level < (s.is_zero() ? 0 : s.pole()))
        throw ValidationError("decomposition level below pole order");
    return s.num() * LaurentPoly::one_minus_t_power(level - s.pole());
}

}  // namespace

EDecomposition decompose(const RationalSeries& s, int level) {
    LaurentPoly p = cleared_numerator(s, level);
    EDecomposition d;
    d.level = level;
    long top = level - 1;
    if (!p.is_zero() && p.min_exp() >= 0) top = std::max<long>(top, p.max_exp());
    std::vector<Rat> taylor =
        p.is_zero() ? std::vector<Rat>(static_cast<size_t>(top) + 1, Rat(0)) : p.taylor_at_one(static_cast<int>(top));
    d.e = std::move(taylor);
    // remainder: F = (P - sum_{i<D} (-1)^i e_i (1-t)^i) / (1-t)^D, exact
    LaurentPoly head;
    for (int i = 0; i < level; ++i) {
        Rat c = d.e[static_cast<size_t>(i)];
        if (i % 2 != 0) c = -c;
        head = head + LaurentPoly::one_minus_t_power(i).scaled(c);
    }
    LaurentPoly rem = p - head;
    for (int i = 0; i < level; ++i) {
        if (rem.is_zero()) break;
        rem = rem.divide_one_minus_t();
    }
    d.remainder = rem;
    return d;
}

Rat extended_coeff(const RationalSeries& s, int level, long i) {
    if (i < 0) return Rat(0);
    LaurentPoly p = cleared_numerator(s, level);
    if (p.is_zero()) return Rat(0);
    Rat out = 0;
    for (const auto& [e, c] : p.terms()) {
        Int b = binomial(Int(e), i);
        if (b != 0) out += c * Rat(b);
    }
    return out;
}

std::vector<Rat> extended_coeffs(const RationalSeries& s, int level, long imax) {
    LaurentPoly p = cleared_numerator(s, level);
    if (p.is_zero()) return std::vector<Rat>(static_cast<size_t>(imax) + 1, Rat(0));
    return p.taylor_at_one(static_cast<int>(imax));
}

bool equiv_r(const RationalSeries& a, const RationalSeries& b, int ambient_n, int r) {
    if (r < 0 || r > ambient_n) throw ValidationError("equiv_r requires 0 <= r <= n");
    RationalSeries d = a - b;
    if (d.is_zero()) return true;
    return d.pole_order_at_one() < ambient_n - r;
}

NumericalPolynomial associated_polynomial(const RationalSeries& s, int level) {
    EDecomposition d = decompose(s, level);
    if (level == 0) return NumericalPolynomial(0, {Int(0)});
    std::vector<Int> e(static_cast<size_t>(level));
    for (int i = 0; i < level; ++i) e[static_cast<size_t>(i)] = to_int(d.e[static_cast<size_t>(i)]);
    return NumericalPolynomial(level - 1, std::move(e));
}

RationalSeries canonical_dual_class(const RationalSeries& s, int ambient_n) {
    RationalSeries r = substitute_inverse(s);
    if (ambient_n % 2 != 0) r = -r;
    return r;
}

}  // namespace resint
