#include "resint/numpoly.hpp"

#include <sstream>

namespace resint {

NumericalPolynomial::NumericalPolynomial(int m, std::vector<Int> e) : m_(m), e_(std::move(e)) {
    if (m_ < 0) throw ValidationError("degree bound must be >= 0");
    e_.resize(static_cast<size_t>(m_) + 1, Int(0));
}

Int NumericalPolynomial::eval(const Int& t0) const {
    Int s = 0;
    for (int i = 0; i <= m_; ++i) {
        Int b = binomial(t0 + (m_ - i), m_ - i);
        if (i % 2 == 0)
            s += e_[static_cast<size_t>(i)] * b;
        else
            s -= e_[static_cast<size_t>(i)] * b;
    }
    return s;
}

NumericalPolynomial NumericalPolynomial::rebase(int m2) const {
    if (m2 < m_) throw ValidationError("rebase target below current degree bound");
    int shift = m2 - m_;
    std::vector<Int> e2(static_cast<size_t>(m2) + 1, Int(0));
    for (int i = 0; i <= m_; ++i) {
        Int v = e_[static_cast<size_t>(i)];
        if (shift % 2 != 0) v = -v;
        e2[static_cast<size_t>(i + shift)] = v;
    }
    return NumericalPolynomial(m2, std::move(e2));
}

NumericalPolynomial NumericalPolynomial::reflect(const Int& d) const {
    std::vector<Int> h(static_cast<size_t>(m_) + 1, Int(0));
    for (int i = 0; i <= m_; ++i) {
        Int s = 0;
        for (int k = 0; k <= i; ++k) {
            Int b = binomial(d + (m_ + 1 - k), i - k);
            if (k % 2 == 0)
                s += b * e_[static_cast<size_t>(k)];
            else
                s -= b * e_[static_cast<size_t>(k)];
        }
        if (m_ % 2 != 0) s = -s;
        h[static_cast<size_t>(i)] = s;
    }
    return NumericalPolynomial(m_, std::move(h));
}

bool NumericalPolynomial::integer_valued_on_window() const {
    for (long t0 = -(m_ + 1); t0 <= m_ + 1; ++t0) (void)eval(Int(t0));
    return true;  // integer e_i make this structural; evaluation exercises the basis
}

std::string NumericalPolynomial::str() const {
    std::ostringstream os;
    os << "[m=" << m_ << "; e=";
    for (size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "(") << e_[i].get_str();
    os << ")]";
    return os.str();
}

std::vector<Rat> twist_evector(const std::vector<Rat>& e, long a) {
    std::vector<Rat> out(e.size(), Rat(0));
    for (size_t i = 0; i < e.size(); ++i) {
        Rat s = 0;
        for (size_t k = 0; k <= i; ++k) {
            Int b = binomial(Int(a), static_cast<long>(i - k));
            if (b != 0) s += e[k] * Rat(b);
        }
        out[i] = s;
    }
    return out;
}

std::vector<Int> twist_evector(const std::vector<Int>& e, long a) {
    std::vector<Int> out(e.size(), Int(0));
    for (size_t i = 0; i < e.size(); ++i) {
        Int s = 0;
        for (size_t k = 0; k <= i; ++k) s += binomial(Int(a), static_cast<long>(i - k)) * e[k];
        out[i] = s;
    }
    return out;
}

}  // namespace resint
