#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "resint/numpoly.hpp"
#include "resint/series.hpp"

using namespace resint;

namespace {

NumericalPolynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> md(0, 6);
    std::uniform_int_distribution<long> cd(-50, 50);
    int m = md(rng);
    std::vector<Int> e(static_cast<size_t>(m) + 1);
    for (auto& x : e) x = cd(rng);
    return NumericalPolynomial(m, std::move(e));
}

}  // namespace

TEST_CASE("eval in the signed binomial basis") {
    // C(t+2,2) with e = (1,0,0)
    NumericalPolynomial p(2, {1, 0, 0});
    CHECK(p.eval(3) == 10);
    CHECK(p.eval(0) == 1);
    CHECK(p.eval(-5) == 6);  // C(-3,2) = 6
}

TEST_CASE("reflect fixtures") {
    NumericalPolynomial p(1, {1, 0});  // C(t+1,1) = t+1
    SUBCASE("d = 0") {
        NumericalPolynomial q = p.reflect(0);
        CHECK(q.coeffs() == std::vector<Int>{-1, -2});  // Q(t) = -t+1
        for (long t0 = -6; t0 <= 6; ++t0) CHECK(q.eval(Int(t0)) == Int(-t0 + 1));
    }
    SUBCASE("d = -1") {
        NumericalPolynomial q = p.reflect(-1);
        CHECK(q.coeffs() == std::vector<Int>{-1, -1});  // Q(t) = -t
        for (long t0 = -6; t0 <= 6; ++t0) CHECK(q.eval(Int(t0)) == Int(-t0));
    }
}

TEST_CASE("reflect is an involution and matches pointwise reflection") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> dd(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        NumericalPolynomial p = random_poly(rng);
        long d = dd(rng);
        NumericalPolynomial q = p.reflect(Int(d));
        for (long k = -10; k <= 10; ++k) CHECK(q.eval(Int(k)) == p.eval(Int(-k + d)));
        CHECK(q.reflect(Int(d)) == p);
    }
}

TEST_CASE("identity (3): C(-t+n, n) = (-1)^n C(t-1, n)") {
    for (long n = 0; n <= 8; ++n)
        for (long k = -10; k <= 10; ++k) {
            Int lhs = binomial(Int(-k + n), n);
            Int rhs = binomial(Int(k - 1), n);
            if (n % 2 != 0) rhs = -rhs;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("identity (4): binomial convolution") {
    // C(t+r+n, n) = sum_l C(r-1+l, l) C(t+n-l, n-l)
    for (long r = -3; r <= 4; ++r)
        for (long n = 0; n <= 6; ++n)
            for (long t0 = 0; t0 <= 10; ++t0) {
                Int rhs = 0;
                for (long l = 0; l <= n; ++l)
                    rhs += binomial(Int(r - 1 + l), l) * binomial(Int(t0 + n - l), n - l);
                CHECK(binomial(Int(t0 + r + n), n) == rhs);
            }
}

TEST_CASE("identity (4) fixture: C(t+3,2) telescopes") {
    for (long t0 = 0; t0 <= 10; ++t0) {
        Int want = binomial(Int(t0 + 2), 2) + binomial(Int(t0 + 1), 1) + 1;
        CHECK(binomial(Int(t0 + 3), 2) == want);
    }
}

TEST_CASE("rebase: fixture and window preservation") {
    NumericalPolynomial p(1, {1, 0});
    NumericalPolynomial q = p.rebase(2);
    CHECK(q.coeffs() == std::vector<Int>{0, -1, 0});
    CHECK_THROWS_AS(q.rebase(1), ValidationError);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        NumericalPolynomial a = random_poly(rng);
        int m2 = a.degree_bound() + static_cast<int>(rng() % 4);
        NumericalPolynomial b = a.rebase(m2);
        for (long t0 = -(m2 + 1); t0 <= m2 + 1; ++t0) CHECK(a.eval(Int(t0)) == b.eval(Int(t0)));
    }
}

TEST_CASE("generalized binomial corner values") {
    CHECK(binomial(Int(-1), 0) == 1);
    CHECK(binomial(Int(-1), 2) == 1);
    CHECK(binomial(Int(-2), 3) == -4);
    CHECK(binomial(Int(3), -1) == 0);
    CHECK(binomial(Int(0), 0) == 1);
}

TEST_CASE("twist rule matches series shifts") {
    // e(M(-a)) from e(M): check against the series route t^a * S
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> cd(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly n;
        for (int i = 0; i < 4; ++i) n.add_term(i, Rat(cd(rng)));
        int D = 3;
        RationalSeries s(n, D);
        long a = static_cast<long>(rng() % 5);
        auto base = extended_coeffs(s, D, 5);
        auto want = extended_coeffs(s.shifted(a), D, 5);
        CHECK(twist_evector(base, a) == want);
    }
}

TEST_CASE("decompose -> associated polynomial round-trips into this basis") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> cd(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly n;
        for (int i = 0; i < 3; ++i) n.add_term(i, Rat(cd(rng)));
        if (n.is_zero()) continue;
        RationalSeries s(n, 4);
        NumericalPolynomial q = associated_polynomial(s, 4);
        auto window = expand(s, 10, 20);
        for (long i = 10; i <= 20; ++i)
            CHECK(Rat(q.eval(Int(i))) == window[static_cast<size_t>(i - 10)]);
    }
}
