#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ci_chern.hpp"
#include "resint/numpoly.hpp"
#include "resint/secant.hpp"

using namespace resint;
using resint::testutil::CISpace;

namespace {

SurfaceChernData veronese() { return SurfaceChernData{4, -6, 9, 3, 1}; }
SurfaceChernData scroll12() { return SurfaceChernData{4, -6, 8, 4, 1}; }
ThreefoldChernData veronese_p3() { return ThreefoldChernData{8, -16, 32, -64, 12, -24, -4}; }

SurfaceChernData random_surface_data(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-30, 30);
    SurfaceChernData s;
    s.H2 = d(rng);
    s.HK = d(rng);
    if ((s.H2 + s.HK) % 2 != 0) s.HK += 1;  // adjunction parity for integral tables
    s.K2 = d(rng);
    s.c2 = d(rng);
    s.chi = d(rng);
    return s;
}

}  // namespace

TEST_CASE("surface chern margins: Veronese boundary and scroll") {
    CHECK(surface_margin(SurfaceForm::Chern, veronese()) == 0);
    CHECK(surface_margin(SurfaceForm::Chern, scroll12()) == 2);
    veronese().validate_smooth();
    scroll12().validate_smooth();
    SurfaceChernData bad = veronese();
    bad.chi = 2;
    CHECK_THROWS_AS(bad.validate_smooth(), ValidationError);
}

TEST_CASE("surface RR tables") {
    HilbertCoeffSet cs = surface_rr_coeffs(veronese());
    CHECK(cs.A == std::vector<Rat>{4, 3, 0});
    CHECK(cs.w2 == std::vector<Rat>{4, 15, 21});
    CHECK(cs.Omega == std::vector<Rat>{12, 15, 3});
    CHECK(cs.w2Omega == std::vector<Rat>{12, 51, 84});
    SUBCASE("leading entry is H^2 always") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 20; ++i) {
            SurfaceChernData d = random_surface_data(rng);
            CHECK(surface_rr_coeffs(d).A[0] == Rat(d.H2));
        }
    }
    SUBCASE("e_2(Omega_X) = H^2 - c_2 + 2 chi") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 20; ++i) {
            SurfaceChernData d = random_surface_data(rng);
            HilbertCoeffSet c = surface_rr_coeffs(d);
            Rat e2OmegaX = c.Omega[2] - c.A[2];
            CHECK(e2OmegaX == Rat(d.H2) - Rat(d.c2) + 2 * Rat(d.chi));
        }
    }
    SUBCASE("parity violation raises the invariant error") {
        SurfaceChernData odd{3, 2, 0, 0, 0};
        CHECK_THROWS_AS(surface_rr_coeffs(odd), ValidationError);
    }
}

TEST_CASE("surface margins coincide across the three forms (chi cancels)") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        SurfaceChernData d = random_surface_data(rng);
        HilbertCoeffSet c = surface_rr_coeffs(d);
        Rat chern = surface_margin(SurfaceForm::Chern, d);
        Rat hilb = surface_margin(SurfaceForm::Hilbert, c);
        Rat dual = surface_margin(SurfaceForm::Dual, c);
        CHECK(hilb == chern);
        CHECK(dual == hilb);
        // the common value is (H^2)^2 - 10H^2 - 5KH - K^2 + c_2
        Rat H2(d.H2);
        CHECK(chern == H2 * H2 - 10 * H2 - 5 * Rat(d.HK) - Rat(d.K2) + Rat(d.c2));
    }
}

TEST_CASE("surface diagonal equals the hilbert margin exactly") {
    std::mt19937_64 rng(11);
    CHECK(diagonal_e10(SecantContext::Surface, surface_rr_coeffs(veronese())) == 0);
    for (int i = 0; i < 30; ++i) {
        SurfaceChernData d = random_surface_data(rng);
        HilbertCoeffSet c = surface_rr_coeffs(d);
        CHECK(diagonal_e10(SecantContext::Surface, c) == surface_margin(SurfaceForm::Hilbert, c));
    }
    SUBCASE("zero coefficient set gives zero") {
        HilbertCoeffSet z;
        z.A = z.w2 = z.w2Omega = {Rat(0), Rat(0), Rat(0)};
        CHECK(diagonal_e10(SecantContext::Surface, z) == 0);
    }
}

TEST_CASE("tensor identities") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        SurfaceChernData d = random_surface_data(rng);
        HilbertCoeffSet c = surface_rr_coeffs(d);
        TensorIdentityRecord rec = tensor_identities(c.A, c.w2, c.Omega[2]);
        SUBCASE("") {}
        // (8) at j=1 reproduces (5)
        CHECK(e1_omega_power(c.A, 1) == rec.e1_omega);
        // (8) at j=2 is consistent with the table value of e_1(omega^2)
        CHECK(e1_omega_power(c.A, 2) == c.w2[1]);
        // (13)/(20) are what the table carries
        CHECK(rec.e1_w2_omega == c.w2Omega[1]);
        CHECK(rec.e2_w2_omega == c.w2Omega[2]);
        // dual-form reduction: e_2(omega^*) = -9 e_0 + 6 e_1 + e_2(omega^2)
        CHECK(rec.e2_omega_dual == -9 * c.A[0] + 6 * c.A[1] + c.w2[2]);
    }
    SUBCASE("(4) iterated: twist by -2 equals two twists by -1") {
        std::vector<Rat> e = {Rat(3), Rat(5), Rat(-2)};
        auto once = twist_evector(e, 1);
        auto twice = twist_evector(once, 1);
        CHECK(twist_evector(e, 2) == twice);
        CHECK(twice[2] == e[2] + 2 * e[1] + e[0]);
    }
}

TEST_CASE("threefold data validation and chi") {
    ThreefoldChernData d = veronese_p3();
    d.validate_smooth();
    CHECK(d.chi() == 1);
    ThreefoldChernData bad = d;
    bad.Kc2 = 25;
    CHECK_THROWS_AS(bad.validate_smooth(), ValidationError);
}

TEST_CASE("threefold margins on the degree-2 Veronese of P^3") {
    ThreefoldChernData d = veronese_p3();
    // the secant variety is deficient: the derived route vanishes
    HilbertCoeffSet derived = threefold_rr_coeffs(d, TableVariant::Derived);
    CHECK(diagonal_e10(SecantContext::Threefold, derived) == 0);
    CHECK(threefold_margin(ThreefoldForm::Rem36, d) == 0);
    CHECK(threefold_margin(ThreefoldForm::Hilbert, derived) == 0);
    // the printed display carries the transcription offset
    CHECK(threefold_margin(ThreefoldForm::Chern, d) == 180);
    HilbertCoeffSet printed = threefold_rr_coeffs(d, TableVariant::Printed);
    CHECK(diagonal_e10(SecantContext::Threefold, printed) == -180);
    CHECK(derived.A == std::vector<Rat>{8, 8, 1, 0});
}

TEST_CASE("threefold table relations hold identically on random data") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> dist(-40, 40);
    for (int i = 0; i < 40; ++i) {
        ThreefoldChernData d;
        d.H3 = dist(rng);
        d.KH2 = dist(rng);
        d.K2H = dist(rng);
        d.K3 = dist(rng);
        d.c2H = dist(rng);
        d.Kc2 = dist(rng);
        d.c3 = dist(rng);
        HilbertCoeffSet printed = threefold_rr_coeffs(d, TableVariant::Printed);
        HilbertCoeffSet derived = threefold_rr_coeffs(d, TableVariant::Derived);
        // the printed table and the printed inequality are mutually consistent:
        // the diagonal route on the printed table is exactly minus the margin
        CHECK(diagonal_e10(SecantContext::Threefold, printed) ==
              -threefold_margin(ThreefoldForm::Chern, d));
        // on the derived table, the hilbert coefficient string, the rem36 form
        // and the diagonal route all agree
        Rat diag = diagonal_e10(SecantContext::Threefold, derived);
        CHECK(diag == threefold_margin(ThreefoldForm::Rem36, d));
        CHECK(diag == threefold_margin(ThreefoldForm::Hilbert, derived));
    }
}

TEST_CASE("threefold e_0 row and rank bookkeeping") {
    ThreefoldChernData d = veronese_p3();
    for (TableVariant v : {TableVariant::Printed, TableVariant::Derived}) {
        HilbertCoeffSet c = threefold_rr_coeffs(d, v);
        Rat H3(d.H3);
        CHECK(c.A[0] == H3);
        CHECK(c.Omega[0] == 4 * H3);
        CHECK(c.w2[0] == H3);
        CHECK(c.w2Omega[0] == 4 * H3);
        CHECK(c.w2S2Omega[0] == 10 * H3);  // rank of S_2 of a rank-4 module
    }
}

TEST_CASE("threefold e_3(A) fixture: Kc2 = 24 alone gives 1") {
    ThreefoldChernData d{0, 0, 0, 0, 0, 24, 0};
    HilbertCoeffSet c = threefold_rr_coeffs(d, TableVariant::Printed);
    CHECK(c.A[3] == 1);
    CHECK(d.chi() == -1);
}

TEST_CASE("all twenty printed entries integral on smooth CI threefolds") {
    std::vector<CISpace> spaces = {{4, {2}}, {4, {3}}, {4, {4}}, {5, {2, 2}},
                                   {5, {2, 3}}, {6, {2, 2, 2}}, {6, {2, 2, 3}},
                                   {7, {2, 2, 2, 2}}};
    for (const auto& X : spaces) {
        ThreefoldChernData d = testutil::ci_threefold(X);
        d.validate_smooth();
        for (TableVariant v : {TableVariant::Printed, TableVariant::Derived}) {
            HilbertCoeffSet c = threefold_rr_coeffs(d, v);
            for (const auto* vec : {&c.A, &c.Omega, &c.w2, &c.w2Omega, &c.w2S2Omega})
                for (const Rat& x : *vec) CHECK(is_integer(x));
        }
    }
}

TEST_CASE("all-zero threefold data gives zero margins") {
    ThreefoldChernData z{0, 0, 0, 0, 0, 0, 0};
    CHECK(threefold_margin(ThreefoldForm::Chern, z) == 0);
    CHECK(threefold_margin(ThreefoldForm::Rem36, z) == 0);
    HilbertCoeffSet c = threefold_rr_coeffs(z, TableVariant::Printed);
    CHECK(threefold_margin(ThreefoldForm::Hilbert, c) == 0);
    CHECK(diagonal_e10(SecantContext::Threefold, c) == 0);
}

TEST_CASE("smooth CI surfaces: data sanity against classical values") {
    // quadric surface in P^3 = P^1 x P^1 embedded by O(1,1)
    SurfaceChernData q = testutil::ci_surface(CISpace{3, {2}});
    CHECK(q.H2 == 2);
    CHECK(q.HK == -4);
    CHECK(q.K2 == 8);
    CHECK(q.c2 == 4);
    CHECK(q.chi == 1);
    q.validate_smooth();
    surface_rr_coeffs(q);  // integral tables
    // cubic surface in P^3
    SurfaceChernData c3 = testutil::ci_surface(CISpace{3, {3}});
    CHECK(c3.H2 == 3);
    CHECK(c3.HK == -3);
    CHECK(c3.K2 == 3);
    CHECK(c3.c2 == 9);
    CHECK(c3.chi == 1);
}
