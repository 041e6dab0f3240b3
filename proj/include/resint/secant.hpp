#ifndef RESINT_SECANT_HPP
#define RESINT_SECANT_HPP

#include <vector>

#include "resint/numeric.hpp"

namespace resint {

struct SurfaceChernData {
    Int H2, HK, K2, c2;  // intersection numbers; c2 is of the cotangent bundle
    Int chi;             // chi(X, O_X), kept explicit (it cancels in the criterion)

    // Noether integrality: 12*chi == K2 + c2 for smooth surfaces
    void validate_smooth() const;
};

struct ThreefoldChernData {
    Int H3, KH2, K2H, K3, c2H, Kc2, c3;

    // chi(O_X) = -Kc2/24; requires Kc2 = 0 mod 24
    Rat chi() const;
    void validate_smooth() const;
};

// Labeled Hilbert-coefficient vectors of the modules appearing in the
// diagonal residual route; vectors of length 3 (surfaces) or 4 (threefolds).
struct HilbertCoeffSet {
    std::vector<Rat> A;          // coordinate ring
    std::vector<Rat> Omega;      // module of differentials
    std::vector<Rat> w2;         // omega (x) omega
    std::vector<Rat> w2Omega;    // omega^{(x)2} (x) Omega
    std::vector<Rat> w2S2Omega;  // omega^{(x)2} (x) S_2 Omega (threefolds)
    std::vector<Rat> wdual;      // omega^* (surfaces, dual form)
};

// surface Riemann-Roch tables plus the derived vectors for
// omega^{(x)2} (x) Omega and omega^*; entries must come out integral.
HilbertCoeffSet surface_rr_coeffs(const SurfaceChernData& data);

enum class SurfaceForm { Hilbert, Dual, Chern };
Rat surface_margin(SurfaceForm form, const SurfaceChernData& data);
Rat surface_margin(SurfaceForm form, const HilbertCoeffSet& coeffs);

// The printed variant reproduces the printed tables verbatim; the derived
// variant recomputes the four entries whose transcription disagrees with
// Riemann-Roch (e_1(A) and the omega^2 (x) S_2 Omega row beyond e_0).
enum class TableVariant { Printed, Derived };
HilbertCoeffSet threefold_rr_coeffs(const ThreefoldChernData& data, TableVariant variant);

enum class ThreefoldForm { Chern, Hilbert, Rem36 };
Rat threefold_margin(ThreefoldForm form, const ThreefoldChernData& data);
Rat threefold_margin(ThreefoldForm form, const HilbertCoeffSet& coeffs);

enum class SecantContext { Surface, Threefold };

// e^1_0(I/A) along the diagonal: the coefficient formula (variant 19a) at
// (n,g,s,r) = (6,3,5,5) for surfaces and (8,4,7,7) for threefolds, all residual degrees 1, with
// e_0(R) = e_0(A)^2 and [[omega_R/I^j omega_R]] assembled from the successive
// quotients omega (x) omega, omega^{(x)2} (x) Omega (, (x) S_2 Omega).
Rat diagonal_e10(SecantContext context, const HilbertCoeffSet& coeffs);

// Identities (5), (8), (9), (13), (20) used to reduce the dual form.
struct TensorIdentityRecord {
    Rat e1_omega, e2_omega;            // (5)
    Rat e1_omega_dual, e2_omega_dual;  // (9)
    Rat e1_w2_omega;                   // (13)
    Rat e2_w2_omega;                   // (20); consumes e_2(Omega)
};
TensorIdentityRecord tensor_identities(const std::vector<Rat>& eA, const std::vector<Rat>& eW2,
                                       const Rat& e2Omega);
// (8): e_1(omega^{(x)j}) = 3j e_0(A) - (2j-1) e_1(A)
Rat e1_omega_power(const std::vector<Rat>& eA, int j);

}  // namespace resint

#endif
