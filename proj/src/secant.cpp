#include "resint/secant.hpp"

#include "resint/numpoly.hpp"

namespace resint {

namespace {

void require_integral(const std::vector<Rat>& v, const char* label) {
    for (const Rat& x : v)
        if (!is_integer(x))
            throw ValidationError(std::string("non-integer table entry in ") + label + ": " +
                                  x.get_str());
}

std::vector<Rat> addv(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

void SurfaceChernData::validate_smooth() const {
    if ((K2 + c2) % 12 != 0 || 12 * chi != K2 + c2)
        throw ValidationError("surface data violates Noether integrality 12*chi = K^2 + c_2");
}

Rat ThreefoldChernData::chi() const { return Rat(-Kc2) / 24; }

void ThreefoldChernData::validate_smooth() const {
    if (Kc2 % 24 != 0)
        throw ValidationError("threefold data violates Kc2 = 0 (mod 24)");
}

HilbertCoeffSet surface_rr_coeffs(const SurfaceChernData& data) {
    const Rat H2(data.H2), HK(data.HK), K2(data.K2), c2(data.c2), chi(data.chi);
    HilbertCoeffSet cs;
    // sheaf tables (D = 0, D = 2K, E = Omega_X)
    std::vector<Rat> eOX = {H2, Rat(3, 2) * H2 + HK / 2, H2 / 2 + HK / 2 + chi};
    std::vector<Rat> eW2X = {H2, Rat(3, 2) * H2 - Rat(3, 2) * HK,
                             H2 / 2 - Rat(3, 2) * HK + K2 + chi};
    std::vector<Rat> eOmX = {2 * H2, 3 * H2, H2 - c2 + 2 * chi};
    cs.A = eOX;
    cs.w2 = eW2X;
    cs.Omega = addv(eOmX, eOX);  // module of differentials = sheaf part + O_X part
    TensorIdentityRecord rec = tensor_identities(cs.A, cs.w2, cs.Omega[2]);
    cs.w2Omega = {3 * cs.A[0], rec.e1_w2_omega, rec.e2_w2_omega};
    cs.wdual = {cs.A[0], rec.e1_omega_dual, rec.e2_omega_dual};
    require_integral(cs.A, "e(A)");
    require_integral(cs.w2, "e(omega^2)");
    require_integral(cs.Omega, "e(Omega)");
    require_integral(cs.w2Omega, "e(omega^2 Omega)");
    require_integral(cs.wdual, "e(omega^*)");
    return cs;
}

Rat surface_margin(SurfaceForm form, const SurfaceChernData& data) {
    if (form == SurfaceForm::Chern) {
        Rat H2(data.H2);
        return H2 * H2 - (10 * H2 + 5 * Rat(data.HK) + Rat(data.K2) - Rat(data.c2));
    }
    return surface_margin(form, surface_rr_coeffs(data));
}

Rat surface_margin(SurfaceForm form, const HilbertCoeffSet& c) {
    switch (form) {
        case SurfaceForm::Hilbert:
            return c.A[0] * c.A[0] + 14 * c.A[0] - 16 * c.A[1] + 4 * c.A[2] - c.w2[2] -
                   c.Omega[2];
        case SurfaceForm::Dual:
            return c.A[0] * c.A[0] + 5 * c.A[0] - 10 * c.A[1] + 4 * c.A[2] - c.wdual[2] -
                   c.Omega[2];
        case SurfaceForm::Chern:
            throw ValidationError("chern form needs SurfaceChernData");
    }
    throw ValidationError("unknown surface form");
}

HilbertCoeffSet threefold_rr_coeffs(const ThreefoldChernData& d, TableVariant variant) {
    const Rat H3(d.H3), KH2(d.KH2), K2H(d.K2H), K3(d.K3), c2H(d.c2H), Kc2(d.Kc2), c3(d.c3);
    HilbertCoeffSet cs;
    cs.A = {H3, 2 * H3 - Rat(3, 2) * KH2, (14 * H3 + 9 * KH2 + K2H + c2H) / 12,
            (4 * H3 + 6 * KH2 + 2 * K2H + 2 * c2H + Kc2) / 24};
    cs.Omega = {4 * H3, 8 * H3 + KH2, (28 * H3 + 9 * KH2 + 2 * K2H - 4 * c2H) / 6,
                (8 * H3 + 6 * KH2 + 4 * K2H - 8 * c2H + Kc2 - 6 * c3) / 12};
    cs.w2 = {H3, 2 * H3 - Rat(3, 2) * KH2, (14 * H3 - 27 * KH2 + 13 * K2H + c2H) / 12,
             (4 * H3 - 18 * KH2 + 26 * K2H + 2 * c2H - 12 * K3 - 3 * Kc2) / 24};
    cs.w2Omega = {4 * H3, 8 * H3 - 7 * KH2, (28 * H3 - 63 * KH2 + 38 * K2H - 4 * c2H) / 6,
                  (8 * H3 - 42 * KH2 + 76 * K2H - 8 * c2H - 48 * K3 + 17 * Kc2 - 6 * c3) / 12};
    cs.w2S2Omega = {10 * H3, 20 * H3 - 19 * KH2,
                    (70 * H3 - 171 * KH2 + 119 * K2H - 25 * c2H) / 6,
                    (20 * H3 - 114 * KH2 + 238 * K2H - 50 * c2H - 186 * K3 + 125 * Kc2 - 42 * c3) /
                        12};
    if (variant == TableVariant::Derived) {
        // entries recomputed from Riemann-Roch (chi(E(mH)) expansions)
        cs.A[1] = 2 * H3 + KH2 / 2;
        cs.w2S2Omega[1] = 20 * H3 - 20 * KH2;
        cs.w2S2Omega[2] = (70 * H3 - 180 * KH2 + 131 * K2H - 31 * c2H) / 6;
        cs.w2S2Omega[3] =
            (20 * H3 - 120 * KH2 + 262 * K2H - 62 * c2H - 210 * K3 + 148 * Kc2 - 48 * c3) / 12;
    }
    return cs;
}

Rat threefold_margin(ThreefoldForm form, const ThreefoldChernData& d) {
    const Rat H3(d.H3), KH2(d.KH2), K2H(d.K2H), K3(d.K3), c2H(d.c2H), Kc2(d.Kc2), c3(d.c3);
    switch (form) {
        case ThreefoldForm::Chern:
            // (H^3)^2 <= RHS as printed; margin = RHS - LHS
            return 35 * H3 - 11 * KH2 - 9 * K2H + c2H - K3 - Kc2 / 12 + c3 / 2 - H3 * H3;
        case ThreefoldForm::Rem36:
            // D^2 >= 7(5D + 3KH^2 + K^2H - c_2 H) - 2 c_2 K + K^3 + c_3; margin = LHS - RHS
            return H3 * H3 - (35 * H3 + 21 * KH2 + 7 * K2H - 7 * c2H - 2 * Kc2 + K3 + c3);
        case ThreefoldForm::Hilbert:
            throw ValidationError("hilbert form needs a coefficient set");
    }
    throw ValidationError("unknown threefold form");
}

Rat threefold_margin(ThreefoldForm form, const HilbertCoeffSet& c) {
    if (form != ThreefoldForm::Hilbert)
        throw ValidationError("coefficient-set margin is only the hilbert form");
    return c.A[0] * c.A[0] + 391 * c.A[0] - 246 * c.A[1] + 66 * c.A[2] + 50 * c.A[3] -
           (18 * c.w2[2] - 2 * c.Omega[3] - 2 * c.w2[3]);
}

Rat diagonal_e10(SecantContext context, const HilbertCoeffSet& c) {
    if (context == SecantContext::Surface) {
        if (c.A.size() < 3 || c.w2.size() < 3 || c.w2Omega.size() < 3)
            throw ValidationError("diagonal_e10: incomplete surface coefficient set");
        // coefficient formula at n=6, g=3, s=r=5, all d_i = 1
        Rat val = c.A[0] * c.A[0] - c.A[2];
        std::vector<Rat> q1 = c.w2;
        std::vector<Rat> q2 = addv(c.w2, c.w2Omega);
        const std::vector<Rat>* quot[2] = {&q1, &q2};
        for (int j = 1; j <= 2; ++j) {
            Int cj = binomial(Int(5), 3 + j);
            for (int k = 0; k <= 2; ++k) {
                Int b = cj * binomial(Int(6 + j - k), 2 - k);
                Rat term = Rat(b) * (*quot[j - 1])[static_cast<size_t>(k)];
                val += ((j + k) % 2 == 0) ? -term : term;
            }
        }
        return val;
    }
    if (c.A.size() < 4 || c.w2.size() < 4 || c.w2Omega.size() < 4 || c.w2S2Omega.size() < 4)
        throw ValidationError("diagonal_e10: incomplete threefold coefficient set");
    // coefficient formula at n=8, g=4, s=r=7, all d_i = 1
    Rat val = c.A[0] * c.A[0] + c.A[3];
    std::vector<Rat> q1 = c.w2;
    std::vector<Rat> q2 = addv(q1, c.w2Omega);
    std::vector<Rat> q3 = addv(q2, c.w2S2Omega);
    const std::vector<Rat>* quot[3] = {&q1, &q2, &q3};
    for (int j = 1; j <= 3; ++j) {
        Int cj = binomial(Int(7), 4 + j);
        for (int k = 0; k <= 3; ++k) {
            Int b = cj * binomial(Int(8 + j - k), 3 - k);
            Rat term = Rat(b) * (*quot[j - 1])[static_cast<size_t>(k)];
            val += ((j + k) % 2 == 0) ? term : -term;
        }
    }
    return val;
}

TensorIdentityRecord tensor_identities(const std::vector<Rat>& eA, const std::vector<Rat>& eW2,
                                       const Rat& e2Omega) {
    if (eA.size() < 3 || eW2.size() < 3)
        throw ValidationError("tensor_identities: surface vectors of length 3 required");
    TensorIdentityRecord r;
    r.e1_omega = 3 * eA[0] - eA[1];
    r.e2_omega = 3 * eA[0] - 2 * eA[1] + eA[2];
    r.e1_omega_dual = 3 * eW2[0] - eW2[1];
    r.e2_omega_dual = 3 * eW2[0] - 2 * eW2[1] + eW2[2];
    r.e1_w2_omega = 21 * eA[0] - 11 * eA[1];
    r.e2_w2_omega = -12 * eA[0] + 8 * eA[1] - 5 * eA[2] + 5 * eW2[2] + e2Omega;
    return r;
}

Rat e1_omega_power(const std::vector<Rat>& eA, int j) {
    if (eA.size() < 2) throw ValidationError("e1_omega_power: e_0(A), e_1(A) required");
    return 3 * j * eA[0] - (2 * j - 1) * eA[1];
}

}  // namespace resint
