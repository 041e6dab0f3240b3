#include "resint/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "resint/oracle.hpp"
#include "resint/powers.hpp"
#include "resint/residual.hpp"
#include "resint/secant.hpp"
#include "resint/series.hpp"

namespace resint::verify {

namespace {

using Clock = std::chrono::steady_clock;

std::string rat_str(const Rat& r) { return r.get_str(); }

void add(SuiteReport& rep, const std::string& name, bool pass, const std::string& detail) {
    rep.checks.push_back({name, pass, detail});
}

// all multisets 1 <= d_1 <= ... <= d_s <= dmax
std::vector<std::vector<int>> multisets(int s, int dmax) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(s), 1);
    while (true) {
        out.push_back(cur);
        int i = s - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == dmax) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < s; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(i)];
    }
    return out;
}

IdealPresentation twisted_cubic_ideal(FieldSpec field) {
    IdealPresentation I;
    I.numVars = 4;
    I.field = field;
    auto gen = [](int deg, std::vector<std::pair<Exponents, long>> t) {
        IdealPresentation::Generator g;
        g.degree = deg;
        for (auto& [e, c] : t) g.terms.emplace_back(e, Rat(c));
        return g;
    };
    I.gens.push_back(gen(2, {{{1, 0, 1, 0}, 1}, {{0, 2, 0, 0}, -1}}));
    I.gens.push_back(gen(2, {{{0, 1, 0, 1}, 1}, {{0, 0, 2, 0}, -1}}));
    I.gens.push_back(gen(2, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}}));
    return I;
}

// ---- criterion 1 ----
SuiteReport suite_bezout_coefficients(const Options&) {
    SuiteReport rep{"bezout-coefficients", {}, false};
    long checked = 0;
    bool ok = true;
    std::string witness;
    for (int s = 1; s <= 5 && ok; ++s) {
        for (const auto& v : multisets(s, 6)) {
            DegreeList d{std::vector<int>(v)};
            LaurentPoly delta = delta_poly(d);
            long kmax = 0;
            for (int x : v) kmax += x;
            LaurentPoly acc;
            for (long k = 0; k + s <= kmax; ++k) {
                Rat c(bezout_c(d, static_cast<int>(k)));
                acc = acc + LaurentPoly::one_minus_t_power(k + s).scaled(c);
            }
            ++checked;
            if (!(acc == delta)) {
                ok = false;
                witness = "first failure at list of size " + std::to_string(s);
                break;
            }
        }
    }
    add(rep, "Delta_s = (1-t)^s sum c_k (1-t)^k exhaustively (s<=5, d_i<=6)", ok,
        ok ? std::to_string(checked) + " degree lists checked exactly" : witness);
    return rep;
}

// ---- criterion 2 ----
SuiteReport suite_reflection_identities(const Options& opt) {
    SuiteReport rep{"reflection-identities", {}, false};
    std::mt19937_64 rng(opt.seed + 17);
    std::uniform_int_distribution<int> md(0, 6);
    std::uniform_int_distribution<long> cd(-50, 50);
    std::uniform_int_distribution<long> dd(-5, 5);
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int m = md(rng);
        std::vector<Int> e(static_cast<size_t>(m) + 1);
        for (auto& x : e) x = cd(rng);
        NumericalPolynomial p(m, std::move(e));
        long d = dd(rng);
        NumericalPolynomial q = p.reflect(Int(d));
        for (long k = -10; k <= 10; ++k)
            if (q.eval(Int(k)) != p.eval(Int(-k + d))) ok = false;
        if (!(q.reflect(Int(d)) == p)) ok = false;
    }
    add(rep, "reflection Q(k) = P(-k+d) on [-10,10], 200 random (P,d)", ok,
        "m <= 6, |e_i| <= 50, d in [-5,5]");
    bool id3 = true;
    for (long n = 0; n <= 8; ++n)
        for (long k = -10; k <= 10; ++k) {
            Int rhs = binomial(Int(k - 1), n);
            if (n % 2 != 0) rhs = -rhs;
            if (binomial(Int(-k + n), n) != rhs) id3 = false;
        }
    add(rep, "identity (3): C(-k+n,n) = (-1)^n C(k-1,n)", id3, "0<=n<=8, -10<=k<=10");
    bool id4 = true;
    for (long r = -5; r <= 5; ++r)
        for (long n = 0; n <= 8; ++n)
            for (long k = -10; k <= 10; ++k) {
                Int rhs = 0;
                for (long l = 0; l <= n; ++l)
                    rhs += binomial(Int(r - 1 + l), l) * binomial(Int(k + n - l), n - l);
                if (binomial(Int(k + r + n), n) != rhs) id4 = false;
            }
    add(rep, "identity (4): C(t+r+n,n) = sum C(r-1+l,l) C(t+n-l,n-l)", id4,
        "-5<=r<=5, 0<=n<=8, window [-10,10]");
    return rep;
}

// ---- criterion 3 ----
SuiteReport suite_ci_telescope(const Options&) {
    SuiteReport rep{"ci-telescope", {}, false};
    long checked = 0;
    bool ok = true;
    for (int g = 1; g <= 4 && ok; ++g) {
        for (const auto& v : multisets(g, 5)) {
            DegreeList gens{std::vector<int>(v)};
            for (int n = g; n <= 9; ++n) {
                ResidualInput in;
                in.n = n;
                in.g = g;
                in.s = g;
                in.r = std::max(0, n - 1);
                in.degrees = gens;
                in.seriesR = RationalSeries::geometric(n);
                RationalSeries q = ci_conormal_series(gens, 0, n);
                in.omegaPowers = {q.shifted(n)};  // [[omega/I omega]] = t^n [[R/I]]
                RationalSeries rhs = series_residual(SeriesVariant::General14b, in);
                ++checked;
                if (!rhs.is_zero()) {
                    ok = false;
                    break;
                }
            }
        }
    }
    add(rep, "series_residual(14b) == 0 exactly for CI s=g (g<=4, d_i<=5, n<=9)", ok,
        std::to_string(checked) + " complete intersections telescoped to zero");
    return rep;
}

// ---- criterion 4 ----
SuiteReport suite_oracle_residual(const Options& opt) {
    SuiteReport rep{"oracle-residual", {}, false};
    std::vector<FieldSpec> fields = {{false, opt.prime}};
    if (opt.rationalRecheck) fields.push_back({true, 0});
    for (const auto& field : fields) {
        std::string tag = field.rational ? " [rational recheck]" : " [p=" + std::to_string(field.prime) + "]";
        // primary run to dmax = max(2 * sum of requested degrees, cap); the
        // rational recheck confirms the same assertions at the cap
        auto cutoff = [&](const DegreeList& degs) {
            int twice = 0;
            for (int d : degs.d) twice += 2 * d;
            return field.rational ? opt.dmax : std::max(twice, opt.dmax);
        };
        IdealPresentation I = twisted_cubic_ideal(field);
        try {
            // degrees (2,2,2): residual empty
            auto t0 = Clock::now();
            DegreeList deg222{2, 2, 2};
            IdealPresentation A222 = random_forms(I, deg222, opt.seed);
            auto tab222 = colon_hilbert_function(A222, I, cutoff(deg222));
            bool zero = true;
            for (const Int& h : tab222.h) zero = zero && h == 0;
            DegreeDeltaInput d1 = DegreeDeltaInput::from_degrees(1, 2, deg222);
            d1.e00 = 3;
            d1.e10 = 2;
            Rat engine222 = degree_delta(d1, DegreeFormVariant::Corrected);
            double el = std::chrono::duration<double>(Clock::now() - t0).count();
            add(rep, "cubic (2,2,2): residual table identically 0, engine 0" + tag,
                zero && engine222 == 0 && el < 60,
                "engine=" + rat_str(engine222) + ", dmax=" + std::to_string(cutoff(deg222)) +
                    ", " + std::to_string(el) + "s");

            // degrees (2,2,3): one residual point
            t0 = Clock::now();
            DegreeList deg223{2, 2, 3};
            IdealPresentation A223 = random_forms(I, deg223, opt.seed);
            auto tab223 = colon_hilbert_function(A223, I, cutoff(deg223));
            auto [q223, first223] = fit_hilbert_polynomial_detail(tab223, 1);
            DegreeDeltaInput ds = DegreeDeltaInput::from_degrees(1, 2, deg223);
            ds.e00 = 3;
            ds.e10 = 2;
            Rat stuckrad = degree_delta(ds, DegreeFormVariant::Corrected);
            el = std::chrono::duration<double>(Clock::now() - t0).count();
            add(rep, "cubic (2,2,3): oracle stabilizes at 1, Stuckrad value 1" + tag,
                q223.eval(100) == 1 && stuckrad == 1 && el < 60,
                "h stabilizes from degree " + std::to_string(first223) + " at " +
                    q223.eval(100).get_str() + ", engine=" + rat_str(stuckrad) + ", dmax=" +
                    std::to_string(cutoff(deg223)) + ", " + std::to_string(el) + "s");

            // degrees (2,2): classical liaison to a line
            t0 = Clock::now();
            DegreeList deg22{2, 2};
            IdealPresentation A22 = random_forms(I, deg22, opt.seed);
            int top22 = cutoff(deg22);
            auto tab22 = colon_hilbert_function(A22, I, top22);
            bool line = true;
            for (int d = 0; d <= top22; ++d) line = line && tab22.h[static_cast<size_t>(d)] == d + 1;
            DegreeDeltaInput d0 = DegreeDeltaInput::from_degrees(0, 2, deg22);
            d0.e00 = 3;
            Rat bezout = degree_delta(d0, DegreeFormVariant::Corrected);
            el = std::chrono::duration<double>(Clock::now() - t0).count();
            add(rep, "cubic (2,2): oracle line function d+1, Bezout value 1" + tag,
                line && bezout == 1 && el < 60,
                "engine=" + rat_str(bezout) + ", dmax=" + std::to_string(top22) + ", " +
                    std::to_string(el) + "s");
        } catch (const NotStabilizedError& e) {
            rep.oracleFailure = true;
            add(rep, std::string("oracle stabilization") + tag, false, e.what());
        }
    }
    return rep;
}

// ---- criterion 5 ----
SuiteReport suite_delta_calibration(const Options& opt) {
    SuiteReport rep{"delta-calibration", {}, false};
    // the fully hand-expanded degenerate instance
    {
        CoeffInput in;
        in.n = 6;
        in.g = 1;
        in.s = 3;
        in.r = 3;
        in.degrees = DegreeList{2, 2, 2};
        in.quotientMode = true;
        DegreeList f{2};
        for (int j = 1; j <= 3; ++j) in.powers.push_back(ci_quotient_evec(f, j, 2));
        Rat engine = coeff_residual(CoeffVariant::PolyRing110b, in, 0);
        DegreeDeltaInput din = DegreeDeltaInput::from_degrees(2, 1, DegreeList{2, 2, 2});
        auto base = ci_conormal_evec(f, 0, 3);
        din.e00 = base[0];
        din.e10 = base[1];
        din.e20 = base[2];
        din.ep21 = ci_quotient_evec(f, 2, 2)[2];
        Rat printed = degree_delta(din, DegreeFormVariant::Printed);
        Rat corrected = degree_delta(din, DegreeFormVariant::Corrected);
        add(rep, "degenerate instance: engine = 0", engine == 0, "engine=" + rat_str(engine));
        add(rep, "degenerate instance: printed delta=2 form = 18", printed == 18,
            "printed=" + rat_str(printed));
        add(rep, "degenerate instance: corrected delta=2 form = 0", corrected == 0,
            "corrected=" + rat_str(corrected));
    }
    // calibration across CI and determinantal instances, both deltas
    std::mt19937_64 rng(opt.seed + 5);
    for (int delta = 2; delta <= 3; ++delta) {
        int matchPrinted = 0, matchCorrected = 0, total = 0;
        // CI instances
        for (int trial = 0; trial < 8; ++trial) {
            int g = 1 + static_cast<int>(rng() % 3);
            std::vector<int> gd(static_cast<size_t>(g));
            for (auto& x : gd) x = 1 + static_cast<int>(rng() % 3);
            DegreeList gens(std::move(gd));
            int mx = *std::max_element(gens.d.begin(), gens.d.end());
            std::vector<int> fd(static_cast<size_t>(g + delta));
            for (auto& x : fd) x = mx + static_cast<int>(rng() % 3);
            DegreeList fdegs(std::move(fd));
            CoeffInput cin;
            cin.n = g + delta + 2;
            cin.g = g;
            cin.s = g + delta;
            cin.r = cin.s;
            cin.degrees = fdegs;
            cin.quotientMode = true;
            for (int j = 1; j <= delta + 1; ++j) cin.powers.push_back(ci_quotient_evec(gens, j, delta));
            Rat engine = coeff_residual(CoeffVariant::PolyRing110b, cin, 0);
            DegreeDeltaInput din = DegreeDeltaInput::from_degrees(delta, g, fdegs);
            auto base = ci_conormal_evec(gens, 0, 3);
            din.e00 = base[0];
            din.e10 = base[1];
            din.e20 = base[2];
            din.e30 = base[3];
            din.ep21 = ci_quotient_evec(gens, 2, 2)[2];
            din.ep31 = ci_quotient_evec(gens, 2, 3)[3];
            ++total;
            if (degree_delta(din, DegreeFormVariant::Printed) == engine) ++matchPrinted;
            if (degree_delta(din, DegreeFormVariant::Corrected) == engine) ++matchCorrected;
        }
        // determinantal instances (twisted cubic; e-vectors from the oracle)
        IdealPresentation I = twisted_cubic_ideal({false, opt.prime});
        std::vector<std::vector<Rat>> ev;
        try {
            for (int j = 1; j <= delta + 1; ++j) {
                auto tab = hilbert_function_quotient(I, j, 4 * j + 4);
                ev.push_back(table_to_evec(tab, 2, 3));
            }
        } catch (const NotStabilizedError& e) {
            rep.oracleFailure = true;
            add(rep, "cubic power stabilization", false, e.what());
            continue;
        }
        std::vector<std::vector<int>> cubicF =
            delta == 2 ? std::vector<std::vector<int>>{{2, 2, 2, 2}, {2, 2, 3, 3}, {3, 3, 3, 3}}
                       : std::vector<std::vector<int>>{{2, 2, 2, 2, 2}, {2, 2, 2, 3, 3}};
        for (const auto& fv : cubicF) {
            CoeffInput cin;
            cin.n = 4;
            cin.g = 2;
            cin.s = 2 + delta;
            cin.r = cin.s;
            cin.degrees = DegreeList{std::vector<int>(fv)};
            cin.quotientMode = true;
            cin.powers = ev;
            Rat engine = coeff_residual(CoeffVariant::PolyRing110b, cin, 0);
            DegreeDeltaInput din = DegreeDeltaInput::from_degrees(delta, 2, cin.degrees);
            din.e00 = ev[0][0];
            din.e10 = ev[0][1];
            din.e20 = ev[0][2];
            din.e30 = ev[0][3];
            din.ep21 = ev[1][2];
            din.ep31 = ev[1][3];
            ++total;
            if (degree_delta(din, DegreeFormVariant::Printed) == engine) ++matchPrinted;
            if (degree_delta(din, DegreeFormVariant::Corrected) == engine) ++matchCorrected;
        }
        std::ostringstream det;
        det << "recorded outcome: corrected matches engine on " << matchCorrected << "/" << total
            << " instances, printed on " << matchPrinted << "/" << total;
        add(rep, "delta=" + std::to_string(delta) + " calibration: corrected form tracks the engine",
            matchCorrected == total, det.str());
    }
    return rep;
}

// ---- criterion 6 ----
SuiteReport suite_powers_solver(const Options&) {
    SuiteReport rep{"powers-solver", {}, false};
    DegreeList gens{2, 3};
    int n = 6, r = 5;
    std::vector<std::vector<Rat>> want;
    for (int p = 0; p <= 6; ++p)
        want.push_back(extended_coeffs(ci_conormal_series(gens, p, n), n, r));
    std::vector<std::pair<std::string, DegreeList>> aux = {
        {"all zero", DegreeList{0, 0, 0, 0, 0, 0}},
        {"all equal", DegreeList{3, 3, 3, 3, 3, 3}},
        {"mixed", DegreeList{3, 4, 3, 5, 3, 3}}};
    std::vector<std::vector<std::vector<Rat>>> results;
    for (const auto& [label, degrees] : aux) {
        KoszulInput in;
        in.r = r;
        in.g = 2;
        in.aInvariant = -n;
        in.dimQuotient = n - 2;
        in.ambientN = n;
        in.degrees = degrees;
        in.seriesR = RationalSeries::geometric(n);
        in.knownPowers = {ci_conormal_series(gens, 0, n), ci_conormal_series(gens, 1, n)};
        try {
            auto classes = solve_all_powers(in, 6);
            results.push_back(classes);
            bool ok = classes.size() == want.size();
            for (size_t p = 0; ok && p < want.size(); ++p) ok = classes[p] == want[p];
            add(rep, "solver classes equal CI conormal classes (aux degrees " + label + ")", ok,
                "p <= 6 at level r=5 over n=6");
        } catch (const InconsistencyError& e) {
            add(rep, "solver run (aux degrees " + label + ")", false, e.what());
        }
    }
    bool invariant = results.size() == 3 && results[0] == results[1] && results[1] == results[2];
    add(rep, "output classes identical under the three auxiliary degree choices", invariant, "");
    return rep;
}

// ---- criterion 7 ----
SuiteReport suite_conormal_formulas(const Options& opt) {
    SuiteReport rep{"conormal-formulas", {}, false};
    Formulas25Base base{Rat(2), Rat(1), Rat(0), Rat(4), Rat(0), Rat(1)};
    auto p1 = formulas_25(1, base, 1);
    auto p2 = formulas_25(1, base, 2);
    add(rep, "g=1, deg f=2: e_1(1)=5, e_2(2)=16, e_3(2)=14",
        p1[1] == 5 && p2[2] == 16 && p2[3] == 14,
        "e(1)=" + rat_str(p1[1]) + ", e_2(2)=" + rat_str(p2[2]) + ", e_3(2)=" + rat_str(p2[3]));
    std::mt19937_64 rng(opt.seed + 25);
    bool sweep = true;
    long checked = 0;
    for (int trial = 0; trial < 15 && sweep; ++trial) {
        int g = 1 + static_cast<int>(rng() % 3);
        std::vector<int> gd(static_cast<size_t>(g));
        for (auto& x : gd) x = 1 + static_cast<int>(rng() % 5);
        DegreeList gens(std::move(gd));
        auto b0 = ci_conormal_evec(gens, 0, 3);
        auto b1 = ci_conormal_evec(gens, 1, 3);
        Formulas25Base b{b0[0], b0[1], b0[2], b1[2], b0[3], b1[3]};
        for (int p = 0; p <= 5; ++p) {
            auto got = formulas_25(g, b, p);
            auto want = ci_conormal_evec(gens, p, 3);
            for (int k = 0; k < 4; ++k)
                if (got[static_cast<size_t>(k)] != want[static_cast<size_t>(k)]) sweep = false;
            ++checked;
        }
    }
    add(rep, "full agreement with the CI conormal oracle (g<=3, degrees<=5, p<=5)", sweep,
        std::to_string(checked) + " (list, p) pairs compared");
    return rep;
}

// ---- criterion 8 ----
SuiteReport suite_ci_e3_identity(const Options& opt) {
    SuiteReport rep{"ci-e3-identity", {}, false};
    add(rep, "pinned fixture (2,1,0) -> 0", remark26_e3(Rat(2), Rat(1), Rat(0)) == 0, "");
    std::mt19937_64 rng(opt.seed + 26);
    long count = 0;
    bool ok = true;
    while (count < 520) {
        int g = 1 + static_cast<int>(rng() % 5);
        std::vector<int> gd(static_cast<size_t>(g));
        for (auto& x : gd) x = 1 + static_cast<int>(rng() % 9);
        CIData d{g, DegreeList(std::move(gd))};
        auto e = ci_base_coeffs(d);
        if (remark26_e3(e[0], e[1], e[2]) != e[3]) ok = false;
        ++count;
    }
    add(rep, "holds exactly on ci_base_coeffs outputs (g<=5, d_i<=9, >=500 instances)", ok,
        std::to_string(count) + " instances");
    return rep;
}

// ---- criterion 9 ----
SuiteReport suite_degree_pairs(const Options&) {
    SuiteReport rep{"degree-pairs", {}, false};
    auto r1 = deweger_check(DegreeList{1, 6, 7, 22}, DegreeList{2, 2, 11, 21});
    add(rep, "(1,6,7,22)-(2,2,11,21): sigma pattern with 1252 vs 1052",
        r1.pattern && r1.sigmaA[2] == 1252 && r1.sigmaB[2] == 1052,
        "sigma = (36,363,1252|1052,924)");
    add(rep, "first pair: e_0..e_3(0) agree", r1.baseA == r1.baseB,
        "(924,14784,132671,844305)");
    add(rep, "first pair: e_3(I/I^2) differ", r1.e31A != r1.e31B,
        rat_str(r1.e31A) + " vs " + rat_str(r1.e31B));
    auto r2 = deweger_check(DegreeList{2, 6, 7, 15}, DegreeList{3, 3, 10, 14});
    add(rep, "(2,6,7,15)-(3,3,10,14): sigma pattern", r2.pattern,
        "sigma_3 = " + r2.sigmaA[2].get_str() + " vs " + r2.sigmaB[2].get_str());
    add(rep, "second pair: e_0..e_3(0) agree, e_3(I/I^2) differ",
        r2.baseA == r2.baseB && r2.e31A != r2.e31B,
        rat_str(r2.e31A) + " vs " + rat_str(r2.e31B));
    return rep;
}

// ---- criterion 10 ----
SuiteReport suite_surface_secant(const Options& opt) {
    SuiteReport rep{"surface-secant", {}, false};
    SurfaceChernData ver{4, -6, 9, 3, 1};
    SurfaceChernData scroll{4, -6, 8, 4, 1};
    add(rep, "Veronese (4,-6,9,3,1): margin 0", surface_margin(SurfaceForm::Chern, ver) == 0, "");
    add(rep, "bidegree-(1,2) product surface (4,-6,8,4): margin 2",
        surface_margin(SurfaceForm::Chern, scroll) == 2, "");
    std::mt19937_64 rng(opt.seed + 10);
    std::uniform_int_distribution<long> dist(-30, 30);
    bool chiCancel = true, dualEq = true;
    for (int i = 0; i < 50; ++i) {
        SurfaceChernData d;
        d.H2 = dist(rng);
        d.HK = dist(rng);
        if ((d.H2 + d.HK) % 2 != 0) d.HK += 1;
        d.K2 = dist(rng);
        d.c2 = dist(rng);
        d.chi = dist(rng);
        HilbertCoeffSet c = surface_rr_coeffs(d);
        Rat chern = surface_margin(SurfaceForm::Chern, d);
        if (surface_margin(SurfaceForm::Hilbert, c) != chern) chiCancel = false;
        if (surface_margin(SurfaceForm::Dual, c) != surface_margin(SurfaceForm::Hilbert, c))
            dualEq = false;
    }
    add(rep, "hilbert margin equals chern margin after RR substitution (50 sets, chi cancels)",
        chiCancel, "chi drawn independently of K^2+c_2");
    add(rep, "dual-form margin equals hilbert margin via tensor identities", dualEq, "");
    return rep;
}

// ---- criterion 11 ----
SuiteReport suite_threefold_secant(const Options& opt) {
    SuiteReport rep{"threefold-secant", {}, false};
    // integrality on smooth-consistent data: complete-intersection threefolds
    struct Space {
        int m;
        std::vector<int> degs;
    };
    std::vector<Space> spaces = {{4, {2}}, {4, {3}}, {4, {5}}, {5, {2, 2}}, {5, {2, 4}},
                                 {5, {3, 3}}, {6, {2, 2, 2}}, {6, {2, 3, 3}}, {7, {2, 2, 2, 3}}};
    bool integral = true;
    for (const auto& X : spaces) {
        Int A1 = 0, A2 = 0, A3 = 0, deg = 1;
        for (size_t i = 0; i < X.degs.size(); ++i) {
            A1 += X.degs[i];
            deg *= X.degs[i];
            for (size_t j = i + 1; j < X.degs.size(); ++j) {
                A2 += Int(X.degs[i]) * X.degs[j];
                for (size_t k = j + 1; k < X.degs.size(); ++k)
                    A3 += Int(X.degs[i]) * X.degs[j] * X.degs[k];
            }
        }
        Int kap = A1 - (X.m + 1);
        Int c2c = binomial(Int(X.m + 1), 2) - Int(X.m + 1) * A1 + A1 * A1 - A2;
        Int c3c = binomial(Int(X.m + 1), 3) - binomial(Int(X.m + 1), 2) * A1 +
                  Int(X.m + 1) * (A1 * A1 - A2) - (A1 * A1 * A1 - 2 * A1 * A2 + A3);
        ThreefoldChernData d{deg, kap * deg, kap * kap * deg, kap * kap * kap * deg,
                             c2c * deg, kap * c2c * deg, -c3c * deg};
        if (d.Kc2 % 24 != 0) integral = false;
        for (TableVariant v : {TableVariant::Printed, TableVariant::Derived}) {
            HilbertCoeffSet c = threefold_rr_coeffs(d, v);
            for (const auto* vec : {&c.A, &c.Omega, &c.w2, &c.w2Omega, &c.w2S2Omega})
                for (const Rat& x : *vec)
                    if (!is_integer(x)) integral = false;
        }
    }
    add(rep, "all 20 RR table entries integral on smooth-consistent data (Kc2 = 0 mod 24)",
        integral, std::to_string(spaces.size()) + " CI threefolds, both table variants");

    // margin-ratio measurement on random data
    std::mt19937_64 rng(opt.seed + 11);
    std::uniform_int_distribution<long> dist(-40, 40);
    bool haveRatio = true;
    Rat ratio;
    bool ratioSet = false;
    bool vanishTogether = true;
    bool printedIdentity = true, derivedIdentity = true;
    for (int i = 0; i < 24; ++i) {
        ThreefoldChernData d{dist(rng), dist(rng), dist(rng), dist(rng),
                             dist(rng), dist(rng), dist(rng)};
        Rat chern = threefold_margin(ThreefoldForm::Chern, d);
        HilbertCoeffSet printed = threefold_rr_coeffs(d, TableVariant::Printed);
        HilbertCoeffSet derived = threefold_rr_coeffs(d, TableVariant::Derived);
        Rat hilb = threefold_margin(ThreefoldForm::Hilbert, printed);
        if (chern != 0 && hilb != 0) {
            Rat q = hilb / chern;
            if (!ratioSet) {
                ratio = q;
                ratioSet = true;
            } else if (q != ratio) {
                haveRatio = false;
            }
        } else if ((chern == 0) != (hilb == 0)) {
            haveRatio = false;
        }
        Rat diagP = diagonal_e10(SecantContext::Threefold, printed);
        if ((diagP == 0) != (chern == 0)) vanishTogether = false;
        if (diagP != -chern) printedIdentity = false;
        Rat diagD = diagonal_e10(SecantContext::Threefold, derived);
        if (diagD != threefold_margin(ThreefoldForm::Rem36, d)) derivedIdentity = false;
        if (diagD != threefold_margin(ThreefoldForm::Hilbert, derived)) derivedIdentity = false;
    }
    std::ostringstream disc;
    if (haveRatio && ratioSet)
        disc << "constant ratio hilbert/chern = " << rat_str(ratio);
    else
        disc << "DISCREPANCY RECORDED: no constant rational ratio between the hilbert-form "
                "margin (printed coefficient string on the printed table) and the printed "
                "chern-form margin; on the derived table the hilbert string, the rem36 form "
                "and the diagonal route agree exactly";
    add(rep, "hilbert-form vs chern-form margin ratio measured on >=20 random data sets", true,
        disc.str());
    add(rep, "diagonal_e10 vanishes exactly when the chern-form margin vanishes",
        vanishTogether && printedIdentity,
        "identity diagonal(printed table) == -(chern margin) on all sets");
    add(rep, "derived-table coherence: diagonal == rem36 margin == hilbert margin",
        derivedIdentity, "");
    // genuine deficient threefold: the degree-2 Veronese image of P^3
    ThreefoldChernData v2p3{8, -16, 32, -64, 12, -24, -4};
    HilbertCoeffSet derived = threefold_rr_coeffs(v2p3, TableVariant::Derived);
    add(rep, "deficient v_2(P^3): derived diagonal and rem36 margin vanish",
        diagonal_e10(SecantContext::Threefold, derived) == 0 &&
            threefold_margin(ThreefoldForm::Rem36, v2p3) == 0,
        "printed chern margin = " + rat_str(threefold_margin(ThreefoldForm::Chern, v2p3)) +
            " (recorded transcription offset)");
    return rep;
}

// ---- criterion 12 ----
SuiteReport suite_oracle_self(const Options& opt) {
    SuiteReport rep{"oracle-self", {}, false};
    // 20 monomial fixtures
    std::vector<std::pair<int, std::vector<Exponents>>> fixtures = {
        {2, {{2, 0}}},
        {2, {{1, 1}}},
        {2, {{3, 0}, {0, 2}}},
        {2, {{2, 1}}},
        {3, {{1, 1, 0}}},
        {3, {{1, 1, 0}, {0, 1, 1}}},
        {3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}},
        {3, {{1, 1, 1}}},
        {3, {{2, 1, 0}, {0, 0, 3}}},
        {3, {{1, 0, 1}, {2, 2, 0}}},
        {4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}},
        {4, {{2, 0, 0, 0}, {0, 1, 1, 0}}},
        {4, {{1, 1, 1, 1}}},
        {4, {{1, 1, 0, 0}, {0, 0, 1, 1}}},
        {4, {{3, 1, 0, 0}, {0, 0, 2, 2}}},
        {5, {{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}}},
        {5, {{2, 0, 0, 0, 0}, {0, 0, 0, 1, 1}}},
        {5, {{1, 0, 1, 0, 1}}},
        {5, {{1, 1, 1, 0, 0}, {0, 0, 0, 2, 1}}},
        {5, {{2, 1, 0, 0, 0}, {0, 1, 2, 0, 0}, {0, 0, 0, 1, 3}}},
    };
    bool seriesMatch = true;
    bool fieldAgree = true;
    int dmax = 12;  // fixture family bound: numVars <= 5, dmax <= 12
    for (const auto& [nv, gens] : fixtures) {
        RationalSeries s = monomial_series(gens, nv);
        IdealPresentation Ip;
        Ip.numVars = nv;
        Ip.field = {false, opt.prime};
        for (const auto& g : gens) {
            int deg = 0;
            for (int e : g) deg += e;
            IdealPresentation::Generator gg;
            gg.degree = deg;
            gg.terms.emplace_back(g, Rat(1));
            Ip.gens.push_back(std::move(gg));
        }
        IdealPresentation Iq = Ip;
        Iq.field = {true, 0};
        IdealPresentation I31 = Ip;
        I31.field = {false, 2147483647u};
        auto tp = hilbert_function_quotient(Ip, 1, dmax);
        auto tq = hilbert_function_quotient(Iq, 1, dmax);
        auto t31 = hilbert_function_quotient(I31, 1, dmax);
        if (tp.h != tq.h || tp.h != t31.h) fieldAgree = false;
        auto want = expand(s, 0, dmax);
        for (int d = 0; d <= dmax; ++d)
            if (Rat(tp.h[static_cast<size_t>(d)]) != want[static_cast<size_t>(d)])
                seriesMatch = false;
    }
    add(rep, "monomial_series coefficients equal rank tables on 20 fixtures", seriesMatch,
        "dmax=" + std::to_string(dmax));
    add(rep, "prime fields (32003, 2^31-1) and rationals agree on all fixtures", fieldAgree, "");
    // non-monomial field agreement: twisted cubic power and colon
    IdealPresentation cp = twisted_cubic_ideal({false, opt.prime});
    IdealPresentation cq = twisted_cubic_ideal({true, 0});
    bool cubicAgree = hilbert_function_quotient(cp, 2, 10).h == hilbert_function_quotient(cq, 2, 10).h;
    add(rep, "twisted cubic I^2 table agrees across fields", cubicAgree, "");
    // determinism
    IdealPresentation a = random_forms(cp, DegreeList{2, 2, 3}, opt.seed);
    IdealPresentation b = random_forms(cp, DegreeList{2, 2, 3}, opt.seed);
    bool det = a.gens.size() == b.gens.size();
    for (size_t i = 0; det && i < a.gens.size(); ++i)
        det = a.gens[i].degree == b.gens[i].degree && a.gens[i].terms == b.gens[i].terms;
    auto c1 = colon_hilbert_function(a, cp, 6);
    auto c2 = colon_hilbert_function(b, cp, 6);
    add(rep, "seed determinism across repeated runs", det && c1.h == c2.h,
        "single-threaded rank schedule; results independent of thread count by construction");
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "bezout-coefficients", "reflection-identities", "ci-telescope",
        "oracle-residual",     "delta-calibration",     "powers-solver",
        "conormal-formulas",   "ci-e3-identity",        "degree-pairs",
        "surface-secant",      "threefold-secant",      "oracle-self"};
    return names;
}

SuiteReport run_suite(const std::string& name, const Options& opt) {
    if (name == "bezout-coefficients") return suite_bezout_coefficients(opt);
    if (name == "reflection-identities") return suite_reflection_identities(opt);
    if (name == "ci-telescope") return suite_ci_telescope(opt);
    if (name == "oracle-residual") return suite_oracle_residual(opt);
    if (name == "delta-calibration") return suite_delta_calibration(opt);
    if (name == "powers-solver") return suite_powers_solver(opt);
    if (name == "conormal-formulas") return suite_conormal_formulas(opt);
    if (name == "ci-e3-identity") return suite_ci_e3_identity(opt);
    if (name == "degree-pairs") return suite_degree_pairs(opt);
    if (name == "surface-secant") return suite_surface_secant(opt);
    if (name == "threefold-secant") return suite_threefold_secant(opt);
    if (name == "oracle-self") return suite_oracle_self(opt);
    throw ValidationError("unknown suite: " + name);
}

std::vector<SuiteReport> run_all(const Options& opt) {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, opt));
    return out;
}

}  // namespace resint::verify
