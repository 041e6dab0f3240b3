#include "resint/jobs.hpp"

#include <sstream>

#include "resint/oracle.hpp"
#include "resint/powers.hpp"
#include "resint/residual.hpp"
#include "resint/secant.hpp"

namespace resint {

namespace {

int geti(const Json& j, const char* key) {
    if (!j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
    return j.at(key).get<int>();
}

DegreeList degrees_of(const Json& j, const char* key = "degrees") {
    if (!j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
    return DegreeList(j.at(key).get<std::vector<int>>());
}

Json handle_series(const Json& job) {
    std::string op = job.at("op").get<std::string>();
    auto a = [&] { return series_from_json(job.at("a")); };
    auto b = [&] { return series_from_json(job.at("b")); };
    if (op == "add") return Json{{"series", to_json(a() + b())}, {"pretty", (a() + b()).str()}};
    if (op == "sub") return Json{{"series", to_json(a() - b())}, {"pretty", (a() - b()).str()}};
    if (op == "mul") return Json{{"series", to_json(a() * b())}, {"pretty", (a() * b()).str()}};
    if (op == "expand") {
        long lo = job.at("lo").get<long>(), hi = job.at("hi").get<long>();
        Json coeffs = Json::array();
        for (const Rat& c : expand(a(), lo, hi)) coeffs.push_back(to_json(c));
        return Json{{"coefficients", coeffs}, {"lo", lo}, {"hi", hi}};
    }
    if (op == "inverse") return Json{{"series", to_json(substitute_inverse(a()))}};
    if (op == "decompose") {
        EDecomposition d = decompose(a(), geti(job, "level"));
        Json e = Json::array();
        for (const Rat& c : d.e) e.push_back(to_json(c));
        return Json{{"level", d.level},
                    {"e", e},
                    {"remainder", to_json(RationalSeries(d.remainder, 0))}};
    }
    if (op == "equiv") {
        bool eq = equiv_r(a(), b(), geti(job, "n"), geti(job, "r"));
        return Json{{"equivalent", eq}};
    }
    if (op == "dual") return Json{{"series", to_json(canonical_dual_class(a(), geti(job, "n")))}};
    if (op == "associated")
        return Json{{"polynomial", to_json(associated_polynomial(a(), geti(job, "level")))}};
    throw ValidationError("series: unknown op \"" + op + "\"");
}

Json handle_residual_series(const Json& job) {
    std::string v = job.at("variant").get<std::string>();
    SeriesVariant variant;
    bool polyring;
    if (v == "14a") variant = SeriesVariant::General14a, polyring = false;
    else if (v == "14b") variant = SeriesVariant::General14b, polyring = false;
    else if (v == "15a") variant = SeriesVariant::PolyRing15a, polyring = true;
    else if (v == "15b") variant = SeriesVariant::PolyRing15b, polyring = true;
    else throw ValidationError("residual-series: variant must be 14a|14b|15a|15b");
    ResidualInput in;
    in.n = geti(job, "n");
    in.g = geti(job, "g");
    in.s = geti(job, "s");
    in.r = geti(job, "r");
    in.degrees = degrees_of(job);
    in.polynomialRingMode = polyring;
    in.seriesR = job.contains("seriesR") ? series_from_json(job.at("seriesR"))
                                         : RationalSeries::geometric(in.n);
    for (const auto& p : job.at("powers")) {
        RationalSeries s = series_from_json(p.is_object() && p.contains("series") ? p.at("series") : p);
        (polyring ? in.quotientPowers : in.omegaPowers).push_back(s);
    }
    RationalSeries rhs = series_residual(variant, in);
    Json out{{"series", to_json(rhs)}, {"pretty", rhs.str()}};
    Json cls = Json::array();
    for (const Rat& c : extended_coeffs(rhs, in.n, in.r)) cls.push_back(to_json(c));
    out["classAtLevelR"] = cls;
    if (job.contains("check"))
        out["equivalentToCheck"] = equiv_r(rhs, series_from_json(job.at("check")), in.n, in.r);
    return out;
}

Json handle_residual_coeffs(const Json& job) {
    std::string v = job.at("variant").get<std::string>();
    CoeffVariant variant;
    bool quotient;
    if (v == "19a") variant = CoeffVariant::General19a, quotient = false;
    else if (v == "19b") variant = CoeffVariant::General19b, quotient = false;
    else if (v == "110a") variant = CoeffVariant::PolyRing110a, quotient = true;
    else if (v == "110b") variant = CoeffVariant::PolyRing110b, quotient = true;
    else throw ValidationError("residual-coeffs: variant must be 19a|19b|110a|110b");
    CoeffInput in;
    in.n = geti(job, "n");
    in.g = geti(job, "g");
    in.s = geti(job, "s");
    in.r = geti(job, "r");
    in.degrees = degrees_of(job);
    in.quotientMode = quotient;
    if (job.contains("eR")) in.eR = ratvec_from_json(job.at("eR"));
    else if (!quotient) throw ValidationError("residual-coeffs: general variants need \"eR\"");
    if (job.contains("eRI")) in.eRI = ratvec_from_json(job.at("eRI"));
    std::vector<std::pair<int, std::vector<Rat>>> tagged;
    for (const auto& p : job.at("powers"))
        tagged.emplace_back(p.at("j").get<int>(), ratvec_from_json(p.at("e")));
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (size_t i = 0; i < tagged.size(); ++i) {
        if (tagged[i].first != static_cast<int>(i) + 1)
            throw ValidationError("residual-coeffs: powers must cover j = 1..jmax");
        in.powers.push_back(tagged[i].second);
    }
    int i = geti(job, "i");
    return Json{{"value", to_json(coeff_residual(variant, in, i))}};
}

Json handle_residual_degree(const Json& job) {
    DegreeDeltaInput in;
    in.delta = geti(job, "delta");
    in.g = geti(job, "g");
    if (job.contains("degrees")) {
        in = DegreeDeltaInput::from_degrees(in.delta, in.g, degrees_of(job));
    } else {
        in.sigma_s = int_from_json(job.at("sigma_s"));
        if (job.contains("sigma_1")) in.sigma1 = int_from_json(job.at("sigma_1"));
        if (job.contains("sigma_2")) in.sigma2 = int_from_json(job.at("sigma_2"));
        if (job.contains("sigma_3")) in.sigma3 = int_from_json(job.at("sigma_3"));
    }
    std::vector<Rat> e = job.contains("e") ? ratvec_from_json(job.at("e")) : std::vector<Rat>{};
    e.resize(4, Rat(0));
    in.e00 = e[0];
    in.e10 = e[1];
    in.e20 = e[2];
    in.e30 = e[3];
    if (job.contains("ep2")) in.ep21 = rat_from_json(job.at("ep2"));
    if (job.contains("ep3")) in.ep31 = rat_from_json(job.at("ep3"));
    DegreeFormVariant variant = DegreeFormVariant::Printed;
    if (job.contains("variant")) {
        std::string v = job.at("variant").get<std::string>();
        if (v == "corrected") variant = DegreeFormVariant::Corrected;
        else if (v != "printed") throw ValidationError("residual-degree: variant printed|corrected");
    }
    return Json{{"value", to_json(degree_delta(in, variant))}};
}

Json handle_powers_solve(const Json& job) {
    KoszulInput in;
    in.r = geti(job, "r");
    in.g = geti(job, "g");
    in.aInvariant = int_from_json(job.at("a"));
    in.dimQuotient = geti(job, "dimQuotient");
    in.ambientN = job.contains("n") ? geti(job, "n") : in.dimQuotient + in.g;
    in.degrees = degrees_of(job);
    in.seriesR = job.contains("seriesR") ? series_from_json(job.at("seriesR"))
                                         : RationalSeries::geometric(in.ambientN);
    for (const auto& s : job.at("known")) in.knownPowers.push_back(series_from_json(s));
    if (job.contains("assumeDuality")) in.assumeDuality = job.at("assumeDuality").get<bool>();
    int pmax = geti(job, "pmax");
    auto classes = solve_all_powers(in, pmax);
    Json out = Json::array();
    for (const auto& cls : classes) {
        Json row = Json::array();
        for (const Rat& c : cls) row.push_back(to_json(c));
        out.push_back(row);
    }
    return Json{{"classes", out}, {"levelR", in.r}, {"ambientN", in.ambientN}};
}

Json handle_powers_formulas(const Json& job) {
    if (job.contains("deweger")) {
        const Json& pair = job.at("deweger");
        auto rep = deweger_check(DegreeList(pair.at(0).get<std::vector<int>>()),
                                 DegreeList(pair.at(1).get<std::vector<int>>()));
        Json sa = Json::array(), sb = Json::array(), ba = Json::array(), bb = Json::array();
        for (int i = 0; i < 4; ++i) {
            sa.push_back(to_json(rep.sigmaA[static_cast<size_t>(i)]));
            sb.push_back(to_json(rep.sigmaB[static_cast<size_t>(i)]));
            ba.push_back(to_json(rep.baseA[static_cast<size_t>(i)]));
            bb.push_back(to_json(rep.baseB[static_cast<size_t>(i)]));
        }
        return Json{{"sigmaA", sa},       {"sigmaB", sb},
                    {"pattern", rep.pattern}, {"baseA", ba},
                    {"baseB", bb},        {"e31A", to_json(rep.e31A)},
                    {"e31B", to_json(rep.e31B)}, {"e31Difference", to_json(rep.e31Difference())}};
    }
    if (job.contains("remark26")) {
        auto e = ratvec_from_json(job.at("remark26"));
        if (e.size() < 3) throw ValidationError("remark26 needs [e0,e1,e2]");
        return Json{{"e3", to_json(remark26_e3(e[0], e[1], e[2]))}};
    }
    Json out;
    Formulas25Base base;
    int g;
    if (job.contains("ciDegrees")) {
        DegreeList gens = degrees_of(job, "ciDegrees");
        g = gens.size();
        CIData data{g, gens};
        auto b = ci_base_coeffs(data);
        auto b1 = ci_conormal_evec(gens, 1, 3);
        base = {b[0], b[1], b[2], b1[2], b[3], b1[3]};
        Json baseJson = Json::array();
        for (const Rat& x : {base.e00, base.e10, base.e20, base.e21, base.e30, base.e31})
            baseJson.push_back(to_json(x));
        out["base"] = baseJson;
        Json alphas = Json::array();
        alphas.push_back(to_json(data.alpha1()));
        alphas.push_back(to_json(data.alpha2()));
        alphas.push_back(to_json(data.alpha3()));
        out["alpha"] = alphas;
    } else {
        g = geti(job, "g");
        auto b = ratvec_from_json(job.at("base"));
        if (b.size() != 6)
            throw ValidationError("powers-formulas: base must be [e00,e10,e20,e21,e30,e31]");
        base = {b[0], b[1], b[2], b[3], b[4], b[5]};
    }
    int p = geti(job, "p");
    auto row = formulas_25(g, base, p);
    Json e = Json::array();
    for (const Rat& x : row) e.push_back(to_json(x));
    out["e"] = e;
    out["p"] = p;
    return out;
}

Json coeffset_json(const HilbertCoeffSet& c) {
    Json out;
    auto put = [&](const char* key, const std::vector<Rat>& v) {
        if (v.empty()) return;
        Json a = Json::array();
        for (const Rat& x : v) a.push_back(to_json(x));
        out[key] = a;
    };
    put("A", c.A);
    put("Omega", c.Omega);
    put("omega2", c.w2);
    put("omega2Omega", c.w2Omega);
    put("omega2S2Omega", c.w2S2Omega);
    put("omegaDual", c.wdual);
    return out;
}

Json handle_secant(const Json& job) {
    std::string kind = job.at("kind").get<std::string>();
    std::string form = job.contains("form") ? job.at("form").get<std::string>() : "chern";
    Json out;
    Rat margin;
    if (kind == "surface") {
        SurfaceChernData d;
        d.H2 = int_from_json(job.at("H2"));
        d.HK = int_from_json(job.at("HK"));
        d.K2 = int_from_json(job.at("K2"));
        d.c2 = int_from_json(job.at("c2"));
        d.chi = job.contains("chi") ? int_from_json(job.at("chi")) : Int(0);
        if (job.contains("assertSmooth") && job.at("assertSmooth").get<bool>())
            d.validate_smooth();
        HilbertCoeffSet cs = surface_rr_coeffs(d);
        if (form == "chern") margin = surface_margin(SurfaceForm::Chern, d);
        else if (form == "hilbert") margin = surface_margin(SurfaceForm::Hilbert, cs);
        else if (form == "dual") margin = surface_margin(SurfaceForm::Dual, cs);
        else throw ValidationError("secant surface: form chern|hilbert|dual");
        out["coefficients"] = coeffset_json(cs);
        out["diagonal"] = to_json(diagonal_e10(SecantContext::Surface, cs));
    } else if (kind == "threefold") {
        ThreefoldChernData d;
        d.H3 = int_from_json(job.at("H3"));
        d.KH2 = int_from_json(job.at("KH2"));
        d.K2H = int_from_json(job.at("K2H"));
        d.K3 = int_from_json(job.at("K3"));
        d.c2H = int_from_json(job.at("c2H"));
        d.Kc2 = int_from_json(job.at("Kc2"));
        d.c3 = int_from_json(job.at("c3"));
        if (job.contains("assertSmooth") && job.at("assertSmooth").get<bool>())
            d.validate_smooth();
        TableVariant tv = TableVariant::Printed;
        if (job.contains("table") && job.at("table").get<std::string>() == "derived")
            tv = TableVariant::Derived;
        HilbertCoeffSet cs = threefold_rr_coeffs(d, tv);
        if (form == "chern") margin = threefold_margin(ThreefoldForm::Chern, d);
        else if (form == "rem36") margin = threefold_margin(ThreefoldForm::Rem36, d);
        else if (form == "hilbert") margin = threefold_margin(ThreefoldForm::Hilbert, cs);
        else throw ValidationError("secant threefold: form chern|hilbert|rem36");
        out["coefficients"] = coeffset_json(cs);
        out["diagonal"] = to_json(diagonal_e10(SecantContext::Threefold, cs));
    } else {
        throw ValidationError("secant: kind surface|threefold");
    }
    out["margin"] = to_json(margin);
    out["verdict"] = (margin == 0) ? "deficient boundary" : "non-boundary";
    if (kind == "surface")
        out["annotation"] =
            "for an equidimensional surface in P^4 with at most isolated Gorenstein "
            "singularities the margin vanishes identically (equality case); this tool does "
            "not check those hypotheses";
    return out;
}

Json handle_oracle(const Json& job, const JobOptions& options, int& exitCode) {
    std::string op = job.at("op").get<std::string>();
    auto ideal = [&] {
        IdealPresentation p = ideal_from_json(job.at("ideal"));
        if (job.contains("prime")) p.field = {false, job.at("prime").get<uint32_t>()};
        return p;
    };
    int dmax = job.contains("dmax") ? geti(job, "dmax") : options.dmax;
    try {
        if (op == "graded-dim") {
            Json dims = Json::array();
            IdealPresentation I = ideal();
            if (job.contains("d")) return Json{{"dim", graded_dim(I, geti(job, "d"))}};
            for (int d = 0; d <= dmax; ++d) dims.push_back(graded_dim(I, d));
            return Json{{"dims", dims}};
        }
        if (op == "hilbert-quotient") {
            int power = job.contains("power") ? geti(job, "power") : 1;
            auto tab = hilbert_function_quotient(ideal(), power, dmax);
            Json out{{"table", to_json(tab)}};
            if (job.contains("dim")) {
                auto [q, first] = fit_hilbert_polynomial_detail(tab, geti(job, "dim"));
                out["polynomial"] = to_json(q);
                out["stabilizedFrom"] = first;
                out["series"] = to_json(table_to_series(tab, geti(job, "dim")));
            }
            return out;
        }
        if (op == "colon") {
            IdealPresentation A = ideal_from_json(job.at("colonWith"));
            auto tab = colon_hilbert_function(A, ideal(), dmax);
            return Json{{"table", to_json(tab)},
                        {"annotation",
                         "degreewise colon of the ideal as presented; low-degree values may "
                         "differ from its saturation"}};
        }
        if (op == "random-forms") {
            uint64_t seed = job.contains("seed") ? job.at("seed").get<uint64_t>() : options.seed;
            IdealPresentation A = random_forms(ideal(), degrees_of(job), seed);
            return Json{{"ideal", to_json(A)}};
        }
        if (op == "fit") {
            HilbertFunctionTable tab;
            for (const auto& h : job.at("table")) tab.h.push_back(int_from_json(h));
            auto [q, first] = fit_hilbert_polynomial_detail(tab, geti(job, "dim"));
            return Json{{"polynomial", to_json(q)}, {"stabilizedFrom", first}};
        }
        if (op == "monomial-series") {
            std::vector<Exponents> gens;
            for (const auto& g : job.at("monomials")) gens.push_back(g.get<Exponents>());
            RationalSeries s = monomial_series(gens, geti(job, "vars"));
            return Json{{"series", to_json(s)}, {"pretty", s.str()}};
        }
    } catch (const NotStabilizedError& e) {
        exitCode = 3;
        return Json{{"error", "not-stabilized"}, {"what", e.what()}};
    }
    throw ValidationError("oracle: unknown op \"" + op + "\"");
}

Json handle_verify(const Json& job, const JobOptions& options, int& exitCode) {
    verify::Options vo;
    vo.prime = options.prime;
    vo.seed = options.seed;
    vo.dmax = options.dmax;
    if (job.contains("rationalRecheck")) vo.rationalRecheck = job.at("rationalRecheck").get<bool>();
    std::string suite = job.contains("suite") ? job.at("suite").get<std::string>() : "all";
    std::vector<verify::SuiteReport> reports;
    if (suite == "all") {
        reports = verify::run_all(vo);
    } else {
        reports.push_back(verify::run_suite(suite, vo));
    }
    bool allPass = true, oracleFail = false;
    Json suites = Json::array();
    for (const auto& rep : reports) {
        Json checks = Json::array();
        for (const auto& c : rep.checks)
            checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        suites.push_back(Json{{"suite", rep.suite}, {"pass", rep.all_pass()}, {"checks", checks}});
        allPass = allPass && rep.all_pass();
        oracleFail = oracleFail || rep.oracleFailure;
    }
    if (oracleFail) exitCode = 3;
    else if (!allPass) exitCode = 2;
    return Json{{"suites", suites}, {"pass", allPass}};
}

}  // namespace

JobResult execute(const Json& job, const JobOptions& options) {
    if (!job.is_object() || !job.contains("command"))
        throw ValidationError("job body must be an object with a \"command\" field");
    std::string command = job.at("command").get<std::string>();
    JobResult result;
    Json output;
    if (command == "series") output = handle_series(job);
    else if (command == "residual-series") output = handle_residual_series(job);
    else if (command == "residual-coeffs") output = handle_residual_coeffs(job);
    else if (command == "residual-degree") output = handle_residual_degree(job);
    else if (command == "powers-solve") output = handle_powers_solve(job);
    else if (command == "powers-formulas") output = handle_powers_formulas(job);
    else if (command == "secant") output = handle_secant(job);
    else if (command == "oracle") output = handle_oracle(job, options, result.exitCode);
    else if (command == "verify") output = handle_verify(job, options, result.exitCode);
    else throw ValidationError("unknown command \"" + command + "\"");
    result.report = Json{{"command", command}, {"input", job}, {"output", output}};
    return result;
}

namespace {

void render_value(std::ostream& os, const std::string& key, const Json& v, int indent) {
    std::string pad(static_cast<size_t>(indent), ' ');
    if (v.is_object()) {
        os << pad << key << ":\n";
        for (const auto& [k, val] : v.items()) render_value(os, k, val, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        os << pad << key << ":\n";
        for (size_t i = 0; i < v.size(); ++i)
            render_value(os, "[" + std::to_string(i) + "]", v[i], indent + 2);
    } else {
        os << pad << key << " = " << v.dump() << "\n";
    }
}

}  // namespace

std::string render_table(const Json& report) {
    std::ostringstream os;
    os << "command: " << report.at("command").get<std::string>() << "\n";
    render_value(os, "output", report.at("output"), 0);
    return os.str();
}

}  // namespace resint
