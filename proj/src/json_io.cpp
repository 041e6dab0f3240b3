#include "resint/json_io.hpp"

namespace resint {

Json to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json to_json(const Rat& v) {
    if (is_integer(v)) return to_json(Int(v.get_num()));
    return Json(v.get_str());  // "p/q"
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw ValidationError("expected an integer (number or decimal string)");
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) {
        Rat r(j.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw ValidationError("expected a rational (integer or \"p/q\" string)");
}

Json to_json(const RationalSeries& s) {
    Json num = Json::array();
    for (const auto& [e, c] : s.num().terms()) num.push_back(Json::array({e, to_json(c)}));
    return Json{{"num", num}, {"pole", s.pole()}};
}

RationalSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("pole"))
        throw ValidationError("series literal must be {\"num\":[[e,c],...],\"pole\":k}");
    LaurentPoly n;
    for (const auto& term : j.at("num")) {
        if (!term.is_array() || term.size() != 2)
            throw ValidationError("series term must be [exponent, coefficient]");
        n.add_term(term.at(0).get<long>(), rat_from_json(term.at(1)));
    }
    int pole = j.at("pole").get<int>();
    return RationalSeries(std::move(n), pole);
}

Json to_json(const NumericalPolynomial& p) {
    Json e = Json::array();
    for (const auto& x : p.coeffs()) e.push_back(to_json(x));
    return Json{{"m", p.degree_bound()}, {"e", e}};
}

NumericalPolynomial numpoly_from_json(const Json& j) {
    int m = j.at("m").get<int>();
    std::vector<Int> e;
    for (const auto& x : j.at("e")) e.push_back(int_from_json(x));
    return NumericalPolynomial(m, std::move(e));
}

Json to_json(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

std::vector<Rat> ratvec_from_json(const Json& j) {
    std::vector<Rat> v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

Json to_json(const IdealPresentation& p) {
    Json field = p.field.rational ? Json{{"rational", true}} : Json{{"prime", p.field.prime}};
    Json gens = Json::array();
    for (const auto& g : p.gens) {
        Json terms = Json::array();
        for (const auto& [e, c] : g.terms) terms.push_back(Json::array({Json(e), to_json(c)}));
        gens.push_back(Json{{"deg", g.degree}, {"terms", terms}});
    }
    return Json{{"vars", p.numVars}, {"field", field}, {"gens", gens}, {"seed", p.seed}};
}

IdealPresentation ideal_from_json(const Json& j) {
    IdealPresentation p;
    p.numVars = j.at("vars").get<int>();
    if (j.contains("field")) {
        const Json& f = j.at("field");
        if (f.contains("rational") && f.at("rational").get<bool>()) {
            p.field.rational = true;
        } else if (f.contains("prime")) {
            p.field.prime = f.at("prime").get<uint32_t>();
        }
    }
    if (j.contains("seed")) p.seed = j.at("seed").get<uint64_t>();
    for (const auto& g : j.at("gens")) {
        IdealPresentation::Generator gen;
        gen.degree = g.at("deg").get<int>();
        for (const auto& term : g.at("terms")) {
            if (!term.is_array() || term.size() != 2)
                throw ValidationError("generator term must be [[e...], c]");
            Exponents e = term.at(0).get<Exponents>();
            gen.terms.emplace_back(std::move(e), rat_from_json(term.at(1)));
        }
        p.gens.push_back(std::move(gen));
    }
    p.validate();
    return p;
}

Json to_json(const HilbertFunctionTable& t) {
    Json h = Json::array();
    for (const auto& x : t.h) h.push_back(to_json(x));
    Json out{{"h", h}};
    if (t.stabilizedFrom) out["stabilizedFrom"] = *t.stabilizedFrom;
    return out;
}

std::string series_pretty(const RationalSeries& s) { return s.str(); }

}  // namespace resint
