#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resint/jobs.hpp"

using namespace resint;

TEST_CASE("series JSON round trip") {
    Json j = Json::parse(R"({"num":[[0,1],[1,2]],"pole":2})");
    RationalSeries s = series_from_json(j);
    CHECK(to_json(s) == j);
    CHECK(expand(s, 0, 3) == std::vector<Rat>{1, 4, 7, 10});
    // big and fractional coefficients go through strings
    Rat c = Rat(Int("123456789012345678901234567891")) / 7;
    RationalSeries big(LaurentPoly::monomial(-3, c), 1);
    CHECK(series_from_json(to_json(big)) == big);
}

TEST_CASE("numerical polynomial JSON") {
    NumericalPolynomial p(2, {3, 2, 1});
    CHECK(numpoly_from_json(to_json(p)) == p);
    CHECK(to_json(p) == Json::parse(R"({"e":[3,2,1],"m":2})"));
}

TEST_CASE("ideal JSON matches the documented schema") {
    Json j = Json::parse(R"({
        "vars": 4,
        "field": {"prime": 32003},
        "gens": [{"deg": 2, "terms": [[[1,0,1,0], 1], [[0,2,0,0], -1]]}]
    })");
    IdealPresentation p = ideal_from_json(j);
    CHECK(p.numVars == 4);
    CHECK(p.field.prime == 32003);
    CHECK(p.gens.size() == 1);
    CHECK(graded_dim(p, 2) == 1);
    IdealPresentation q = ideal_from_json(to_json(p));
    CHECK(q.gens[0].terms == p.gens[0].terms);
}

TEST_CASE("residual-degree job: the Stuckrad example") {
    Json job = Json::parse(
        R"({"command":"residual-degree","delta":1,"sigma_s":12,"sigma_1":7,"g":2,"e":[3,2]})");
    JobResult r = execute(job, {});
    CHECK(r.exitCode == 0);
    CHECK(r.report.at("output").at("value") == Json(1));
}

TEST_CASE("secant job: Veronese boundary verdict") {
    Json job = Json::parse(
        R"({"command":"secant","kind":"surface","form":"chern","H2":4,"HK":-6,"K2":9,"c2":3,"chi":1})");
    JobResult r = execute(job, {});
    CHECK(r.report.at("output").at("margin") == Json(0));
    CHECK(r.report.at("output").at("verdict") == Json("deficient boundary"));
    CHECK(r.report.at("output").at("diagonal") == Json(0));
}

TEST_CASE("series job ops") {
    Json mul = Json::parse(
        R"({"command":"series","op":"mul","a":{"num":[[0,1]],"pole":1},"b":{"num":[[0,1]],"pole":1}})");
    JobResult r = execute(mul, {});
    CHECK(r.report.at("output").at("series") == Json::parse(R"({"num":[[0,1]],"pole":2})"));
    Json bad = Json::parse(
        R"({"command":"series","op":"expand","a":{"num":[[0,1]],"pole":1},"lo":3,"hi":0})");
    CHECK_THROWS_AS(execute(bad, {}), ValidationError);
}

TEST_CASE("residual-coeffs job matches the documented shape") {
    Json job = Json::parse(R"({
        "command": "residual-coeffs", "variant": "110b",
        "n": 6, "g": 1, "s": 3, "r": 3, "i": 0, "degrees": [2, 2, 2],
        "powers": [{"j":1,"e":[2,1,0]}, {"j":2,"e":[4,6,4]}, {"j":3,"e":[6,15,20]}]
    })");
    JobResult r = execute(job, {});
    CHECK(r.report.at("output").at("value") == Json(0));
}

TEST_CASE("powers-solve job derives the ambient from dimQuotient + g") {
    // CI (2,3) in 6 variables; known powers p = 0, 1
    Json known = Json::array();
    DegreeList gens{2, 3};
    for (int p = 0; p <= 1; ++p) known.push_back(to_json(ci_conormal_series(gens, p, 6)));
    Json job{{"command", "powers-solve"}, {"r", 5},        {"g", 2},
             {"a", -6},                   {"dimQuotient", 4}, {"degrees", {0, 0, 0, 0, 0, 0}},
             {"known", known},            {"pmax", 2}};
    JobResult r = execute(job, {});
    CHECK(r.report.at("output").at("ambientN") == Json(6));
    auto want = extended_coeffs(ci_conormal_series(gens, 2, 6), 6, 5);
    Json row = r.report.at("output").at("classes").at(2);
    for (int i = 0; i <= 5; ++i) CHECK(rat_from_json(row.at(static_cast<size_t>(i))) == want[static_cast<size_t>(i)]);
}

TEST_CASE("report determinism and input echo round trip") {
    Json job = Json::parse(
        R"({"command":"powers-formulas","ciDegrees":[2,3],"p":3})");
    JobOptions opt;
    std::string a = execute(job, opt).report.dump();
    std::string b = execute(job, opt).report.dump();
    CHECK(a == b);
    Json echoed = execute(job, opt).report.at("input");
    CHECK(execute(echoed, opt).report.dump() == a);
}

TEST_CASE("oracle job: not-stabilized surfaces as exit code 3") {
    Json job = Json::parse(R"({
        "command": "oracle", "op": "fit", "dim": 2,
        "table": [1, 2, 4, 8, 16, 32]
    })");
    JobResult r = execute(job, {});
    CHECK(r.exitCode == 3);
    CHECK(r.report.at("output").at("error") == Json("not-stabilized"));
}

TEST_CASE("oracle job: monomial series") {
    Json job = Json::parse(
        R"({"command":"oracle","op":"monomial-series","vars":2,"monomials":[[2,0]]})");
    JobResult r = execute(job, {});
    CHECK(r.report.at("output").at("series") == Json::parse(R"({"num":[[0,1],[1,1]],"pole":1})"));
}

TEST_CASE("unknown command and malformed bodies are validation errors") {
    CHECK_THROWS_AS(execute(Json::parse(R"({"command":"nope"})"), {}), ValidationError);
    CHECK_THROWS_AS(execute(Json::parse(R"({"no":"command"})"), {}), ValidationError);
}

TEST_CASE("table rendering is stable") {
    Json job = Json::parse(
        R"({"command":"residual-degree","delta":0,"g":2,"sigma_s":4,"e":[3]})");
    JobResult r = execute(job, {});
    std::string t1 = render_table(r.report);
    std::string t2 = render_table(execute(job, {}).report);
    CHECK(t1 == t2);
    CHECK(t1.find("value = 1") != std::string::npos);
}
