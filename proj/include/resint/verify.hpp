#ifndef RESINT_VERIFY_HPP
#define RESINT_VERIFY_HPP

#include <string>
#include <vector>

#include "resint/numeric.hpp"

namespace resint::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // evidence: values, oracle tables, recorded outcomes
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool oracleFailure = false;  // a fit refused to stabilize

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct Options {
    uint32_t prime = 32003;
    uint64_t seed = 1;
    int dmax = 10;
    bool rationalRecheck = true;
};

// Suites, in the order of the acceptance criteria:
//   bezout-coefficients, reflection-identities, ci-telescope,
//   oracle-residual, delta-calibration, powers-solver, conormal-formulas,
//   ci-e3-identity, degree-pairs, surface-secant, threefold-secant,
//   oracle-self
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const Options& opt);
std::vector<SuiteReport> run_all(const Options& opt);

}  // namespace resint::verify

#endif
