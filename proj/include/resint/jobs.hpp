#ifndef RESINT_JOBS_HPP
#define RESINT_JOBS_HPP

#include "resint/json_io.hpp"
#include "resint/verify.hpp"

namespace resint {

struct JobOptions {
    uint32_t prime = 32003;
    uint64_t seed = 1;
    int dmax = 10;
    std::string format = "json";  // json | table
};

struct JobResult {
    Json report;        // {"command":..., "input":..., "output":...}
    int exitCode = 0;   // 0 ok, 2 verification mismatch, 3 oracle not stabilized
};

// Dispatch a validated job body.  Throws ValidationError on malformed input
// (exit code 1 at the CLI boundary).
JobResult execute(const Json& job, const JobOptions& options);

// aligned-text rendering of a report
std::string render_table(const Json& report);

}  // namespace resint

#endif
