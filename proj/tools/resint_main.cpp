// Batch front end: reads a job body (JSON) from --input or stdin, dispatches,
// and writes the report to stdout.  Diagnostics go to stderr.
//
// Exit codes: 0 success, 1 validation error, 2 verification mismatch
// (verify command), 3 oracle not stabilized.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "resint/jobs.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert series of residual intersections"};
    std::string inputFile;
    std::string format = "json";
    std::string suite;
    resint::JobOptions options;
    app.add_option("--input", inputFile, "job file (JSON); stdin when omitted");
    app.add_option("--prime", options.prime, "working prime for the oracle (default 32003)");
    app.add_option("--seed", options.seed, "seed for randomized generic choices");
    app.add_option("--dmax", options.dmax, "default degree cutoff for oracle tables");
    app.add_option("--format", format, "report format: json|table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--suite", suite, "run a verification suite (implies the verify command)");
    CLI11_PARSE(app, argc, argv);
    options.format = format;

    try {
        resint::Json job;
        if (!suite.empty()) {
            job = resint::Json{{"command", "verify"}, {"suite", suite}};
        } else {
            std::string body;
            if (!inputFile.empty()) {
                std::ifstream in(inputFile);
                if (!in) throw resint::ValidationError("cannot open input file " + inputFile);
                std::stringstream ss;
                ss << in.rdbuf();
                body = ss.str();
            } else {
                std::stringstream ss;
                ss << std::cin.rdbuf();
                body = ss.str();
            }
            if (body.empty()) throw resint::ValidationError("empty job body");
            job = resint::Json::parse(body);
        }
        resint::JobResult result = resint::execute(job, options);
        if (format == "table")
            std::cout << resint::render_table(result.report);
        else
            std::cout << result.report.dump(2) << "\n";
        return result.exitCode;
    } catch (const resint::NotStabilizedError& e) {
        std::cerr << "oracle not stabilized: " << e.what() << "\n";
        return 3;
    } catch (const resint::Json::exception& e) {
        std::cerr << "invalid job body: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
