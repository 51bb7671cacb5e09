#include "commands.hpp"

#include "lrmt/verify.hpp"

#include <iostream>
#include <memory>

namespace lrmt::cli {

namespace {

struct VerifyCliOptions {
    VerifyOptions suite;
    std::string fault = "none";
    std::string report;
    std::string counterexample;
};

int run_verify(VerifyCliOptions o)
{
    if (o.fault == "corrupt-zeta") {
        o.suite.fault = InjectedFault::corrupt_zeta;
    } else if (o.fault != "none") {
        throw ParseError("unknown fault '" + o.fault + "'");
    }
    auto report = run_verify_suite(o.suite);
    auto text = report.summary();
    std::cout << text;
    if (!o.report.empty()) {
        write_file(o.report, text);
    }
    if (!report.passed()) {
        for (const auto& c : report.checks) {
            if (!c.passed) {
                nlohmann::ordered_json j{{"check", c.name}, {"detail", c.detail}, {"counterexample", c.counterexample}};
                if (o.counterexample.empty()) {
                    std::cerr << j.dump(2) << '\n';
                } else {
                    write_file(o.counterexample, j.dump(2) + "\n");
                }
                break;
            }
        }
        return exit_property;
    }
    return exit_ok;
}

}  // namespace

Action add_verify(CLI::App& app)
{
    auto o = std::make_shared<VerifyCliOptions>();
    app.add_option("--seed", o->suite.seed, "fuzzing seed");
    app.add_option("--runs", o->suite.runs, "fuzzed runs per check");
    app.add_option("--tapes", o->suite.tapes, "tapes per instance for zeta round-trips");
    app.add_option("--k", o->suite.k, "tape width for zeta round-trips")->check(CLI::Range(1, 64));
    app.add_option("--inject-fault", o->fault, "none or corrupt-zeta");
    app.add_option("--report", o->report, "also write the summary here");
    app.add_option("--counterexample", o->counterexample, "write the first counterexample here (JSON)");
    return [o] { return run_verify(*o); };
}

}  // namespace lrmt::cli
