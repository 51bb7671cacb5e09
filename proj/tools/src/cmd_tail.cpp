#include "commands.hpp"

#include "lrmt/svg.hpp"
#include "lrmt/tail.hpp"

#include <iostream>
#include <memory>

namespace lrmt::cli {

namespace {

struct TailOptions {
    ExperimentOptions exp;
    std::size_t samples = 0;
    std::uint32_t max_n = 0;
    std::string csv;
    std::string svg;
    std::string n2_csv;
    bool landscapes = false;
    bool classic = false;
    bool analytic = false;
    CLI::Option* o_samples = nullptr;
    CLI::Option* o_max_n = nullptr;
};

int run_tail(const TailOptions& o)
{
    auto cfg = o.exp.resolve();
    if (o.o_samples->count() > 0) {
        cfg.seed_count = o.samples;
    }
    if (o.o_max_n->count() > 0) {
        cfg.max_n = o.max_n;
    }
    cfg.landscapes = cfg.landscapes || o.landscapes || !o.n2_csv.empty();
    cfg.classic = cfg.classic || o.classic;
    if (!o.csv.empty()) {
        cfg.outputs.csv = o.csv;
    }
    if (!o.svg.empty()) {
        cfg.outputs.svg = o.svg;
    }
    if (!o.n2_csv.empty()) {
        cfg.outputs.n2_csv = o.n2_csv;
    }
    if (cfg.seed_count == 0) {
        std::cerr << "error: at least one seed is required\n";
        return exit_input;
    }

    auto prep = prepare(cfg);
    TailConfig tc;
    tc.engine = prep.engine;
    tc.initial = prep.initial;
    tc.first_seed = cfg.first_seed;
    tc.samples = cfg.seed_count;
    tc.max_n = cfg.max_n;
    tc.step_cap = cfg.step_cap;
    tc.threads = cfg.threads;
    tc.classic = cfg.classic;
    tc.landscapes = cfg.landscapes;
    tc.eps = cfg.eps;
    tc.window_n = prep.window_n;
    auto est = tail_estimate(tc);

    std::vector<Rational> analytic;
    if (o.analytic) {
        for (std::uint32_t n = 0; n <= cfg.max_n; ++n) {
            analytic.push_back(analytic_tail_delta1(*prep.engine, prep.initial, n));
        }
    }
    const auto* an = o.analytic ? &analytic : nullptr;
    auto csv = tail_csv(est, an);
    if (cfg.outputs.csv.empty()) {
        std::cout << csv;
    } else {
        write_file(cfg.outputs.csv, csv);
    }
    if (!cfg.outputs.svg.empty()) {
        write_file(cfg.outputs.svg, tail_chart_svg(est, an));
    }
    if (!cfg.outputs.n2_csv.empty()) {
        write_file(cfg.outputs.n2_csv, n2_csv(est));
    }
    std::cerr << "samples " << est.samples << ", cap exceeded " << est.cap_exceeded;
    if (est.slope) {
        std::cerr << ", slope " << format_double(est.slope->slope) << " [" << format_double(est.slope->ci_low) << ", "
                  << format_double(est.slope->ci_high) << "] over " << est.slope->points << " points";
    }
    std::cerr << '\n';
    return exit_ok;
}

}  // namespace

Action add_tail(CLI::App& app)
{
    auto o = std::make_shared<TailOptions>();
    o->exp.add_to(app);
    o->o_samples = app.add_option("-n,--samples", o->samples, "number of seeds");
    o->o_max_n = app.add_option("--max-n", o->max_n, "largest N in the table");
    app.add_option("--csv", o->csv, "CSV output (default: stdout)");
    app.add_option("--svg", o->svg, "log-scale chart output");
    app.add_option("--n2-csv", o->n2_csv, "distribution of the window landscape size N2");
    app.add_flag("--landscapes", o->landscapes, "extract landscapes and record N2");
    app.add_flag("--classic", o->classic, "fresh independent digits instead of shared streams");
    app.add_flag("--analytic", o->analytic, "add the exact tail (Rel degree at most 1 only)");
    return [o] { return run_tail(*o); };
}

}  // namespace lrmt::cli
