#include "commands.hpp"

#include "lrmt/error.hpp"

#include <fstream>
#include <iostream>

namespace lrmt::cli {

void ExperimentOptions::add_to(CLI::App& app)
{
    app.add_option("-c,--config", config_path, "experiment config (JSON)")->check(CLI::ExistingFile);
    o_instance = app.add_option("-i,--instance", instance,
                                "instance: FILE.cnf, FILE.json, bundled:NAME, random-sat:clauses=M,delta=D,seed=S "
                                "or torus:d=D,m=M,t=T,b=B");
    o_three_sat = app.add_flag("--three-sat", three_sat, "reject DIMACS clauses that do not have 3 literals");
    o_eps = app.add_option("--eps", eps, "window growth epsilon, a rational in (0,1)");
    o_radius = app.add_option("--radius", radius, "sparsity radius of the partition (default 3n)");
    o_cap = app.add_option("--cap", step_cap, "step cap");
    o_seed = app.add_option("--seed", seed, "tape seed (first seed for tail)");
    o_order = app.add_option("--order", order, "vertex order: index, reverse or random:SEED");
    o_initial = app.add_option("--initial", initial, "initial assignment: zero or random:SEED");
    o_condition = app.add_option("--condition", condition, "LLL condition: tight or symmetric-e");
    o_force = app.add_flag("--force", force, "run even if the LLL condition fails");
    o_threads = app.add_option("--threads", threads, "worker threads (0 = all cores)");
}

ExperimentConfig ExperimentOptions::resolve() const
{
    ExperimentConfig c;
    if (!config_path.empty()) {
        c = load_config(config_path);
    } else if (o_instance->count() == 0) {
        throw ParseError("either --config or --instance is required");
    }
    if (o_instance->count() > 0) {
        c.instance.text = instance;
    }
    if (o_three_sat->count() > 0) {
        c.instance.three_sat = three_sat;
    }
    if (o_eps->count() > 0) {
        c.eps = parse_rational(eps);
        if (c.eps <= 0 || c.eps >= 1) {
            throw ParseError("eps must lie strictly between 0 and 1");
        }
    }
    if (o_radius->count() > 0) {
        c.radius = radius;
    }
    if (o_cap->count() > 0) {
        c.step_cap = step_cap;
    }
    if (o_seed->count() > 0) {
        c.first_seed = seed;
    }
    if (o_order->count() > 0) {
        make_order(order, 0);
        c.order = order;
    }
    if (o_initial->count() > 0) {
        c.initial = initial;
    }
    if (o_condition->count() > 0) {
        try {
            c.condition = parse_lll_variant(condition);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
    if (o_force->count() > 0) {
        c.force = force;
    }
    if (o_threads->count() > 0) {
        c.threads = threads;
    }
    return c;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write '" + path + "'");
    }
    out << content;
}

}  // namespace lrmt::cli

int main(int argc, char** argv)
{
    using namespace lrmt::cli;
    CLI::App app{"Moser-Tardos resampling with limited randomness"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "lrmt 0.1.0");

    std::vector<std::pair<CLI::App*, Action>> commands;
    auto reg = [&](const char* name, const char* help, Action (*add)(CLI::App&)) {
        auto* sub = app.add_subcommand(name, help);
        commands.emplace_back(sub, add(*sub));
    };
    reg("solve", "run the resampling algorithm until every rule is satisfied", add_solve);
    reg("tail", "estimate P(max resamples > N) over many seeds", add_tail);
    reg("verify", "run the property suite", add_verify);
    reg("count", "tabulate exact counts against their bounds", add_count);
    reg("generate", "write an instance as JSON or DIMACS", add_generate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        for (auto& [sub, action] : commands) {
            if (sub->parsed()) {
                return action();
            }
        }
    } catch (const lrmt::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const lrmt::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_internal;
}
