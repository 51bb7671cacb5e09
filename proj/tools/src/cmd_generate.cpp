#include "commands.hpp"

#include "lrmt/bundled.hpp"
#include "lrmt/cnf.hpp"
#include "lrmt/instance_json.hpp"

#include <iostream>
#include <memory>

namespace lrmt::cli {

namespace {

struct GenerateOptions {
    std::string instance;
    std::uint32_t clauses = 100;
    unsigned delta = 3;
    std::uint64_t seed = 0;
    std::string out;
    CLI::Option* o_instance = nullptr;
};

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_generate(const GenerateOptions& o)
{
    // DIMACS output is only possible for CNF sources.
    if (ends_with(o.out, ".cnf")) {
        CnfInstance cnf;
        if (o.o_instance->count() == 0) {
            cnf = random_bounded_overlap_sat(o.clauses, o.delta, o.seed);
        } else if (o.instance == "bundled:disjoint") {
            cnf = disjoint_cnf();
        } else if (o.instance == "bundled:chain") {
            cnf = chain_cnf();
        } else {
            throw ParseError("DIMACS output is only available for random 3-SAT and the bundled CNF instances");
        }
        write_file(o.out, to_dimacs(cnf));
        return exit_ok;
    }
    Instance inst = o.o_instance->count() > 0
                        ? load_instance(InstanceSource{o.instance, false})
                        : from_cnf(random_bounded_overlap_sat(o.clauses, o.delta, o.seed)).instance;
    auto text = dump_instance(inst);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_file(o.out, text);
    }
    return exit_ok;
}

}  // namespace

Action add_generate(CLI::App& app)
{
    auto o = std::make_shared<GenerateOptions>();
    o->o_instance = app.add_option("-i,--instance", o->instance, "any instance source (DIMACS output: bundled:disjoint or bundled:chain)");
    app.add_option("--clauses", o->clauses, "random 3-SAT: number of clauses");
    app.add_option("--delta", o->delta, "random 3-SAT: Rel degree bound (1, 2 or 3)");
    app.add_option("--seed", o->seed, "random 3-SAT: seed");
    app.add_option("-o,--out", o->out, "output file; .cnf writes DIMACS, anything else JSON (default: stdout)");
    return [o] { return run_generate(*o); };
}

}  // namespace lrmt::cli
