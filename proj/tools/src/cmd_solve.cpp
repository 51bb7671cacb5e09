#include "commands.hpp"

#include "lrmt/instance_json.hpp"
#include "lrmt/lll.hpp"
#include "lrmt/tail.hpp"
#include "lrmt/trace_io.hpp"

#include <fstream>
#include <iostream>
#include <memory>

namespace lrmt::cli {

namespace {

struct SolveOptions {
    ExperimentOptions exp;
    std::string out;
    std::string trace;
};

int run_solve(const SolveOptions& o)
{
    auto cfg = o.exp.resolve();
    if (!o.out.empty()) {
        cfg.outputs.assignment = o.out;
    }
    if (!o.trace.empty()) {
        cfg.outputs.trace = o.trace;
    }
    auto inst = load_instance(cfg.instance);
    if (auto bad = unsatisfiable_vertices(inst); !bad.empty()) {
        std::cerr << "error: vertex " << bad.front() << " allows no assignment at all; the instance is unsatisfiable ("
                  << bad.size() << " such vertices)\n";
        return exit_input;
    }

    auto rel = build_rel(inst.graph);
    auto lll = check_lll_condition(inst, rel, cfg.condition);
    std::cout << "condition " << to_string(lll.variant) << ": Delta=" << lll.delta
              << " max p=" << to_string(lll.max_prob) << " threshold~" << format_double(to_double(lll.threshold))
              << " -> "
              << (lll.passed ? "holds" : "FAILS") << '\n';
    if (!lll.passed) {
        std::cerr << "warning: the local lemma condition fails at " << lll.failing.size() << " vertices\n";
        if (!cfg.force) {
            std::cerr << "refusing to run without --force\n";
            return exit_input;
        }
    }

    auto prep = prepare(cfg, std::move(inst));
    const auto& engine = *prep.engine;
    auto tape = RandomTape::stream(engine.instance().alphabet(), engine.partition().part_count, cfg.first_seed);
    auto trace = run_until_satisfied(engine, prep.initial, tape, cfg.step_cap);
    const auto violating = violating_set(engine.instance(), trace.final.assignment);
    const bool certified = trace.status == RunStatus::satisfied && violating.empty();

    std::cout << "status " << to_string(trace.status) << ", steps " << trace.steps() << ", max resamples "
              << trace.max_resamples() << ", parts " << engine.partition().part_count << " (radius " << prep.radius
              << ")\n";
    if (trace.status == RunStatus::satisfied && !certified) {
        std::cerr << "internal error: final assignment violates " << violating.size() << " rules\n";
        return exit_internal;
    }

    if (!cfg.outputs.assignment.empty()) {
        nlohmann::ordered_json j;
        j["format"] = "lrmt-assignment/1";
        j["status"] = to_string(trace.status);
        j["steps"] = trace.steps();
        j["max_resamples"] = trace.max_resamples();
        j["assignment"] = word_to_string(trace.final.assignment);
        j["certificate"] = {{"checked_vertices", engine.instance().vertex_count()},
                            {"violated", violating.size()},
                            {"satisfied", certified}};
        j["condition"] = {{"variant", to_string(lll.variant)},
                          {"delta", lll.delta},
                          {"max_prob", to_string(lll.max_prob)},
                          {"threshold", to_string(lll.threshold)},
                          {"holds", lll.passed}};
        write_file(cfg.outputs.assignment, j.dump(2) + "\n");
    }
    if (!cfg.outputs.trace.empty()) {
        std::ofstream out(cfg.outputs.trace, std::ios::binary);
        if (!out) {
            throw ParseError("cannot write '" + cfg.outputs.trace + "'");
        }
        write_trace_jsonl(out, trace, engine.instance().graph);
    }
    return certified ? exit_ok : exit_cap;
}

}  // namespace

Action add_solve(CLI::App& app)
{
    auto o = std::make_shared<SolveOptions>();
    o->exp.add_to(app);
    app.add_option("-o,--out", o->out, "write the assignment and its certificate (JSON)");
    app.add_option("--trace", o->trace, "write the run trace (JSON lines)");
    return [o] { return run_solve(*o); };
}

}  // namespace lrmt::cli
