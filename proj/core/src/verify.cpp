#include "lrmt/verify.hpp"

#include "lrmt/bundled.hpp"
#include "lrmt/cnf.hpp"
#include "lrmt/engine.hpp"
#include "lrmt/error.hpp"
#include "lrmt/instance_json.hpp"
#include "lrmt/landscape.hpp"
#include "lrmt/landscape_ops.hpp"
#include "lrmt/metric.hpp"
#include "lrmt/padding.hpp"
#include "lrmt/partition.hpp"
#include "lrmt/rng.hpp"
#include "lrmt/trees.hpp"
#include "lrmt/zeta.hpp"

#include <random>
#include <sstream>

namespace lrmt {

namespace {

using json = nlohmann::ordered_json;

void fail(CheckResult& r, std::string detail, json counterexample)
{
    if (r.passed) {
        r.passed = false;
        r.detail = std::move(detail);
        r.counterexample = std::move(counterexample);
    }
}

/// Small random 3-CNF with a random overlap bound.
Instance fuzz_instance(std::mt19937_64& rng)
{
    auto m = static_cast<std::uint32_t>(3 + uniform_below(rng, 8));
    auto delta = static_cast<unsigned>(1 + uniform_below(rng, 3));
    return from_cnf(random_bounded_overlap_sat(m, delta, rng())).instance;
}

/// Like fuzz_instance but clauses are cut to 1..3 literals.
Instance fuzz_ragged_instance(std::mt19937_64& rng)
{
    auto m = static_cast<std::uint32_t>(3 + uniform_below(rng, 8));
    auto delta = static_cast<unsigned>(1 + uniform_below(rng, 3));
    auto cnf = random_bounded_overlap_sat(m, delta, rng());
    CnfInstance cut;
    cut.variable_count = cnf.variable_count;
    for (auto c : cnf.clauses) {
        c.resize(1 + uniform_below(rng, c.size()));
        bool duplicate = false;
        for (const auto& d : cut.clauses) {
            duplicate = duplicate || d == c;
        }
        if (!duplicate) {
            cut.clauses.push_back(c);
        }
    }
    return from_cnf(cut).instance;
}

Assignment random_assignment(const Instance& inst, std::mt19937_64& rng)
{
    Assignment f(inst.vertex_count());
    for (auto& d : f) {
        d = static_cast<Digit>(uniform_below(rng, inst.alphabet()));
    }
    return f;
}

std::shared_ptr<const Engine> fuzz_engine(Instance inst, std::mt19937_64& rng)
{
    auto ptr = std::make_shared<const Instance>(std::move(inst));
    auto r = static_cast<std::uint32_t>(uniform_below(rng, 4));
    auto order = index_order(ptr->vertex_count());
    if (uniform_below(rng, 2) == 1) {
        shuffle_portable(order, rng);
    }
    return std::make_shared<const Engine>(ptr, sparse_partition(symmetrize(ptr->graph), r), order);
}

json run_json(const Engine& e, const Assignment& f, std::size_t k, std::uint64_t tape_seed)
{
    json j;
    j["instance"] = instance_to_json(e.instance());
    j["part_of"] = e.partition().part_of;
    j["order"] = e.order();
    j["initial"] = word_to_string(f);
    j["k"] = k;
    j["tape_seed"] = tape_seed;
    return j;
}

CheckResult check_zeta(const VerifyOptions& opt)
{
    CheckResult r;
    r.name = "zeta_roundtrip";
    std::mt19937_64 rng(mix64(opt.seed ^ 0x7a657461));
    for (const char* name : {"disjoint", "chain", "torus5"}) {
        auto inst = std::make_shared<const Instance>(bundled_instance(name));
        const Rational eps(1, 2);
        auto metric = symmetrize(inst->graph);
        auto n = default_window_n(metric, eps);
        auto engine = std::make_shared<const Engine>(inst, sparse_partition(metric, 3 * n),
                                                     index_order(inst->vertex_count()));
        ZetaCodec codec(engine, zero_assignment(*inst), eps, n);
        for (std::size_t t = 0; t < opt.tapes && r.passed; ++t) {
            const auto tape_seed = rng();
            auto tape = RandomTape::finite_from_seed(inst->alphabet(), engine->partition().part_count, opt.k, tape_seed);
            auto code = codec.encode(tape);
            if (opt.fault == InjectedFault::corrupt_zeta && !code.payload.empty()) {
                code.payload[code.payload.size() / 2] =
                    static_cast<Digit>((code.payload[code.payload.size() / 2] + 1) % inst->alphabet());
            }
            ++r.cases;
            json cx{{"instance", name}, {"k", opt.k}, {"tape_seed", tape_seed}, {"tape", word_to_string(tape.digits())}};
            try {
                auto back = codec.decode(code, opt.k);
                if (!(back == tape)) {
                    cx["decoded"] = word_to_string(back.digits());
                    fail(r, std::string("decode(encode(t)) != t on ") + name, cx);
                }
            } catch (const ParseError& e) {
                fail(r, std::string("decode rejected its own code on ") + name + ": " + e.what(), cx);
            }
        }
    }
    return r;
}

CheckResult check_seq_used(const VerifyOptions& opt)
{
    CheckResult r;
    r.name = "seq_equals_used";
    std::mt19937_64 rng(mix64(opt.seed ^ 0x736571));
    for (std::size_t i = 0; i < opt.runs && r.passed; ++i) {
        auto engine = fuzz_engine(fuzz_instance(rng), rng);
        const auto& inst = engine->instance();
        auto f = random_assignment(inst, rng);
        auto k = static_cast<std::size_t>(1 + uniform_below(rng, 12));
        auto tape_seed = rng();
        auto tape = RandomTape::finite_from_seed(2, engine->partition().part_count, k, tape_seed);
        auto trace = run_k(*engine, f, k, tape);
        auto L = extract_landscape(*engine, trace);
        auto seq = asgn_seq(L);
        ++r.cases;
        for (Vertex x = 0; x < inst.vertex_count(); ++x) {
            auto used = used_unused(*engine, trace, tape, x).used;
            if (seq[x] != used) {
                auto cx = run_json(*engine, f, k, tape_seed);
                cx["vertex"] = x;
                cx["seq"] = word_to_string(seq[x]);
                cx["used"] = word_to_string(used);
                fail(r, "Seq(x) != Used(x) at vertex " + std::to_string(x), cx);
                break;
            }
        }
    }
    return r;
}

CheckResult check_grounding(const VerifyOptions& opt)
{
    CheckResult r;
    r.name = "grounding";
    std::mt19937_64 rng(mix64(opt.seed ^ 0x67726f756e64));
    for (std::size_t i = 0; i < opt.runs && r.passed; ++i) {
        auto engine = fuzz_engine(fuzz_instance(rng), rng);
        const auto& inst = engine->instance();
        auto f = random_assignment(inst, rng);
        auto k = static_cast<std::size_t>(1 + uniform_below(rng, 12));
        auto tape_seed = rng();
        auto tape = RandomTape::finite_from_seed(2, engine->partition().part_count, k, tape_seed);
        auto L = extract_landscape(*engine, run_k(*engine, f, k, tape));
        if (uniform_below(rng, 2) == 1) {
            auto metric = symmetrize(inst.graph);
            auto centre = static_cast<Vertex>(uniform_below(rng, inst.vertex_count()));
            L = restrict_landscape(L, ball(metric, centre, static_cast<std::uint32_t>(1 + uniform_below(rng, 5))));
        }
        ++r.cases;
        auto cx = run_json(*engine, f, k, tape_seed);
        cx["landscape"] = landscape_to_json(L);
        try {
            auto before = asgn_seq(L);
            auto result = ground(L);
            if (!result.landscape.grounded()) {
                fail(r, "ground returned a landscape with a root above level 0", cx);
            } else if (auto problem = check_landscape(result.landscape)) {
                fail(r, "ground produced an invalid landscape: " + *problem, cx);
            } else if (asgn_seq(result.landscape) != before) {
                fail(r, "ground changed Seq", cx);
            } else if (result.log.size() > ground_guard(L)) {
                fail(r, "ground exceeded its guard", cx);
            }
        } catch (const Error& e) {
            fail(r, std::string("ground failed: ") + e.what(), cx);
        }
    }
    return r;
}

CheckResult check_padding(const VerifyOptions& opt)
{
    CheckResult r;
    r.name = "padding_pairing";
    std::mt19937_64 rng(mix64(opt.seed ^ 0x6b6f6d61));
    for (std::size_t i = 0; i < opt.runs && r.passed; ++i) {
        auto engine = fuzz_engine(fuzz_ragged_instance(rng), rng);
        const auto& inst = engine->instance();
        auto padded = pad_uniform(inst, engine->partition(), engine->order());
        Engine padded_engine(std::make_shared<const Instance>(padded.instance), padded.partition, padded.order);
        auto f = random_assignment(inst, rng);
        Assignment pf = f;
        pf.resize(padded.instance.vertex_count(), 0);
        auto k = static_cast<std::size_t>(1 + uniform_below(rng, 16));
        auto tape_seed = rng();
        auto a = run_k(*engine, f, k, RandomTape::stream(2, engine->partition().part_count, tape_seed));
        auto b = run_k(padded_engine, pf, k, RandomTape::stream(2, padded.partition.part_count, tape_seed));
        ++r.cases;
        bool same = a.resample_sets == b.resample_sets;
        for (Vertex x = 0; x < inst.vertex_count() && same; ++x) {
            same = a.final.counters[x] == b.final.counters[x];
        }
        if (!same) {
            fail(r, "padded and original runs resample differently", run_json(*engine, f, k, tape_seed));
        }
    }
    return r;
}

CheckResult check_independence(const VerifyOptions& opt)
{
    CheckResult r;
    r.name = "greedy_independence";
    std::mt19937_64 rng(mix64(opt.seed ^ 0x6d6973));
    for (std::size_t i = 0; i < opt.runs && r.passed; ++i) {
        auto engine = fuzz_engine(fuzz_instance(rng), rng);
        const auto& inst = engine->instance();
        auto f = random_assignment(inst, rng);
        auto k = static_cast<std::size_t>(1 + uniform_below(rng, 12));
        auto tape_seed = rng();
        auto trace = run_k(*engine, f, k, RandomTape::stream(2, engine->partition().part_count, tape_seed));
        ++r.cases;
        RunState s = engine->initial_state(f);
        for (std::size_t j = 0; j < trace.steps(); ++j) {
            auto B = violating_set(inst, s.assignment);
            const auto& S = trace.resample_sets[j];
            if (!is_maximal_independent(engine->rel().graph(), B, S)) {
                auto cx = run_json(*engine, f, k, tape_seed);
                cx["step"] = j;
                fail(r, "resample set is not a maximal independent subset of B", cx);
                break;
            }
            bool exhausted = false;
            engine->step(s, RandomTape::stream(2, engine->partition().part_count, tape_seed), exhausted);
        }
    }
    return r;
}

CheckResult check_sparseness(const VerifyOptions&)
{
    CheckResult r;
    r.name = "partition_sparseness";
    for (const auto& b : bundled_instances()) {
        auto metric = symmetrize(b.instance.graph);
        for (std::uint32_t rad = 1; rad <= 6; ++rad) {
            ++r.cases;
            if (!is_sparse(metric, sparse_partition(metric, rad), rad)) {
                fail(r, "partition of " + b.name + " is not " + std::to_string(rad) + "-sparse",
                     json{{"instance", b.name}, {"r", rad}});
            }
        }
    }
    return r;
}

CheckResult check_trees(const VerifyOptions&)
{
    CheckResult r;
    r.name = "tree_counts";
    for (unsigned delta = 2; delta <= 4; ++delta) {
        for (std::uint64_t n = 1; n <= 12; ++n) {
            ++r.cases;
            auto count = count_labelled_trees(delta, n);
            if (count != fuss_catalan(delta, n) || Rational(count) > ghg_bound(delta, n)) {
                fail(r, "tree count mismatch at Delta=" + std::to_string(delta) + ", N=" + std::to_string(n),
                     json{{"delta", delta}, {"N", n}, {"count", to_string(count)}});
            }
        }
    }
    return r;
}

CheckResult check_q_iteration(const VerifyOptions&)
{
    CheckResult r;
    r.name = "q_iteration";
    for (unsigned delta = 2; delta <= 4; ++delta) {
        const Rational limit(1, delta - 1);
        for (std::uint64_t i = 0; i <= 20; ++i) {
            ++r.cases;
            if (q_value_upper(delta, i, critical_point(delta)) > limit) {
                fail(r, "Q_i exceeds 1/(Delta-1) at Delta=" + std::to_string(delta) + ", i=" + std::to_string(i),
                     json{{"delta", delta}, {"i", i}});
            }
        }
    }
    return r;
}

}  // namespace

bool VerifyReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::summary() const
{
    std::ostringstream o;
    for (const auto& c : checks) {
        o << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " (" << c.cases << " cases)";
        if (!c.passed) {
            o << " - " << c.detail;
        }
        o << '\n';
    }
    o << (passed() ? "all checks passed" : "verification FAILED") << '\n';
    return o.str();
}

VerifyReport run_verify_suite(const VerifyOptions& options)
{
    VerifyReport report;
    report.checks.push_back(check_zeta(options));
    report.checks.push_back(check_seq_used(options));
    report.checks.push_back(check_grounding(options));
    report.checks.push_back(check_padding(options));
    report.checks.push_back(check_independence(options));
    report.checks.push_back(check_sparseness(options));
    report.checks.push_back(check_trees(options));
    report.checks.push_back(check_q_iteration(options));
    return report;
}

}  // namespace lrmt
