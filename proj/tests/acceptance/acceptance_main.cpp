// Acceptance suite: one PASS/FAIL line per criterion.

#include "helpers.hpp"
#include "oracles.hpp"

#include "lrmt/bundled.hpp"
#include "lrmt/config.hpp"
#include "lrmt/landscape.hpp"
#include "lrmt/landscape_count.hpp"
#include "lrmt/landscape_ops.hpp"
#include "lrmt/lll.hpp"
#include "lrmt/metric.hpp"
#include "lrmt/padding.hpp"
#include "lrmt/tail.hpp"
#include "lrmt/torus.hpp"
#include "lrmt/trees.hpp"
#include "lrmt/window.hpp"
#include "lrmt/zeta.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace lrmt;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

const Rational half(1, 2);

std::shared_ptr<const Engine> window_engine(std::shared_ptr<const Instance> inst, std::uint32_t& n)
{
    auto metric = symmetrize(inst->graph);
    n = default_window_n(metric, half);
    return std::make_shared<const Engine>(inst, sparse_partition(metric, 3 * n), index_order(inst->vertex_count()));
}

Outcome zeta_injectivity()
{
    const std::size_t tapes = 10000;
    std::size_t total = 0;
    std::size_t nonempty = 0;
    std::mt19937_64 rng(1001);
    for (const char* name : {"disjoint", "chain", "torus5"}) {
        auto inst = std::make_shared<const Instance>(bundled_instance(name));
        std::uint32_t n = 0;
        auto engine = window_engine(inst, n);
        ZetaCodec codec(engine, zero_assignment(*inst), half, n);
        for (std::size_t t = 0; t < tapes; ++t) {
            const std::size_t k = 1 + t % 16;
            auto tape = RandomTape::finite_from_seed(inst->alphabet(), engine->partition().part_count, k, rng());
            auto code = codec.encode(tape);
            nonempty += code.landscape.has_value();
            if (codec.decode(code, k) != tape) {
                return {false, std::string("round trip differs on ") + name + " tape " + std::to_string(t)};
            }
            ++total;
        }
    }
    return {true, std::to_string(total) + " tapes over 3 instances, " + std::to_string(nonempty) +
                      " with non-empty landscape, exact"};
}

Outcome seq_equals_used()
{
    std::mt19937_64 rng(1002);
    const int runs = 2000;
    std::size_t vertices = 0;
    for (int t = 0; t < runs; ++t) {
        const unsigned b = 2 + static_cast<unsigned>(testutil::below(rng, 2));
        auto inst = testutil::random_instance(rng, 2 + testutil::below(rng, 14), 3, b);
        auto pi = sparse_partition(symmetrize(inst.graph), static_cast<std::uint32_t>(testutil::below(rng, 3)));
        auto order = index_order(inst.vertex_count());
        std::shuffle(order.begin(), order.end(), rng);
        Engine engine(std::make_shared<const Instance>(inst), pi, order);
        auto tape = RandomTape::stream(b, pi.part_count, rng());
        const std::size_t k = 1 + testutil::below(rng, 12);
        auto f = zero_assignment(inst);
        auto trace = run_k(engine, f, k, tape);
        auto naive = oracle::naive_run(inst, pi.part_of, order, f, tape, k, false);
        auto seq = asgn_seq(extract_landscape(engine, trace));
        for (Vertex x = 0; x < inst.vertex_count(); ++x) {
            if (seq[x] != naive.consumed[x] || seq[x] != used_unused(engine, trace, tape, x).used) {
                return {false, "run " + std::to_string(t) + " vertex " + std::to_string(x)};
            }
            ++vertices;
        }
    }
    return {true, std::to_string(runs) + " runs, " + std::to_string(vertices) + " vertices, exact"};
}

Outcome grounding()
{
    std::mt19937_64 rng(1003);
    std::size_t landscapes = 0;
    std::size_t ungrounded = 0;
    std::size_t ops = 0;
    while (ungrounded < 5000) {
        auto inst = testutil::random_instance(rng, 2 + testutil::below(rng, 20), 1 + testutil::below(rng, 3), 2,
                                              2 + testutil::below(rng, 6));
        auto engine = testutil::engine_for(
            inst, sparse_partition(symmetrize(inst.graph), static_cast<std::uint32_t>(testutil::below(rng, 3))));
        auto tape = RandomTape::stream(2, engine->partition().part_count, rng());
        auto L = extract_landscape(*engine, run_k(*engine, zero_assignment(inst), 1 + testutil::below(rng, 20), tape));
        if (L.empty()) {
            continue;
        }
        auto h = symmetrize(inst.graph);
        L = restrict_landscape(L, ball(h, static_cast<Vertex>(testutil::below(rng, inst.vertex_count())),
                                       static_cast<std::uint32_t>(testutil::below(rng, 5))));
        ungrounded += !L.grounded();
        auto r = ground(L);
        if (r.log.size() > ground_guard(L) || !r.landscape.grounded() || check_landscape(r.landscape) ||
            asgn_seq(r.landscape) != asgn_seq(L)) {
            return {false, "landscape " + std::to_string(landscapes)};
        }
        ops += r.log.size();
        ++landscapes;
    }
    return {true, std::to_string(landscapes) + " landscapes (" + std::to_string(ungrounded) + " ungrounded), " +
                      std::to_string(ops) + " operations, Seq exact"};
}

Outcome koma_pairing()
{
    std::mt19937_64 rng(1004);
    const int runs = 2000;
    std::size_t padded_runs = 0;
    for (int t = 0; t < runs; ++t) {
        auto inst = testutil::random_instance(rng, 1 + testutil::below(rng, 14), 3, 2);
        auto pi = sparse_partition(symmetrize(inst.graph), static_cast<std::uint32_t>(testutil::below(rng, 3)));
        auto order = index_order(inst.vertex_count());
        std::shuffle(order.begin(), order.end(), rng);
        auto padded = pad_uniform(inst, pi, order, 3);
        padded_runs += padded.instance.vertex_count() > inst.vertex_count();
        Engine a(std::make_shared<const Instance>(inst), pi, order);
        Engine b(std::make_shared<const Instance>(padded.instance), padded.partition, padded.order);
        auto seed = rng();
        const std::size_t k = 1 + testutil::below(rng, 12);
        Assignment pf = zero_assignment(padded.instance);
        auto ta = run_k(a, zero_assignment(inst), k, RandomTape::stream(2, pi.part_count, seed));
        auto tb = run_k(b, pf, k, RandomTape::stream(2, padded.partition.part_count, seed));
        for (Vertex x = 0; x < inst.vertex_count(); ++x) {
            if (ta.final.counters[x] != tb.final.counters[x]) {
                return {false, "run " + std::to_string(t) + " vertex " + std::to_string(x)};
            }
        }
    }
    return {true, std::to_string(runs) + " paired runs (" + std::to_string(padded_runs) + " with dummies), exact"};
}

Integer from_u128(unsigned __int128 v)
{
    Integer r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(v);
    return r;
}

Outcome tree_counts()
{
    std::size_t cases = 0;
    for (unsigned delta = 2; delta <= 4; ++delta) {
        for (unsigned n = 1; n <= 12; ++n) {
            auto c = count_labelled_trees(delta, n);
            if (n <= 7 && c != Integer(oracle::labelled_trees(delta, n).size())) {
                return {false, "brute force differs at delta=" + std::to_string(delta) + " N=" + std::to_string(n)};
            }
            if (c != from_u128(oracle::fuss_catalan(delta, n))) {
                return {false, "Fuss-Catalan differs at delta=" + std::to_string(delta) + " N=" + std::to_string(n)};
            }
            if (Rational(c) > ghg_bound(delta, n)) {
                return {false, "bound exceeded at delta=" + std::to_string(delta) + " N=" + std::to_string(n)};
            }
            ++cases;
        }
    }
    return {true, std::to_string(cases) + " (delta, N) pairs, brute force for N <= 7, exact"};
}

Outcome q_iteration()
{
    std::size_t exact = 0;
    std::size_t certified = 0;
    for (unsigned delta = 2; delta <= 4; ++delta) {
        const auto x = critical_point(delta);
        const Rational limit(1, delta - 1);
        for (unsigned i = 0; i <= 20; ++i) {
            if (i <= 7) {
                if (q_value_exact(delta, i, x) > limit) {
                    return {false, "exact Q_" + std::to_string(i) + " above limit, delta=" + std::to_string(delta)};
                }
                ++exact;
            }
            if (q_value_upper(delta, i, x) > limit) {
                return {false, "upper Q_" + std::to_string(i) + " above limit, delta=" + std::to_string(delta)};
            }
            ++certified;
        }
    }
    return {true, std::to_string(exact) + " exact values (i <= 7), " + std::to_string(certified) +
                      " rational upper bounds (i <= 20)"};
}

Outcome landscape_bound()
{
    std::size_t points = 0;
    std::ostringstream worst;
    double tightest = 0;
    for (unsigned D = 0; D <= 1; ++D) {
        for (unsigned beta = 0; beta <= (D == 0 ? 1U : 2U); ++beta) {
            for (unsigned N1 = 1; N1 <= 2; ++N1) {
                for (unsigned N2 = 0; N2 <= 2; ++N2) {
                    for (unsigned p = 1; p <= 2; ++p) {
                        SmallLandscapeParams q{D, 2, beta, N1, N2, p, 2, 50'000'000};
                        auto r = enumerate_small_landscapes(q);
                        auto bound = lfff_bound(D, 2, beta, N1, N2, p, 2);
                        if (!r.complete || Integer(r.classes) > bound.floor_value) {
                            return {false, "point D=" + std::to_string(D) + " beta=" + std::to_string(beta) +
                                               " N1=" + std::to_string(N1) + " N2=" + std::to_string(N2) +
                                               " p=" + std::to_string(p)};
                        }
                        const double ratio = static_cast<double>(r.classes) / to_double(bound.value);
                        tightest = std::max(tightest, ratio);
                        ++points;
                    }
                }
            }
        }
    }
    worst << points << " points (D <= 1, delta = 2, N1 <= 2, N2 <= 2, p <= 2, b = 2), max count/bound "
          << format_double(tightest);
    return {true, worst.str()};
}

bool multicolored(const TorusSpec& s, const Assignment& f)
{
    for (Vertex v = 0; v < s.point_count(); ++v) {
        auto c = torus_coords(s, v);
        std::vector<bool> seen(s.colors, false);
        for (const auto& t : s.translates) {
            std::vector<std::int64_t> y(c.size());
            for (std::size_t a = 0; a < c.size(); ++a) {
                const auto m = static_cast<std::int64_t>(s.sides[a]);
                y[a] = ((static_cast<std::int64_t>(c[a]) + t[a]) % m + m) % m;
            }
            std::size_t idx = 0;
            for (std::size_t a = 0; a < y.size(); ++a) {
                idx = idx * s.sides[a] + static_cast<std::size_t>(y[a]);
            }
            seen[f[idx]] = true;
        }
        for (bool b : seen) {
            if (!b) {
                return false;
            }
        }
    }
    return true;
}

Outcome solver_success()
{
    std::mt19937_64 rng(1008);
    const int instances = 1000;
    std::uint32_t worst = 0;
    std::size_t worst_steps = 0;
    for (int t = 0; t < instances; ++t) {
        const auto m = static_cast<std::uint32_t>(10 + testutil::below(rng, 291));
        auto inst = from_cnf(random_bounded_overlap_sat(m, 3, rng())).instance;
        auto prepared = prepare(ExperimentConfig{}, inst);
        auto report = check_lll_condition(inst, prepared.engine->rel(), LllVariant::tight);
        if (!report.passed || report.delta > 3) {
            return {false, "instance " + std::to_string(t) + " fails the condition"};
        }
        auto trace = run_until_satisfied(*prepared.engine, prepared.initial,
                                         RandomTape::stream(2, prepared.engine->partition().part_count,
                                                            static_cast<std::uint64_t>(t)),
                                         1000);
        if (trace.status != RunStatus::satisfied || !violating_set(inst, trace.final.assignment).empty()) {
            return {false, "instance " + std::to_string(t) + " not solved within 1000 steps"};
        }
        for (Vertex c = 0; c < inst.vertex_count(); ++c) {
            if (!oracle::satisfied_at(inst, trace.final.assignment, c)) {
                return {false, "instance " + std::to_string(t) + " certificate rejected at " + std::to_string(c)};
            }
        }
        worst = std::max(worst, trace.max_resamples());
        worst_steps = std::max(worst_steps, trace.steps());
    }
    auto spec = solver_torus_spec();
    auto torus = torus_instance(spec);
    ExperimentConfig cfg;
    cfg.radius = 1;
    auto prepared = prepare(cfg, torus);
    auto trace = run_until_satisfied(*prepared.engine, prepared.initial,
                                     RandomTape::stream(2, prepared.engine->partition().part_count, 0), 1000);
    if (trace.status != RunStatus::satisfied || !multicolored(spec, trace.final.assignment)) {
        return {false, "torus d=2 m=32 |T|=10 not multicolored"};
    }
    std::ostringstream o;
    o << instances << " instances solved, max steps " << worst_steps << ", max resamples " << worst
      << "; torus32 multicolored in " << trace.steps() << " steps";
    return {true, o.str()};
}

Outcome tail_decay()
{
    const std::size_t seeds = 10000;
    std::ostringstream o;
    {
        auto inst = std::make_shared<const Instance>(bundled_instance("disjoint"));
        TailConfig cfg;
        cfg.engine = std::make_shared<const Engine>(inst, sparse_partition(symmetrize(inst->graph), 3),
                                                    index_order(inst->vertex_count()));
        cfg.samples = seeds;
        cfg.max_n = 10;
        auto est = tail_estimate(cfg);
        double worst_z = 0;
        for (const auto& row : est.rows) {
            const double p = to_double(analytic_tail_delta1(*cfg.engine, zero_assignment(*inst), row.n));
            const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(row.trials));
            const double dev = std::abs(row.p_hat - p);
            if (dev > 3 * sigma + 1e-12) {
                return {false, "delta=1 row N=" + std::to_string(row.n) + " off by " + format_double(dev / sigma) +
                                   " sigma"};
            }
            if (sigma > 0) {
                worst_z = std::max(worst_z, dev / sigma);
            }
        }
        o << "delta=1: N<=10 within 3 sigma (max " << format_double(std::round(worst_z * 100) / 100) << ")";
    }
    for (const char* source : {"random-sat:clauses=200,delta=3,seed=3", "bundled:chain"}) {
        auto inst = std::make_shared<const Instance>(load_instance({source}));
        std::uint32_t n = 0;
        TailConfig cfg;
        cfg.engine = window_engine(inst, n);
        cfg.samples = seeds;
        cfg.max_n = 10;
        auto est = tail_estimate(cfg);
        for (std::size_t i = 1; i < est.rows.size(); ++i) {
            if (est.rows[i].p_hat > est.rows[i - 1].p_hat) {
                return {false, std::string(source) + ": P-hat increases at N=" + std::to_string(est.rows[i].n)};
            }
        }
        if (!est.slope || est.slope->ci_high >= 0) {
            return {false, std::string(source) + ": slope not negative at 95%"};
        }
        o << "; " << source << ": slope " << format_double(std::round(est.slope->slope * 1000) / 1000) << " CI ["
          << format_double(std::round(est.slope->ci_low * 1000) / 1000) << ", "
          << format_double(std::round(est.slope->ci_high * 1000) / 1000) << "]";
    }
    return {true, o.str()};
}

Outcome partition_sparseness()
{
    std::size_t cases = 0;
    for (const auto& name : bundled_names()) {
        auto inst = bundled_instance(name);
        auto h = symmetrize(inst.graph);
        auto dist = oracle::all_distances(oracle::undirected(inst.graph));
        for (std::uint32_t r = 1; r <= 6; ++r) {
            auto pi = sparse_partition(h, r);
            if (!oracle::sparse(dist, pi.part_of, r) || !is_sparse(h, pi, r)) {
                return {false, name + " r=" + std::to_string(r)};
            }
            ++cases;
        }
    }
    return {true, std::to_string(cases) + " (instance, r) pairs, every ball checked"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"zeta-injectivity", zeta_injectivity},
        {"seq-equals-used", seq_equals_used},
        {"grounding", grounding},
        {"padding-pairing", koma_pairing},
        {"tree-counting", tree_counts},
        {"q-iteration", q_iteration},
        {"landscape-bound", landscape_bound},
        {"solver-success", solver_success},
        {"tail-decay", tail_decay},
        {"partition-sparseness", partition_sparseness},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2zu %-22s %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    out.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !out.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
