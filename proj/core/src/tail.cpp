#include "lrmt/tail.hpp"

#include "lrmt/error.hpp"
#include "lrmt/instance.hpp"
#include "lrmt/landscape.hpp"
#include "lrmt/window.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace lrmt {

namespace {

struct Sample {
    std::uint32_t max_resamples = 0;
    bool cap_exceeded = false;
    std::optional<std::uint64_t> n2;
};

Sample run_one(const TailConfig& cfg, const Assignment& f, std::uint64_t seed, const SymGraph* metric,
               std::uint32_t window_n)
{
    const Engine& engine = *cfg.engine;
    RunTrace trace;
    if (cfg.classic) {
        trace = classic_parallel_mta(engine, f, seed, cfg.step_cap);
    } else {
        auto tape = RandomTape::stream(engine.instance().alphabet(), engine.partition().part_count, seed);
        trace = run_until_satisfied(engine, f, tape, cfg.step_cap);
    }
    Sample s;
    s.max_resamples = trace.max_resamples();
    s.cap_exceeded = trace.status == RunStatus::cap_exceeded;
    if (metric != nullptr) {
        auto L = extract_landscape(engine, trace);
        std::vector<std::uint64_t> g(engine.instance().vertex_count(), 0);
        for (const auto& node : L.nodes) {
            ++g[node.base];
        }
        if (L.nodes.empty()) {
            s.n2 = 0;
        } else if (auto w = scan_window(*metric, g, cfg.eps, window_n)) {
            std::uint64_t total = 0;
            for (Vertex x : w->vertices) {
                total += g[x];
            }
            s.n2 = total;
        }
    }
    return s;
}

}  // namespace

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

TailEstimate tail_estimate(const TailConfig& cfg)
{
    if (!cfg.engine) {
        throw PreconditionError("tail estimate needs an engine");
    }
    if (cfg.samples == 0) {
        throw PreconditionError("tail estimate needs at least one sample");
    }
    const auto& inst = cfg.engine->instance();
    Assignment f = cfg.initial.empty() ? zero_assignment(inst) : cfg.initial;
    if (f.size() != inst.vertex_count()) {
        throw PreconditionError("initial assignment has the wrong length");
    }

    std::optional<SymGraph> metric;
    std::uint32_t window_n = cfg.window_n;
    if (cfg.landscapes) {
        metric = symmetrize(inst.graph);
        if (window_n == 0) {
            window_n = default_window_n(*metric, cfg.eps);
        }
    }

    std::vector<Sample> samples(cfg.samples);
    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.samples));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < cfg.samples; i += threads) {
                    samples[i] = run_one(cfg, f, cfg.first_seed + i, metric ? &*metric : nullptr, window_n);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    TailEstimate est;
    est.samples = cfg.samples;
    for (const auto& s : samples) {
        est.max_resamples.push_back(s.max_resamples);
        est.cap_exceeded += s.cap_exceeded ? 1 : 0;
    }
    for (std::uint32_t n = 0; n <= cfg.max_n; ++n) {
        TailRow row;
        row.n = n;
        row.trials = cfg.samples;
        row.exceedances = static_cast<std::size_t>(
            std::count_if(est.max_resamples.begin(), est.max_resamples.end(), [n](std::uint32_t m) { return m > n; }));
        row.p_hat = static_cast<double>(row.exceedances) / static_cast<double>(row.trials);
        row.ci_half = 1.96 * std::sqrt(row.p_hat * (1 - row.p_hat) / static_cast<double>(row.trials));
        est.rows.push_back(row);
    }
    est.slope = fit_slope(est.rows, inst.alphabet());

    if (cfg.landscapes) {
        std::map<std::uint64_t, std::size_t> hist;
        for (const auto& s : samples) {
            if (s.n2) {
                ++hist[*s.n2];
                ++est.n2_samples;
            }
        }
        std::size_t above = est.n2_samples;
        for (const auto& [n2, count] : hist) {
            above -= count;
            N2Row row;
            row.n2 = n2;
            row.count = count;
            row.p = static_cast<double>(count) / static_cast<double>(est.n2_samples);
            row.q = static_cast<double>(above) / static_cast<double>(est.n2_samples);
            est.n2_rows.push_back(row);
        }
    }
    return est;
}

std::optional<SlopeFit> fit_slope(const std::vector<TailRow>& rows, unsigned b, std::size_t min_exceedances)
{
    if (b < 2) {
        return std::nullopt;
    }
    const double lnb = std::log(static_cast<double>(b));
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> ws;
    for (const auto& r : rows) {
        if (r.exceedances < min_exceedances || r.exceedances == r.trials) {
            continue;
        }
        const double p = r.p_hat;
        // Delta method: Var(log_b p-hat) ~ (1 - p) / (n p ln(b)^2).
        const double var = (1 - p) / (static_cast<double>(r.trials) * p * lnb * lnb);
        xs.push_back(r.n);
        ys.push_back(std::log(p) / lnb);
        ws.push_back(1 / var);
    }
    if (xs.size() < 2) {
        return std::nullopt;
    }
    double sw = 0;
    double sx = 0;
    double sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sw += ws[i];
        sx += ws[i] * xs[i];
        sy += ws[i] * ys[i];
    }
    const double mx = sx / sw;
    const double my = sy / sw;
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += ws[i] * (xs[i] - mx) * (xs[i] - mx);
        sxy += ws[i] * (xs[i] - mx) * (ys[i] - my);
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.se = std::sqrt(1 / sxx);
    fit.ci_low = fit.slope - 1.96 * fit.se;
    fit.ci_high = fit.slope + 1.96 * fit.se;
    fit.points = xs.size();
    return fit;
}

Rational analytic_tail_delta1(const Engine& engine, const Assignment& f, std::uint32_t n)
{
    const auto& inst = engine.instance();
    const auto& g = inst.graph;
    if (engine.rel().max_degree() > 1) {
        throw PreconditionError("analytic tail needs Rel(G) of maximum degree at most 1");
    }
    const auto& pi = engine.partition();

    // Violated clauses grouped by the ordered tuple of parts they read.
    std::map<std::vector<std::uint32_t>, std::vector<Vertex>> groups;
    for (Vertex x : violating_set(inst, f)) {
        if (g.var(x).empty()) {
            throw PreconditionError("a clause without variables is violated forever");
        }
        std::vector<std::uint32_t> key;
        for (Vertex v : g.var(x)) {
            key.push_back(pi.part_of[v]);
        }
        if (std::set<std::uint32_t>(key.begin(), key.end()).size() != key.size()) {
            throw PreconditionError("a clause reads one part twice");
        }
        groups[key].push_back(x);
    }
    std::set<std::uint32_t> seen;
    for (const auto& [key, members] : groups) {
        for (auto part : key) {
            if (!seen.insert(part).second) {
                throw PreconditionError("clause groups share parts; the analytic tail needs disjoint groups");
            }
        }
    }
    if (n == 0) {
        return groups.empty() ? Rational(0) : Rational(1);
    }

    // P(max h > n) = 1 - prod over groups of (1 - P(some member stays violated for n words)).
    Rational survive = 1;
    for (const auto& [key, members] : groups) {
        if (members.size() > 20) {
            throw PreconditionError("clause group too large for inclusion-exclusion");
        }
        const auto words = static_cast<std::uint64_t>(inst.rule.word_count(members.front()));
        Rational group_p = 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << members.size()); ++mask) {
            std::uint64_t common = 0;
            for (std::uint64_t code = 0; code < words; ++code) {
                bool all = true;
                for (std::size_t i = 0; i < members.size() && all; ++i) {
                    if ((mask >> i & 1U) != 0U && inst.rule.allows_code(members[i], code)) {
                        all = false;
                    }
                }
                common += all ? 1 : 0;
            }
            Rational term = rpow(Rational(Integer(common), Integer(words)), n);
            if (__builtin_popcountll(mask) % 2 == 1) {
                group_p += term;
            } else {
                group_p -= term;
            }
        }
        survive *= 1 - group_p;
    }
    return 1 - survive;
}

std::string tail_csv(const TailEstimate& est, const std::vector<Rational>* analytic)
{
    std::ostringstream out;
    out << "N,trials,exceedances,p_hat,ci95_half";
    if (analytic != nullptr) {
        out << ",analytic";
    }
    out << '\n';
    for (std::size_t i = 0; i < est.rows.size(); ++i) {
        const auto& r = est.rows[i];
        out << r.n << ',' << r.trials << ',' << r.exceedances << ',' << format_double(r.p_hat) << ','
            << format_double(r.ci_half);
        if (analytic != nullptr) {
            out << ',' << (i < analytic->size() ? format_double(to_double((*analytic)[i])) : "");
        }
        out << '\n';
    }
    return out.str();
}

std::string n2_csv(const TailEstimate& est)
{
    std::ostringstream out;
    out << "N2,count,P,Q\n";
    for (const auto& r : est.n2_rows) {
        out << r.n2 << ',' << r.count << ',' << format_double(r.p) << ',' << format_double(r.q) << '\n';
    }
    return out.str();
}

}  // namespace lrmt
