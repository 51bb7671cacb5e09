#include "commands.hpp"

#include "lrmt/landscape_count.hpp"
#include "lrmt/tail.hpp"
#include "lrmt/trees.hpp"

#include <iostream>
#include <memory>
#include <sstream>

namespace lrmt::cli {

namespace {

struct CountOptions {
    unsigned delta = 2;
    std::uint64_t min_n = 1;
    std::uint64_t max_n = 10;
    std::uint64_t max_i = 20;
    SmallLandscapeParams land;
    std::string csv;
    CLI::App* trees = nullptr;
    CLI::App* q = nullptr;
    CLI::App* landscapes = nullptr;
};

void emit(const CountOptions& o, const std::string& text)
{
    if (o.csv.empty()) {
        std::cout << text;
    } else {
        write_file(o.csv, text);
    }
}

void require_delta2(unsigned delta)
{
    if (delta < 2) {
        throw PreconditionError("the tree bound (Delta^Delta / (Delta-1)^(Delta-1))^N assumes Delta >= 2; got Delta = " +
                                std::to_string(delta));
    }
}

int count_trees(const CountOptions& o)
{
    require_delta2(o.delta);
    std::ostringstream out;
    out << "delta,N,count,fuss_catalan,bound,pass\n";
    bool ok = true;
    for (auto n = o.min_n; n <= o.max_n; ++n) {
        auto count = count_labelled_trees(o.delta, n);
        auto bound = ghg_bound(o.delta, n);
        bool pass = count == fuss_catalan(o.delta, n) && Rational(count) <= bound;
        ok = ok && pass;
        out << o.delta << ',' << n << ',' << to_string(count) << ',' << to_string(fuss_catalan(o.delta, n)) << ','
            << to_string(bound) << ',' << (pass ? "true" : "false") << '\n';
    }
    emit(o, out.str());
    return ok ? exit_ok : exit_property;
}

int count_q(const CountOptions& o)
{
    require_delta2(o.delta);
    std::ostringstream out;
    out << "delta,i,x,q_upper,limit,pass\n";
    bool ok = true;
    const auto x = critical_point(o.delta);
    const Rational limit(1, o.delta - 1);
    for (std::uint64_t i = 0; i <= o.max_i; ++i) {
        auto q = q_value_upper(o.delta, i, x);
        bool pass = q <= limit;
        ok = ok && pass;
        out << o.delta << ',' << i << ',' << to_string(x) << ',' << format_double(to_double(q)) << ','
            << to_string(limit) << ',' << (pass ? "true" : "false") << '\n';
    }
    emit(o, out.str());
    return ok ? exit_ok : exit_property;
}

int count_landscapes(const CountOptions& o)
{
    const auto& p = o.land;
    require_delta2(p.delta);
    auto result = enumerate_small_landscapes(p);
    auto bound = lfff_bound(p.D, p.delta, p.beta, p.N1, p.N2, p.p, p.b);
    const bool pass = result.complete && Rational(result.classes) <= bound.value;
    std::ostringstream out;
    out << "D,delta,beta,N1,N2,p,b,classes,labelled,complete,c_factor,bound,pass\n";
    out << p.D << ',' << p.delta << ',' << p.beta << ',' << p.N1 << ',' << p.N2 << ',' << p.p << ',' << p.b << ','
        << result.classes << ',' << result.labelled << ',' << (result.complete ? "true" : "false") << ','
        << to_string(bound.c_factor) << ',' << to_string(bound.floor_value) << ',' << (pass ? "true" : "false")
        << '\n';
    emit(o, out.str());
    if (!result.complete) {
        std::cerr << "warning: work budget exhausted; count is partial\n";
    }
    return pass ? exit_ok : exit_property;
}

}  // namespace

Action add_count(CLI::App& app)
{
    auto o = std::make_shared<CountOptions>();
    app.require_subcommand(1);
    app.add_option("--csv", o->csv, "CSV output (default: stdout)");

    o->trees = app.add_subcommand("trees", "Delta-labelled trees against the exponential bound");
    o->trees->add_option("--delta", o->delta, "Delta");
    o->trees->add_option("--min-n", o->min_n, "smallest N");
    o->trees->add_option("--max-n", o->max_n, "largest N");
    o->trees->add_option("--csv", o->csv, "CSV output (default: stdout)");

    o->q = app.add_subcommand("q", "certified upper bounds on Q_i at the critical point");
    o->q->add_option("--delta", o->delta, "Delta");
    o->q->add_option("--max-i", o->max_i, "largest i");
    o->q->add_option("--csv", o->csv, "CSV output (default: stdout)");

    o->landscapes = app.add_subcommand("landscapes", "exhaustive count of small grounded decorated landscapes");
    auto* l = o->landscapes;
    l->add_option("--D", o->land.D, "max out-degree");
    l->add_option("--delta", o->land.delta, "max Rel degree");
    l->add_option("--beta", o->land.beta, "max number of forbidden words");
    l->add_option("--N1", o->land.N1, "max number of base vertices");
    l->add_option("--N2", o->land.N2, "forest size");
    l->add_option("--p", o->land.p, "number of parts");
    l->add_option("--b", o->land.b, "alphabet size");
    l->add_option("--budget", o->land.budget, "max labelled objects to visit");
    l->add_option("--csv", o->csv, "CSV output (default: stdout)");

    return [o] {
        if (o->trees->parsed()) {
            return count_trees(*o);
        }
        if (o->q->parsed()) {
            return count_q(*o);
        }
        return count_landscapes(*o);
    };
}

}  // namespace lrmt::cli
