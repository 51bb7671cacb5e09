#include "lrmt/lll.hpp"

#include "lrmt/error.hpp"

namespace lrmt {

std::string to_string(LllVariant v)
{
    return v == LllVariant::symmetric_e ? "symmetric-e" : "tight";
}

LllVariant parse_lll_variant(const std::string& text)
{
    if (text == "symmetric-e" || text == "e") {
        return LllVariant::symmetric_e;
    }
    if (text == "tight") {
        return LllVariant::tight;
    }
    throw ParseError("unknown condition variant '" + text + "' (expected 'tight' or 'symmetric-e')");
}

Rational lll_threshold(LllVariant variant, std::size_t delta)
{
    if (delta == 0) {
        throw PreconditionError("threshold undefined for Delta = 0");
    }
    if (variant == LllVariant::symmetric_e) {
        return Rational(1) / (e_upper_bound() * Rational(delta));
    }
    if (delta == 1) {
        return Rational(1);
    }
    return Rational(ipow(delta - 1, delta - 1), ipow(delta, delta));
}

LllReport check_lll_condition(const Instance& inst, const RelGraph& rel, LllVariant variant)
{
    LllReport r;
    r.variant = variant;
    auto prm = params(inst, rel);
    r.delta = prm.max_rel_degree;
    r.max_prob = 0;
    if (prm.trivially_satisfiable) {
        r.threshold = r.delta == 0 ? Rational(1) : lll_threshold(variant, r.delta);
        r.margin = r.threshold;
        r.passed = true;
        return r;
    }
    if (r.delta == 0) {
        throw PreconditionError("Delta = 0 while some rule is nontrivial: a vertex without variables forbids "
                                "the empty word");
    }
    r.threshold = lll_threshold(variant, r.delta);
    for (Vertex x = 0; x < inst.vertex_count(); ++x) {
        auto p = failure_prob(inst, x);
        if (p > r.max_prob) {
            r.max_prob = p;
        }
        if (!(p < r.threshold)) {
            r.failing.push_back(x);
        }
    }
    r.margin = r.threshold - r.max_prob;
    r.passed = r.failing.empty();
    return r;
}

}  // namespace lrmt
