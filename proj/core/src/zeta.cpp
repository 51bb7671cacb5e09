#include "lrmt/zeta.hpp"

#include "lrmt/error.hpp"
#include "lrmt/landscape_ops.hpp"
#include "lrmt/metric.hpp"

#include <algorithm>

namespace lrmt {

ZetaCodec::ZetaCodec(std::shared_ptr<const Engine> engine, Assignment f, Rational eps, std::uint32_t n) :
    engine_(std::move(engine)), f_(std::move(f)), eps_(std::move(eps)), n_(n)
{
    const auto& inst = engine_->instance();
    metric_ = symmetrize(inst.graph);
    if (eps_ <= 0 || eps_ >= 1) {
        throw PreconditionError("epsilon must lie in (0, 1)");
    }
    if (n_ == 0 || !growth_condition(metric_, eps_, n_)) {
        throw PreconditionError("growth condition max |B(y, 3n)| < (1 + eps)^n fails for n = " + std::to_string(n_));
    }
    if (!is_sparse(metric_, engine_->partition(), 3 * n_)) {
        throw PreconditionError("partition is not " + std::to_string(3 * n_) + "-sparse");
    }
    if (f_.size() != inst.vertex_count()) {
        throw PreconditionError("initial assignment has the wrong size");
    }
    for (Vertex x = 0; x < inst.vertex_count(); ++x) {
        if (inst.graph.var(x).empty() && inst.rule.allowed_count(x) == 0) {
            throw PreconditionError("vertex " + std::to_string(x) + " reads no variables and forbids everything");
        }
    }
}

ZetaCodec::ZetaCodec(std::shared_ptr<const Engine> engine, Assignment f, Rational eps) :
    ZetaCodec(engine, std::move(f), eps, default_window_n(symmetrize(engine->instance().graph), eps))
{
}

ZetaCode ZetaCodec::encode(const RandomTape& tape, ZetaDiagnostics* diagnostics) const
{
    if (!tape.is_finite()) {
        throw PreconditionError("zeta encodes finite tapes only");
    }
    const auto& pi = engine_->partition();
    if (tape.part_count() != pi.part_count) {
        throw PreconditionError("tape part count differs from the partition");
    }
    const std::size_t k = tape.width();
    const std::uint32_t p = pi.part_count;
    auto trace = run_k(*engine_, f_, k, tape);
    auto L = extract_landscape(*engine_, trace);

    ZetaCode code;
    if (L.empty()) {
        code.payload = tape.digits();
        if (diagnostics) {
            *diagnostics = ZetaDiagnostics{};
            diagnostics->trace = std::move(trace);
        }
        return code;
    }

    std::vector<std::uint64_t> g(engine_->instance().vertex_count(), 0);
    for (const auto& node : L.nodes) {
        ++g[node.base];
    }
    auto window = scan_window(metric_, g, eps_, n_);
    if (!window) {
        throw InternalError("no window found although the growth condition holds");
    }
    const auto& F = window->vertices;
    auto inner2 = interior(metric_, F, 2);

    auto K = ground(restrict_landscape(L, F)).landscape;
    K.canonicalize();

    // pi is injective on F, so each part in A has exactly one owner.
    std::vector<std::int64_t> owner(p, -1);
    for (Vertex x : inner2) {
        owner[pi.part_of[x]] = x;
        code.parts.push_back(pi.part_of[x]);
    }
    std::sort(code.parts.begin(), code.parts.end());
    for (std::uint32_t i = 0; i < p; ++i) {
        const auto* row = tape.digits().data() + static_cast<std::size_t>(i) * k;
        std::size_t from = owner[i] >= 0 ? trace.final.counters[static_cast<std::size_t>(owner[i])] : 0;
        code.payload.insert(code.payload.end(), row + from, row + k);
    }
    code.landscape = std::move(K);

    if (diagnostics) {
        diagnostics->inner3 = interior(metric_, F, 3);
        diagnostics->forest_in_window = code.landscape->nodes.size();
        diagnostics->forest_over_inner3 = 0;
        for (Vertex x : diagnostics->inner3) {
            diagnostics->forest_over_inner3 += g[x];
        }
        diagnostics->used_digits = 0;
        for (Vertex x : inner2) {
            diagnostics->used_digits += trace.final.counters[x];
        }
        diagnostics->inner2 = std::move(inner2);
        diagnostics->window = std::move(window);
        diagnostics->trace = std::move(trace);
    }
    return code;
}

RandomTape ZetaCodec::decode(const ZetaCode& code, std::size_t k) const
{
    const std::uint32_t p = engine_->partition().part_count;
    const unsigned b = engine_->instance().alphabet();
    auto corrupt = [](const std::string& what) { return ParseError("corrupt zeta code: " + what); };
    for (auto d : code.payload) {
        if (d >= b) {
            throw corrupt("payload digit outside the alphabet");
        }
    }
    if (!code.landscape) {
        if (!code.parts.empty()) {
            throw corrupt("part set without a landscape");
        }
        if (code.payload.size() != static_cast<std::size_t>(p) * k) {
            throw corrupt("payload length " + std::to_string(code.payload.size()) + ", expected " +
                          std::to_string(static_cast<std::size_t>(p) * k));
        }
        return RandomTape::finite(b, p, k, code.payload);
    }

    const auto& K = *code.landscape;
    if (auto problem = check_landscape(K)) {
        throw corrupt("landscape invalid: " + *problem);
    }
    // The decoration pi of K identifies which of its vertices lie in F_{-2}.
    std::vector<std::int64_t> holder(p, -1);
    for (Vertex v = 0; v < K.vertex_count(); ++v) {
        if (K.part[v] >= p) {
            throw corrupt("landscape part index out of range");
        }
        if (holder[K.part[v]] >= 0) {
            throw corrupt("landscape repeats a part");
        }
        holder[K.part[v]] = v;
    }
    auto seq = asgn_seq(K);
    std::vector<Word> used(p);
    std::uint32_t last = 0;
    bool first = true;
    for (auto i : code.parts) {
        if (i >= p || (!first && i <= last) || holder[i] < 0) {
            throw corrupt("part set does not match the landscape");
        }
        first = false;
        last = i;
        used[i] = seq[static_cast<std::size_t>(holder[i])];
        if (used[i].size() > k) {
            throw corrupt("decoded sequence longer than the tape");
        }
    }
    std::size_t expected = 0;
    for (std::uint32_t i = 0; i < p; ++i) {
        expected += k - used[i].size();
    }
    if (code.payload.size() != expected) {
        throw corrupt("payload length " + std::to_string(code.payload.size()) + ", expected " +
                      std::to_string(expected));
    }
    std::vector<Digit> digits;
    digits.reserve(static_cast<std::size_t>(p) * k);
    std::size_t at = 0;
    for (std::uint32_t i = 0; i < p; ++i) {
        digits.insert(digits.end(), used[i].begin(), used[i].end());
        auto rest = k - used[i].size();
        digits.insert(digits.end(), code.payload.begin() + static_cast<std::ptrdiff_t>(at),
                      code.payload.begin() + static_cast<std::ptrdiff_t>(at + rest));
        at += rest;
    }
    return RandomTape::finite(b, p, k, std::move(digits));
}

}  // namespace lrmt
