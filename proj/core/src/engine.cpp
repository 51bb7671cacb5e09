#include "lrmt/engine.hpp"

#include "lrmt/error.hpp"
#include "lrmt/rng.hpp"

#include <algorithm>

namespace lrmt {

const char* to_string(RunStatus s)
{
    switch (s) {
    case RunStatus::running:
        return "running";
    case RunStatus::satisfied:
        return "satisfied";
    case RunStatus::cap_exceeded:
        return "cap-exceeded";
    case RunStatus::tape_exhausted:
        return "tape-exhausted";
    }
    return "?";
}

std::uint32_t RunTrace::max_resamples() const
{
    std::uint32_t m = 0;
    for (auto h : final.counters) {
        m = std::max(m, h);
    }
    return m;
}

Engine::Engine(std::shared_ptr<const Instance> instance, Partition partition, std::vector<Vertex> order) :
    instance_(std::move(instance)),
    rel_(build_rel(instance_->graph)),
    partition_(std::move(partition)),
    order_(std::move(order)),
    indep_(rel_.graph(), order_)
{
    instance_->validate();
    partition_.validate(instance_->vertex_count());
}

RunState Engine::initial_state(Assignment f) const
{
    if (f.size() != instance_->vertex_count()) {
        throw PreconditionError("initial assignment has the wrong size");
    }
    for (auto d : f) {
        if (d >= instance_->alphabet()) {
            throw PreconditionError("initial assignment value out of range");
        }
    }
    RunState s;
    s.assignment = std::move(f);
    s.counters.assign(instance_->vertex_count(), 0);
    return s;
}

VertexSet Engine::step(RunState& state, const RandomTape& tape, bool& exhausted, std::vector<Word>* words) const
{
    exhausted = false;
    auto bad = violating_set(*instance_, state.assignment);
    auto chosen = indep_.select(bad);
    std::sort(chosen.begin(), chosen.end());
    // Resampled variables are distinct across chosen clauses (independence in Rel).
    std::vector<std::pair<Vertex, Digit>> updates;
    for (Vertex x : chosen) {
        for (Vertex v : instance_->graph.var(x)) {
            auto d = tape.at(partition_.part_of[v], state.counters[v]);
            if (!d) {
                exhausted = true;
                return {};
            }
            updates.emplace_back(v, *d);
        }
    }
    if (words) {
        words->clear();
        for (Vertex x : chosen) {
            words->push_back(restrict_to_var(instance_->graph, state.assignment, x));
        }
    }
    for (auto [v, d] : updates) {
        state.assignment[v] = d;
        ++state.counters[v];
    }
    ++state.step;
    return chosen;
}

Assignment zero_assignment(const Instance& inst)
{
    return Assignment(inst.vertex_count(), 0);
}

namespace {

template <class StepFn>
RunTrace drive(const Engine& engine, Assignment f, std::size_t steps, bool stop_when_satisfied, StepFn&& step_fn)
{
    RunTrace trace;
    trace.initial = f;
    trace.final = engine.initial_state(std::move(f));
    for (std::size_t j = 0; j < steps; ++j) {
        bool exhausted = false;
        std::vector<Word> words;
        auto chosen = step_fn(trace.final, exhausted, words);
        if (exhausted) {
            trace.status = RunStatus::tape_exhausted;
            return trace;
        }
        if (chosen.empty() && stop_when_satisfied) {
            --trace.final.step;
            trace.status = RunStatus::satisfied;
            return trace;
        }
        trace.resample_sets.push_back(std::move(chosen));
        trace.violating_words.push_back(std::move(words));
    }
    if (violating_set(engine.instance(), trace.final.assignment).empty()) {
        trace.status = RunStatus::satisfied;
    } else {
        trace.status = stop_when_satisfied ? RunStatus::cap_exceeded : RunStatus::running;
    }
    return trace;
}

}  // namespace

RunTrace run_k(const Engine& engine, Assignment f, std::size_t k, const RandomTape& tape)
{
    return drive(engine, std::move(f), k, false,
                 [&](RunState& s, bool& exhausted, std::vector<Word>& w) { return engine.step(s, tape, exhausted, &w); });
}

RunTrace run_until_satisfied(const Engine& engine, Assignment f, const RandomTape& tape, std::size_t step_cap)
{
    return drive(engine, std::move(f), step_cap, true,
                 [&](RunState& s, bool& exhausted, std::vector<Word>& w) { return engine.step(s, tape, exhausted, &w); });
}

RunTrace classic_parallel_mta(const Engine& engine, Assignment f, std::uint64_t seed, std::size_t step_cap)
{
    // One stream per vertex, under a seed domain disjoint from the shared tapes.
    const std::uint64_t classic_seed = mix64(seed ^ 0x636c61737369630aULL);
    Engine per_vertex(engine.instance_ptr(), Partition::discrete(engine.instance().vertex_count()), engine.order());
    auto tape = RandomTape::stream(engine.instance().alphabet(),
                                   static_cast<std::uint32_t>(engine.instance().vertex_count()), classic_seed);
    return run_until_satisfied(per_vertex, std::move(f), tape, step_cap);
}

UsedUnused used_unused(const Engine& engine, const RunTrace& trace, const RandomTape& tape, Vertex x)
{
    const std::size_t k = trace.steps();
    const std::size_t h = trace.final.counters[x];
    auto part = engine.partition().part_of[x];
    auto stream = tape.row(part, k);
    if (stream.size() < k) {
        throw PreconditionError("tape narrower than the run length");
    }
    UsedUnused u;
    u.used.assign(stream.begin(), stream.begin() + static_cast<std::ptrdiff_t>(h));
    u.unused.assign(stream.begin() + static_cast<std::ptrdiff_t>(h), stream.end());
    return u;
}

std::vector<std::vector<std::uint32_t>> counter_history(const VariableGraph& g, const RunTrace& trace)
{
    std::vector<std::vector<std::uint32_t>> h;
    h.emplace_back(g.vertex_count(), 0);
    for (const auto& s : trace.resample_sets) {
        auto next = h.back();
        for (Vertex x : s) {
            for (Vertex v : g.var(x)) {
                ++next[v];
            }
        }
        h.push_back(std::move(next));
    }
    return h;
}

}  // namespace lrmt
