#pragma once

#include "lrmt/instance.hpp"
#include "lrmt/partition.hpp"
#include "lrmt/tape.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace lrmt {

/// MT_j together with the resample counters h_j.
struct RunState {
    std::size_t step = 0;
    Assignment assignment;
    std::vector<std::uint32_t> counters;
};

enum class RunStatus {
    running,         ///< k steps done without reaching a satisfying assignment
    satisfied,       ///< B(MT_j) is empty
    cap_exceeded,    ///< step cap reached while violations remain
    tape_exhausted,  ///< a finite tape had no digit at a needed position
};

const char* to_string(RunStatus s);

struct RunTrace {
    Assignment initial;
    /// S_j = IB(MT_j) for every executed step, ascending.
    std::vector<VertexSet> resample_sets;
    /// violating_words[j][i] = MT_j restricted to Var(S_j[i]).
    std::vector<std::vector<Word>> violating_words;
    RunState final;
    RunStatus status = RunStatus::running;

    std::size_t steps() const { return resample_sets.size(); }
    std::uint32_t max_resamples() const;
};

/// The instance, Rel(G), the partition pi and the greedy independence function
/// shared by every run. Immutable after construction.
class Engine {
public:
    Engine(std::shared_ptr<const Instance> instance, Partition partition, std::vector<Vertex> order);
    // The independence function points into rel_.
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    const Instance& instance() const { return *instance_; }
    std::shared_ptr<const Instance> instance_ptr() const { return instance_; }
    const RelGraph& rel() const { return rel_; }
    const Partition& partition() const { return partition_; }
    const std::vector<Vertex>& order() const { return order_; }

    RunState initial_state(Assignment f) const;

    /// One step: computes B(MT_j), picks IB(MT_j) greedily and resamples
    /// Var(IB) from the tape. Returns the resample set; sets `exhausted`
    /// (and leaves `state` untouched) if the tape ran out. If `words` is given it
    /// receives MT_j restricted to Var(x) for each returned x.
    VertexSet step(RunState& state, const RandomTape& tape, bool& exhausted,
                   std::vector<Word>* words = nullptr) const;

private:
    std::shared_ptr<const Instance> instance_;
    RelGraph rel_;
    Partition partition_;
    std::vector<Vertex> order_;
    IndependenceFunction indep_;
};

/// Default initial assignment f = 0.
Assignment zero_assignment(const Instance& inst);

/// The k-step algorithm. Steps after convergence are recorded as empty.
RunTrace run_k(const Engine& engine, Assignment f, std::size_t k, const RandomTape& tape);

/// The unbounded algorithm, stopped at the first satisfying assignment or at
/// `step_cap` steps.
RunTrace run_until_satisfied(const Engine& engine, Assignment f, const RandomTape& tape, std::size_t step_cap);

/// Baseline: the same loop, but every resampled variable draws a fresh digit
/// of its own stream, independent of the partition.
RunTrace classic_parallel_mta(const Engine& engine, Assignment f, std::uint64_t seed, std::size_t step_cap);

struct UsedUnused {
    Word used;    ///< rnd(pi(x), 0 .. h_k(x) - 1)
    Word unused;  ///< rnd(pi(x), h_k(x) .. k - 1)
};

/// Split of the stream of x after a k-step run, k = trace.steps().
UsedUnused used_unused(const Engine& engine, const RunTrace& trace, const RandomTape& tape, Vertex x);

/// Counters h_j for every j = 0..k, rebuilt from the resample sets.
std::vector<std::vector<std::uint32_t>> counter_history(const VariableGraph& g, const RunTrace& trace);

}  // namespace lrmt
