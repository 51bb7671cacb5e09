#include "lrmt/bundled.hpp"
#include "lrmt/cnf.hpp"
#include "lrmt/engine.hpp"
#include "lrmt/landscape.hpp"
#include "lrmt/landscape_ops.hpp"
#include "lrmt/partition.hpp"
#include "lrmt/trees.hpp"
#include "lrmt/window.hpp"
#include "lrmt/zeta.hpp"

#include <benchmark/benchmark.h>

#include <memory>

namespace {

std::shared_ptr<const lrmt::Engine> make_engine(lrmt::Instance inst, std::uint32_t r)
{
    auto ptr = std::make_shared<const lrmt::Instance>(std::move(inst));
    auto metric = lrmt::symmetrize(ptr->graph);
    return std::make_shared<const lrmt::Engine>(ptr, lrmt::sparse_partition(metric, r),
                                                lrmt::index_order(ptr->vertex_count()));
}

void BM_SolveRandomSat(benchmark::State& state)
{
    auto engine = make_engine(
        lrmt::from_cnf(lrmt::random_bounded_overlap_sat(static_cast<std::uint32_t>(state.range(0)), 3, 7)).instance, 1);
    auto f = lrmt::zero_assignment(engine->instance());
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto tape = lrmt::RandomTape::stream(2, engine->partition().part_count, seed++);
        benchmark::DoNotOptimize(lrmt::run_until_satisfied(*engine, f, tape, 1000));
    }
}
BENCHMARK(BM_SolveRandomSat)->Arg(100)->Arg(1000);

void BM_SolveTorus32(benchmark::State& state)
{
    auto engine = make_engine(lrmt::bundled_instance("torus32"), 1);
    auto f = lrmt::zero_assignment(engine->instance());
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto tape = lrmt::RandomTape::stream(2, engine->partition().part_count, seed++);
        benchmark::DoNotOptimize(lrmt::run_until_satisfied(*engine, f, tape, 1000));
    }
}
BENCHMARK(BM_SolveTorus32);

void BM_SparsePartition(benchmark::State& state)
{
    auto inst = lrmt::bundled_instance("torus32");
    auto metric = lrmt::symmetrize(inst.graph);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lrmt::sparse_partition(metric, static_cast<std::uint32_t>(state.range(0))));
    }
}
BENCHMARK(BM_SparsePartition)->Arg(1)->Arg(3);

void BM_ZetaRoundTrip(benchmark::State& state)
{
    auto inst = std::make_shared<const lrmt::Instance>(lrmt::bundled_instance("chain"));
    const lrmt::Rational eps(1, 2);
    auto metric = lrmt::symmetrize(inst->graph);
    auto n = lrmt::default_window_n(metric, eps);
    auto engine = std::make_shared<const lrmt::Engine>(inst, lrmt::sparse_partition(metric, 3 * n),
                                                       lrmt::index_order(inst->vertex_count()));
    lrmt::ZetaCodec codec(engine, lrmt::zero_assignment(*inst), eps, n);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto tape = lrmt::RandomTape::finite_from_seed(2, engine->partition().part_count, 8, seed++);
        benchmark::DoNotOptimize(codec.decode(codec.encode(tape), 8));
    }
}
BENCHMARK(BM_ZetaRoundTrip);

void BM_CountTrees(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(lrmt::count_labelled_trees(3, static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_CountTrees)->Arg(12)->Arg(40);

}  // namespace
BENCHMARK_MAIN();
