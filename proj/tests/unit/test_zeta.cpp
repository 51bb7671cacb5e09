#include "helpers.hpp"

#include "lrmt/bundled.hpp"
#include "lrmt/error.hpp"
#include "lrmt/metric.hpp"
#include "lrmt/padding.hpp"
#include "lrmt/window.hpp"
#include "lrmt/zeta.hpp"

#include <gtest/gtest.h>

using namespace lrmt;

namespace {

const Rational half(1, 2);

struct Setup {
    std::shared_ptr<const Engine> engine;
    std::unique_ptr<ZetaCodec> codec;
};

Setup setup(const Instance& inst)
{
    auto ptr = std::make_shared<const Instance>(inst);
    auto metric = symmetrize(ptr->graph);
    auto n = default_window_n(metric, half);
    Setup s;
    s.engine = std::make_shared<const Engine>(ptr, sparse_partition(metric, 3 * n), index_order(ptr->vertex_count()));
    s.codec = std::make_unique<ZetaCodec>(s.engine, zero_assignment(*ptr), half, n);
    return s;
}

RandomTape tape_for(const Setup& s, std::size_t k, std::uint64_t seed)
{
    return RandomTape::finite_from_seed(s.engine->instance().alphabet(), s.engine->partition().part_count, k, seed);
}

std::vector<Digit> digits_of(const RandomTape& t, std::uint32_t parts, std::size_t k)
{
    std::vector<Digit> d;
    for (std::uint32_t i = 0; i < parts; ++i) {
        auto r = t.row(i, k);
        d.insert(d.end(), r.begin(), r.end());
    }
    return d;
}

}  // namespace

TEST(Zeta, SatisfiedStartGivesEmptyLandscape)
{
    auto inst = from_cnf(chain_cnf()).instance;
    auto ptr = std::make_shared<const Instance>(inst);
    auto metric = symmetrize(ptr->graph);
    auto n = default_window_n(metric, half);
    auto engine = std::make_shared<const Engine>(ptr, sparse_partition(metric, 3 * n), index_order(ptr->vertex_count()));
    // Start from a satisfying assignment.
    auto sat = run_until_satisfied(*engine, zero_assignment(inst), RandomTape::stream(2, engine->partition().part_count, 5),
                                   1000);
    ASSERT_EQ(sat.status, RunStatus::satisfied);
    ZetaCodec codec(engine, sat.final.assignment, half, n);
    const std::size_t k = 6;
    auto tape = RandomTape::finite_from_seed(2, engine->partition().part_count, k, 8);
    auto code = codec.encode(tape);
    EXPECT_TRUE(code.parts.empty());
    EXPECT_FALSE(code.landscape.has_value());
    EXPECT_EQ(code.payload, digits_of(tape, engine->partition().part_count, k));
    EXPECT_EQ(codec.decode(code, k), tape);
}

TEST(Zeta, RoundTripOnBundledInstances)
{
    for (const char* name : {"disjoint", "chain", "torus5"}) {
        auto s = setup(bundled_instance(name));
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const std::size_t k = 1 + seed % 12;
            auto tape = tape_for(s, k, seed);
            ZetaDiagnostics diag;
            auto code = s.codec->encode(tape, &diag);
            ASSERT_EQ(s.codec->decode(code, k), tape) << name << " seed " << seed;
            const auto p = s.engine->partition().part_count;
            ASSERT_EQ(code.payload.size(), p * k - diag.used_digits);
            if (code.landscape) {
                ASSERT_TRUE(code.landscape->grounded());
                ASSERT_EQ(code.landscape->nodes.size(), diag.forest_in_window);
            }
            std::vector<std::uint32_t> expect;
            for (Vertex x : diag.inner2) {
                expect.push_back(s.engine->partition().part_of[x]);
            }
            std::sort(expect.begin(), expect.end());
            ASSERT_EQ(code.parts, expect);
        }
    }
}

TEST(Zeta, RoundTripOnRandomInstances)
{
    std::mt19937_64 rng(51);
    for (int t = 0; t < 200; ++t) {
        auto s = setup(testutil::random_instance(rng, 2 + testutil::below(rng, 12), 3, 2 + testutil::below(rng, 2)));
        const std::size_t k = 1 + testutil::below(rng, 10);
        auto tape = tape_for(s, k, rng());
        ASSERT_EQ(s.codec->decode(s.codec->encode(tape), k), tape);
    }
}

TEST(Zeta, DistinctTapesGiveDistinctCodes)
{
    auto s = setup(bundled_instance("chain"));
    std::set<std::tuple<std::vector<std::uint32_t>, Word, std::string>> seen;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        auto code = s.codec->encode(tape_for(s, 4, seed));
        auto key = std::make_tuple(code.parts, code.payload,
                                   code.landscape ? landscape_to_json(*code.landscape).dump() : std::string());
        ASSERT_TRUE(seen.insert(key).second) << seed;
    }
}

TEST(Zeta, CorruptCodesAreRejected)
{
    auto s = setup(bundled_instance("chain"));
    const std::size_t k = 8;
    std::optional<ZetaCode> code;
    for (std::uint64_t seed = 0; !code; ++seed) {
        auto c = s.codec->encode(tape_for(s, k, seed));
        if (c.landscape) {
            code = c;
        }
    }
    auto shorter = *code;
    shorter.payload.pop_back();
    EXPECT_THROW(s.codec->decode(shorter, k), ParseError);
    auto longer = *code;
    longer.payload.push_back(0);
    EXPECT_THROW(s.codec->decode(longer, k), ParseError);
    auto bad_part = *code;
    bad_part.parts.push_back(s.engine->partition().part_count + 3);
    EXPECT_THROW(s.codec->decode(bad_part, k), ParseError);
}

TEST(Zeta, RejectsNonSparsePartition)
{
    auto inst = std::make_shared<const Instance>(bundled_instance("chain"));
    auto engine = std::make_shared<const Engine>(inst, Partition::single(inst->vertex_count()),
                                                 index_order(inst->vertex_count()));
    EXPECT_THROW(ZetaCodec(engine, zero_assignment(*inst), half), PreconditionError);
}

TEST(Zeta, DigitCountInequalityAfterPadding)
{
    std::mt19937_64 rng(52);
    std::size_t nonempty = 0;
    for (int t = 0; t < 300; ++t) {
        auto inst = testutil::random_instance(rng, 2 + testutil::below(rng, 10), 3, 2);
        auto padded = pad_uniform(inst, Partition::discrete(inst.vertex_count()), index_order(inst.vertex_count()), 3);
        auto s = setup(padded.instance);
        const std::size_t k = 1 + testutil::below(rng, 8);
        ZetaDiagnostics diag;
        s.codec->encode(tape_for(s, k, rng()), &diag);
        ASSERT_GE(diag.used_digits, 3 * diag.forest_over_inner3);
        ASSERT_GE(2 * diag.forest_over_inner3, diag.forest_in_window);
        nonempty += diag.forest_in_window > 0;
    }
    EXPECT_GT(nonempty, 50U);
}
