#include "helpers.hpp"
#include "oracles.hpp"

#include "lrmt/bundled.hpp"
#include "lrmt/error.hpp"
#include "lrmt/landscape.hpp"
#include "lrmt/landscape_ops.hpp"
#include "lrmt/metric.hpp"
#include "lrmt/window.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>

using namespace lrmt;

namespace {

/// Hand-built landscape over `inst` with Final = f and the discrete partition.
DecoratedLandscape make(const Instance& inst, std::vector<ForestNode> nodes, Assignment f = {})
{
    DecoratedLandscape L;
    L.base = std::make_shared<const Instance>(inst);
    L.rel = build_rel(inst.graph);
    L.nodes = std::move(nodes);
    L.final = f.empty() ? Assignment(inst.vertex_count(), 0) : f;
    L.part.resize(inst.vertex_count());
    std::iota(L.part.begin(), L.part.end(), 0U);
    L.origin.resize(inst.vertex_count());
    std::iota(L.origin.begin(), L.origin.end(), Vertex{0});
    L.relaxed.assign(inst.vertex_count(), 0);
    return L;
}

ForestNode node(Vertex base, std::uint32_t level, std::int32_t parent, Word prev)
{
    return ForestNode{base, level, parent, std::move(prev)};
}

/// Clauses 0 -> {3}, 1 -> {4}, 2 -> {3, 4}; each forbids the all-zero word.
Instance triangle()
{
    auto g = VariableGraph::from_out_lists({{3}, {4}, {3, 4}, {}, {}});
    Instance inst{g, LocalRule(2, g)};
    inst.rule.set(0, Word{0}, false);
    inst.rule.set(1, Word{0}, false);
    inst.rule.set(2, Word{0, 0}, false);
    return inst;
}

std::map<Vertex, std::size_t> columns(const DecoratedLandscape& L)
{
    std::map<Vertex, std::size_t> m;
    for (const auto& v : L.nodes) {
        ++m[v.base];
    }
    return m;
}

std::size_t tree_count(const DecoratedLandscape& L) { return L.roots().size(); }

std::shared_ptr<const Engine> sparse_engine(const Instance& inst, std::uint32_t r)
{
    auto ptr = std::make_shared<const Instance>(inst);
    return std::make_shared<const Engine>(ptr, sparse_partition(symmetrize(inst.graph), r),
                                          index_order(inst.vertex_count()));
}

/// Extracted landscape of a random short run, non-empty when possible.
DecoratedLandscape random_landscape(std::mt19937_64& rng, std::size_t max_vertices = 10)
{
    auto inst = testutil::random_instance(rng, 2 + testutil::below(rng, max_vertices - 1), 3, 2);
    auto engine = sparse_engine(inst, 1);
    auto tape = RandomTape::stream(2, engine->partition().part_count, rng());
    auto trace = run_k(*engine, zero_assignment(inst), 1 + testutil::below(rng, 8), tape);
    return extract_landscape(*engine, trace);
}

}  // namespace

TEST(Extract, NoViolationsGiveEmptyLandscape)
{
    auto inst = triangle();
    auto engine = sparse_engine(inst, 0);
    auto trace = run_k(*engine, Assignment(5, 1), 4, RandomTape::stream(2, engine->partition().part_count, 1));
    auto L = extract_landscape(*engine, trace);
    EXPECT_TRUE(L.empty());
    for (const auto& s : asgn_seq(L)) {
        EXPECT_TRUE(s.empty());
    }
}

TEST(Extract, SingleResample)
{
    auto g = VariableGraph::from_out_lists({{1}, {}});
    Instance inst{g, LocalRule(2, g)};
    inst.rule.set(0, Word{0}, false);
    auto engine = testutil::engine_for(inst);
    auto tape = RandomTape::finite(2, 2, 2, {0, 0, 1, 1});
    auto trace = run_k(*engine, Assignment{0, 0}, 2, tape);
    auto L = extract_landscape(*engine, trace);
    ASSERT_EQ(L.nodes.size(), 1U);
    EXPECT_EQ(L.nodes[0], node(0, 0, no_parent, Word{0}));
    EXPECT_EQ(L.final, (Assignment{0, 1}));
    EXPECT_TRUE(L.grounded());
}

TEST(Extract, ParentsAreLeastAdjacentBase)
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        auto L = random_landscape(rng);
        ASSERT_EQ(check_landscape(L), std::nullopt);
        for (const auto& v : L.nodes) {
            if (v.level == 0) {
                ASSERT_EQ(v.parent, no_parent);
                continue;
            }
            Vertex best = static_cast<Vertex>(-1);
            for (const auto& u : L.nodes) {
                if (u.level + 1 == v.level && L.rel.adjacent(u.base, v.base)) {
                    best = std::min(best, u.base);
                }
            }
            ASSERT_NE(v.parent, no_parent);
            ASSERT_EQ(L.nodes[static_cast<std::size_t>(v.parent)].base, best);
        }
    }
}

TEST(AsgnSeq, HandInduction)
{
    auto g = VariableGraph::from_out_lists({{1}, {}});
    Instance inst{g, LocalRule(2, g)};
    inst.rule.set(0, Word{0}, false);
    auto L = make(inst, {node(0, 0, no_parent, Word{0})}, Assignment{0, 1});
    ASSERT_EQ(check_landscape(L), std::nullopt);
    auto seq = asgn_seq(L);
    EXPECT_TRUE(seq[0].empty());
    EXPECT_EQ(seq[1], (Word{1}));
}

TEST(AsgnSeq, EqualsUsedOnExtractedRuns)
{
    std::mt19937_64 rng(42);
    for (int t = 0; t < 300; ++t) {
        auto inst = testutil::random_instance(rng, 2 + testutil::below(rng, 9), 3, 2 + testutil::below(rng, 2));
        auto engine = sparse_engine(inst, static_cast<std::uint32_t>(testutil::below(rng, 3)));
        auto tape = RandomTape::stream(inst.alphabet(), engine->partition().part_count, rng());
        auto trace = run_k(*engine, zero_assignment(inst), 1 + testutil::below(rng, 10), tape);
        auto seq = asgn_seq(extract_landscape(*engine, trace));
        for (Vertex x = 0; x < inst.vertex_count(); ++x) {
            ASSERT_EQ(seq[x], used_unused(*engine, trace, tape, x).used);
        }
    }
}

TEST(Restrict, FullSetIsIdentity)
{
    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) {
        auto L = random_landscape(rng);
        auto K = restrict_landscape(L, index_order(L.vertex_count()));
        EXPECT_TRUE(K.same_as(L));
    }
}

TEST(Restrict, CutClauseIsRelaxed)
{
    auto inst = triangle();
    auto L = make(inst, {node(2, 0, no_parent, Word{0, 0})});
    auto K = restrict_landscape(L, VertexSet{0, 2, 3});
    ASSERT_EQ(K.vertex_count(), 3U);
    EXPECT_EQ(K.origin, (std::vector<Vertex>{0, 2, 3}));
    // Clause 2 lost variable 4 and became local vertex 1.
    EXPECT_EQ(K.relaxed, (std::vector<std::uint8_t>{0, 1, 0}));
    EXPECT_EQ(K.base->rule.allowed_count(1), 2U);
    EXPECT_EQ(K.base->rule.allowed_count(0), 1U);
    EXPECT_FALSE(is_faithful_at(L, VertexSet{0, 2, 3}, 3));
    EXPECT_TRUE(is_faithful_at(L, VertexSet{0, 2, 3, 4}, 3));
}

TEST(Restrict, NodesLosingAllVariablesAreDropped)
{
    // 0 reads {1}; 2 reads {0}. Keeping {0, 2} cuts every variable of 0.
    auto g = VariableGraph::from_out_lists({{1}, {}, {0}});
    Instance inst{g, LocalRule(2, g)};
    inst.rule.set(0, Word{0}, false);
    auto L = make(inst, {node(0, 0, no_parent, Word{0}), node(0, 1, 0, Word{0})});
    ASSERT_EQ(check_landscape(L), std::nullopt);
    auto K = restrict_landscape(L, VertexSet{0, 2});
    EXPECT_TRUE(K.empty());
    EXPECT_TRUE(ground(K).landscape.grounded());
}

TEST(Restrict, FaithfulVerticesKeepSeq)
{
    std::mt19937_64 rng(44);
    std::size_t checked = 0;
    for (int t = 0; t < 300; ++t) {
        auto L = random_landscape(rng);
        auto h = symmetrize(L.base->graph);
        auto keep = ball(h, static_cast<Vertex>(testutil::below(rng, L.vertex_count())),
                         static_cast<std::uint32_t>(testutil::below(rng, 3)));
        auto K = restrict_landscape(L, keep);
        ASSERT_EQ(check_landscape(K), std::nullopt);
        auto sl = asgn_seq(L);
        auto sk = asgn_seq(K);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            if (is_faithful_at(L, keep, keep[i])) {
                ASSERT_EQ(sk[i], sl[keep[i]]);
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 100U);
}

TEST(Ops, PushAllLowersEveryLevel)
{
    auto inst = triangle();
    auto L = make(inst, {node(0, 1, no_parent, Word{0}), node(2, 2, 0, Word{0, 0}), node(1, 1, no_parent, Word{0})});
    ASSERT_EQ(check_landscape(L), std::nullopt);
    ASSERT_TRUE(is_pushable(L));
    auto K = push_all(L);
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
        EXPECT_EQ(K.nodes[i].level + 1, L.nodes[i].level);
    }
    EXPECT_EQ(asgn_seq(K), asgn_seq(L));
    EXPECT_THROW(push_all(K), PreconditionError);
}

TEST(Ops, JoinMergesTwoTrees)
{
    auto inst = triangle();
    auto L = make(inst, {node(0, 0, no_parent, Word{0}), node(2, 1, no_parent, Word{0, 0})});
    ASSERT_EQ(check_landscape(L), std::nullopt);
    ASSERT_TRUE(is_joinable(L, 0, 1));
    EXPECT_FALSE(is_pushable_tree(L, 1));
    auto K = join(L, 0, 1);
    EXPECT_EQ(tree_count(K), tree_count(L) - 1);
    EXPECT_EQ(K.nodes[1].parent, 0);
    EXPECT_EQ(asgn_seq(K), asgn_seq(L));
    EXPECT_THROW(join(K, 0, 1), PreconditionError);
}

TEST(Ops, RebranchMovesOneParent)
{
    auto inst = triangle();
    auto L = make(inst, {node(0, 0, no_parent, Word{0}), node(1, 0, no_parent, Word{0}), node(2, 1, 0, Word{0, 0})});
    ASSERT_EQ(check_landscape(L), std::nullopt);
    ASSERT_TRUE(is_rebranchable(L, 0, 1, 2));
    auto K = rebranch(L, 0, 1, 2);
    EXPECT_EQ(tree_count(K), tree_count(L));
    EXPECT_EQ(columns(K), columns(L));
    std::size_t changed = 0;
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
        changed += K.nodes[i].parent != L.nodes[i].parent;
    }
    EXPECT_EQ(changed, 1U);
    EXPECT_EQ(K.nodes[2].parent, 1);
    EXPECT_EQ(asgn_seq(K), asgn_seq(L));
    EXPECT_THROW(rebranch(L, 1, 0, 2), PreconditionError);
}

// Literal definitions allow a pushable tree that also contains a rebranchable
// triple, so "pushable iff not rebranchable and not joinable" does not hold.
TEST(Ops, SameTreeRebranchableTripleInPushableTree)
{
    auto inst = triangle();
    auto L = make(inst, {node(2, 1, no_parent, Word{0, 0}), node(0, 2, 0, Word{0}), node(1, 2, 0, Word{0}),
                         node(2, 3, 1, Word{0, 0})});
    ASSERT_EQ(check_landscape(L), std::nullopt);
    EXPECT_TRUE(is_pushable_tree(L, 0));
    EXPECT_TRUE(is_rebranchable(L, 1, 2, 3));
    EXPECT_TRUE(is_rebranchable_tree(L, 0));
    EXPECT_FALSE(is_joinable_tree(L, 0));
}

TEST(Ops, RandomOperationsPreserveSeqAndInvariants)
{
    std::mt19937_64 rng(45);
    std::size_t applied = 0;
    for (int t = 0; t < 600; ++t) {
        auto L = random_landscape(rng, 12);
        if (L.empty()) {
            continue;
        }
        auto h = symmetrize(L.base->graph);
        L = restrict_landscape(L, ball(h, static_cast<Vertex>(testutil::below(rng, L.vertex_count())),
                                       static_cast<std::uint32_t>(1 + testutil::below(rng, 3))));
        const auto seq = asgn_seq(L);
        const auto cols = columns(L);
        for (int walk = 0; walk < 10; ++walk) {
            std::vector<DecoratedLandscape> results;
            const auto n = L.nodes.size();
            for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t y = 0; y < n; ++y) {
                    if (is_joinable(L, y, x)) {
                        auto K = join(L, y, x);
                        EXPECT_EQ(tree_count(K) + 1, tree_count(L));
                        results.push_back(std::move(K));
                    }
                    for (std::size_t z = 0; z < n; ++z) {
                        if (is_rebranchable(L, x, y, z)) {
                            results.push_back(rebranch(L, x, y, z));
                        }
                    }
                }
                if (L.nodes[x].parent == no_parent && is_pushable_tree(L, x)) {
                    auto K = push_tree(L, x);
                    int lowered = 0;
                    for (std::size_t i = 0; i < n; ++i) {
                        lowered += K.nodes[i].level != L.nodes[i].level;
                    }
                    ASSERT_GT(lowered, 0);
                    results.push_back(std::move(K));
                }
            }
            if (is_pushable(L)) {
                results.push_back(push_all(L));
            }
            if (results.empty()) {
                break;
            }
            for (const auto& K : results) {
                ASSERT_EQ(check_landscape(K), std::nullopt);
                ASSERT_EQ(columns(K), cols);
                ASSERT_EQ(asgn_seq(K), seq);
                ++applied;
            }
            L = results[testutil::below(rng, results.size())];
        }
    }
    EXPECT_GT(applied, 200U);
}

TEST(Ground, AlreadyGroundedIsUnchanged)
{
    auto inst = triangle();
    auto L = make(inst, {node(0, 0, no_parent, Word{0}), node(2, 1, 0, Word{0, 0})});
    auto r = ground(L);
    EXPECT_TRUE(r.log.empty());
    EXPECT_TRUE(r.landscape.same_as(L));
}

TEST(Ground, SingleHighTreeIsPushedDown)
{
    auto inst = triangle();
    auto L = make(inst, {node(2, 3, no_parent, Word{0, 0})});
    auto r = ground(L);
    EXPECT_EQ(r.log.size(), 3U);
    EXPECT_TRUE(r.landscape.grounded());
    EXPECT_EQ(r.landscape.nodes[0].level, 0U);
}

TEST(Ground, RebranchesOutOfBlockedTree)
{
    // Clauses 0..5 read (6 + c, 7 + c): Rel(G) restricted to clauses is a path.
    std::vector<std::vector<Vertex>> out(13);
    for (Vertex c = 0; c < 6; ++c) {
        out[c] = {6 + c, 7 + c};
    }
    auto g = VariableGraph::from_out_lists(out);
    Instance inst{g, LocalRule(2, g)};
    for (Vertex c = 0; c < 6; ++c) {
        inst.rule.set(c, Word{0, 0}, false);
    }
    const Word w{0, 0};
    // Roots are nodes 0, 1 and 3; the tree of node 3 is above level 0 but
    // (0, 1) points into it, so only a rebranching makes progress.
    auto L = make(inst, {node(0, 0, no_parent, w), node(5, 0, no_parent, w), node(1, 2, 3, w), node(2, 1, no_parent, w),
                         node(0, 1, 0, w)});
    ASSERT_EQ(check_landscape(L), std::nullopt);
    EXPECT_FALSE(is_pushable_tree(L, 3));
    auto r = ground(L);
    EXPECT_TRUE(r.landscape.grounded());
    ASSERT_FALSE(r.log.empty());
    EXPECT_EQ(r.log[0].kind, GroundOp::Kind::rebranch);
    EXPECT_EQ(asgn_seq(r.landscape), asgn_seq(L));
}

TEST(Ground, RestrictedExtractedLandscapes)
{
    std::mt19937_64 rng(46);
    for (int t = 0; t < 500; ++t) {
        auto L = random_landscape(rng, 12);
        if (testutil::below(rng, 2) == 0 && !L.empty()) {
            auto h = symmetrize(L.base->graph);
            L = restrict_landscape(L, ball(h, static_cast<Vertex>(testutil::below(rng, L.vertex_count())),
                                           static_cast<std::uint32_t>(1 + testutil::below(rng, 3))));
        }
        auto r = ground(L);
        ASSERT_TRUE(r.landscape.grounded());
        ASSERT_EQ(check_landscape(r.landscape), std::nullopt);
        ASSERT_LE(r.log.size(), ground_guard(L));
        ASSERT_EQ(asgn_seq(r.landscape), asgn_seq(L));
        ASSERT_EQ(columns(r.landscape), columns(L));
    }
}

TEST(Landscape, JsonDump)
{
    auto inst = triangle();
    auto L = make(inst, {node(0, 0, no_parent, Word{0}), node(2, 1, 0, Word{0, 0})});
    auto j = landscape_to_json(L);
    EXPECT_EQ(j["nodes"].size(), 2U);
    auto t = landscape_type(L);
    EXPECT_EQ(t.D, 2U);
    EXPECT_EQ(t.beta, 1U);
    EXPECT_EQ(t.N1, 5U);
    EXPECT_EQ(t.N2, 2U);
    EXPECT_EQ(t.delta, build_rel(inst.graph).max_degree());
    EXPECT_TRUE(has_type(L, t));
    auto bigger = t;
    ++bigger.N2;
    EXPECT_FALSE(has_type(L, bigger));
}

TEST(Window, SingleSupportUsesRadiusThree)
{
    auto p = testutil::path(30);
    std::vector<std::uint64_t> g(30, 0);
    g[12] = 4;
    auto w = find_window(p, g, Rational(1, 2), default_window_n(p, Rational(1, 2)));
    EXPECT_EQ(w.center, 12U);
    EXPECT_EQ(w.radius, 3U);
    EXPECT_EQ(w.vertices, ball(p, 12, 3));
}

TEST(Window, ConstantOnPathMatchesDirectScan)
{
    for (std::size_t len : {10U, 25U, 60U}) {
        auto p = testutil::path(len);
        std::vector<std::uint64_t> g(len, 1);
        const std::uint32_t n = 6;
        auto w = scan_window(p, g, Rational(1, 2), n);
        std::optional<std::uint32_t> expect;
        for (std::uint32_t r = 3; r <= 3 * n && !expect; ++r) {
            double outer = static_cast<double>(ball(p, 0, r).size());
            double inner = static_cast<double>(ball(p, 0, r - 3).size());
            if (2 * outer < 3 * inner) {
                expect = r;
            }
        }
        ASSERT_EQ(w.has_value(), expect.has_value()) << len;
        if (w) {
            EXPECT_EQ(w->center, 0U);
            EXPECT_EQ(w->radius, *expect);
        }
    }
}

TEST(Window, Errors)
{
    auto p = testutil::path(10);
    std::vector<std::uint64_t> zero(10, 0);
    EXPECT_THROW(find_window(p, zero, Rational(1, 2), 4), PreconditionError);
    std::vector<std::uint64_t> one(10, 1);
    // |B(y, 3)| = 7 is not below 1.5.
    EXPECT_THROW(find_window(p, one, Rational(1, 2), 1), PreconditionError);
    EXPECT_FALSE(growth_condition(p, Rational(1, 2), 1));
    EXPECT_EQ(default_window_n(p, Rational(1, 2)), 6U);
}

TEST(Window, PropertyBounds)
{
    std::mt19937_64 rng(47);
    for (int t = 0; t < 200; ++t) {
        auto inst = testutil::random_instance(rng, 2 + testutil::below(rng, 20), 2, 2);
        auto h = symmetrize(inst.graph);
        std::vector<std::uint64_t> g(inst.vertex_count());
        for (auto& x : g) {
            x = testutil::below(rng, 4);
        }
        auto w = scan_window(h, g, Rational(1, 2), 4);
        if (!w) {
            continue;
        }
        std::uint64_t sum = 0, inner = 0;
        for (Vertex v : w->vertices) {
            sum += g[v];
        }
        for (Vertex v : ball(h, w->center, w->radius - 3)) {
            inner += g[v];
        }
        ASSERT_GE(sum, *std::max_element(g.begin(), g.end()));
        ASSERT_LT(2 * sum, 3 * inner);
    }
}
