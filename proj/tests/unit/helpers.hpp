#pragma once

#include "lrmt/cnf.hpp"
#include "lrmt/engine.hpp"
#include "lrmt/graph.hpp"
#include "lrmt/instance.hpp"
#include "lrmt/partition.hpp"

#include <memory>
#include <random>
#include <vector>

namespace testutil {

using lrmt::Vertex;

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n)
{
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

/// Random oriented graph: each vertex reads up to max_out distinct vertices.
inline lrmt::VariableGraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t max_out)
{
    std::vector<std::vector<Vertex>> out(n);
    for (Vertex x = 0; x < n; ++x) {
        auto deg = below(rng, max_out + 1);
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v) {
            all[v] = v;
        }
        std::shuffle(all.begin(), all.end(), rng);
        out[x].assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(deg, n)));
    }
    return lrmt::VariableGraph::from_out_lists(out);
}

/// Random rule on g: each word allowed with probability 7/8.
/// Each word is forbidden with probability 1 / forbid_one_in.
inline lrmt::Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t max_out, unsigned b,
                                     std::uint64_t forbid_one_in = 8)
{
    auto g = random_graph(rng, n, max_out);
    lrmt::LocalRule rule(b, g);
    for (Vertex x = 0; x < n; ++x) {
        // An empty-Var vertex forbidding the empty word could never be fixed.
        if (g.var(x).empty()) {
            continue;
        }
        for (std::uint64_t c = 0; c < rule.word_count(x); ++c) {
            if (below(rng, forbid_one_in) == 0) {
                rule.set(x, rule.decode(x, c), false);
            }
        }
    }
    return lrmt::Instance{g, rule};
}

inline lrmt::SymGraph sym(const std::vector<std::pair<Vertex, Vertex>>& edges, std::size_t n)
{
    lrmt::SymGraph h;
    h.adj.resize(n);
    for (auto [a, b] : edges) {
        h.adj[a].push_back(b);
        if (a != b) {
            h.adj[b].push_back(a);
        }
    }
    return h;
}

inline lrmt::SymGraph path(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) {
        e.push_back({i, i + 1});
    }
    return sym(e, n);
}

inline lrmt::SymGraph cycle(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
        e.push_back({i, static_cast<Vertex>((i + 1) % n)});
    }
    return sym(e, n);
}

inline std::shared_ptr<const lrmt::Engine> engine_for(lrmt::Instance inst, lrmt::Partition pi)
{
    auto ptr = std::make_shared<const lrmt::Instance>(std::move(inst));
    return std::make_shared<const lrmt::Engine>(ptr, std::move(pi), lrmt::index_order(ptr->vertex_count()));
}

inline std::shared_ptr<const lrmt::Engine> engine_for(lrmt::Instance inst)
{
    auto n = inst.vertex_count();
    return engine_for(std::move(inst), lrmt::Partition::discrete(n));
}

}  // namespace testutil
