#pragma once

// Independent reference implementations used by the tests. They follow the
// definitions directly and share no code with the library beyond its data
// types.

#include "lrmt/instance.hpp"
#include "lrmt/partition.hpp"
#include "lrmt/tape.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using lrmt::Vertex;

/// Rel(G) edges straight from Var(x) n Var(y) != empty.
inline std::set<std::pair<Vertex, Vertex>> rel_edges(const lrmt::VariableGraph& g)
{
    std::set<std::pair<Vertex, Vertex>> out;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y = 0; y < g.vertex_count(); ++y) {
            for (Vertex v : g.var(x)) {
                if (std::find(g.var(y).begin(), g.var(y).end(), v) != g.var(y).end()) {
                    out.insert({x, y});
                    break;
                }
            }
        }
    }
    return out;
}

/// Neighbours of x in label order: by the position in Var(x) of the least
/// shared variable, then by position in Cl of that variable.
inline std::vector<Vertex> rel_label_order(const lrmt::VariableGraph& g, Vertex x)
{
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vertex>> keyed;
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
        auto vx = g.var(x);
        for (std::size_t i = 0; i < vx.size(); ++i) {
            auto vy = g.var(y);
            if (std::find(vy.begin(), vy.end(), vx[i]) != vy.end()) {
                auto cl = g.cl(vx[i]);
                auto j = static_cast<std::size_t>(std::find(cl.begin(), cl.end(), y) - cl.begin());
                keyed.push_back({{i, j}, y});
                break;
            }
        }
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Vertex> out;
    for (auto& k : keyed) {
        out.push_back(k.second);
    }
    return out;
}

inline constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();

/// All-pairs distances by Floyd-Warshall on an undirected adjacency list.
inline std::vector<std::vector<std::uint32_t>> all_distances(const std::vector<std::vector<Vertex>>& adj)
{
    const auto n = adj.size();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (Vertex j : adj[i]) {
            if (j != i) {
                d[i][j] = 1;
                d[j][i] = 1;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (d[i][k] != inf && d[k][j] != inf && d[i][k] + d[k][j] < d[i][j]) {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    return d;
}

/// Undirected adjacency of the oriented graph (edges x->y for y in Var(x)).
inline std::vector<std::vector<Vertex>> undirected(const lrmt::VariableGraph& g)
{
    std::vector<std::vector<Vertex>> adj(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y : g.var(x)) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
    }
    return adj;
}

/// Every ball of radius r meets every part at most once.
inline bool sparse(const std::vector<std::vector<std::uint32_t>>& d, const std::vector<std::uint32_t>& part_of,
                   std::uint32_t r)
{
    const auto n = d.size();
    for (std::size_t x = 0; x < n; ++x) {
        std::map<std::uint32_t, std::size_t> seen;
        for (std::size_t y = 0; y < n; ++y) {
            if (d[x][y] <= r && ++seen[part_of[y]] > 1) {
                return false;
            }
        }
    }
    return true;
}

/// S is independent in the edge set (loops ignored) and maximal inside X.
inline bool maximal_independent(const std::set<std::pair<Vertex, Vertex>>& edges, const std::vector<Vertex>& X,
                                const std::vector<Vertex>& S)
{
    auto adj = [&](Vertex a, Vertex b) { return a != b && (edges.count({a, b}) > 0 || edges.count({b, a}) > 0); };
    for (Vertex a : S) {
        if (std::find(X.begin(), X.end(), a) == X.end()) {
            return false;
        }
        for (Vertex b : S) {
            if (adj(a, b)) {
                return false;
            }
        }
    }
    for (Vertex x : X) {
        if (std::find(S.begin(), S.end(), x) != S.end()) {
            continue;
        }
        if (std::none_of(S.begin(), S.end(), [&](Vertex s) { return adj(x, s); })) {
            return false;
        }
    }
    return true;
}

/// Whether Var(x) restricted from f is an allowed word, by scanning the allowed list.
inline bool satisfied_at(const lrmt::Instance& inst, const lrmt::Assignment& f, Vertex x)
{
    lrmt::Word w;
    for (Vertex v : inst.graph.var(x)) {
        w.push_back(f[v]);
    }
    for (const auto& a : inst.rule.allowed_words(x)) {
        if (a == w) {
            return true;
        }
    }
    return false;
}

/// A from-scratch run of the limited-randomness algorithm. Returns the
/// sequence of resample sets, the final assignment, the counters and the
/// digits consumed by each vertex.
struct NaiveRun {
    std::vector<std::vector<Vertex>> sets;
    lrmt::Assignment final;
    std::vector<std::uint32_t> counters;
    std::vector<lrmt::Word> consumed;
    bool satisfied = false;
};

inline NaiveRun naive_run(const lrmt::Instance& inst, const std::vector<std::uint32_t>& part_of,
                          const std::vector<Vertex>& order, lrmt::Assignment f, const lrmt::RandomTape& tape,
                          std::size_t steps, bool stop_when_satisfied)
{
    const auto n = inst.vertex_count();
    auto edges = rel_edges(inst.graph);
    NaiveRun run;
    run.counters.assign(n, 0);
    run.consumed.assign(n, {});
    for (std::size_t j = 0; j < steps; ++j) {
        std::vector<Vertex> bad;
        for (Vertex x = 0; x < n; ++x) {
            if (!satisfied_at(inst, f, x)) {
                bad.push_back(x);
            }
        }
        if (bad.empty() && stop_when_satisfied) {
            run.satisfied = true;
            break;
        }
        std::vector<Vertex> chosen;
        for (Vertex x : order) {
            if (std::find(bad.begin(), bad.end(), x) == bad.end()) {
                continue;
            }
            bool free = std::none_of(chosen.begin(), chosen.end(),
                                     [&](Vertex c) { return c != x && edges.count({c, x}) > 0; });
            if (free) {
                chosen.push_back(x);
            }
        }
        std::sort(chosen.begin(), chosen.end());
        std::set<Vertex> vars;
        for (Vertex c : chosen) {
            for (Vertex v : inst.graph.var(c)) {
                vars.insert(v);
            }
        }
        for (Vertex v : vars) {
            auto d = tape.at(part_of[v], run.counters[v]);
            f[v] = *d;
            run.consumed[v].push_back(*d);
            ++run.counters[v];
        }
        run.sets.push_back(chosen);
    }
    if (!run.satisfied) {
        run.satisfied = true;
        for (Vertex x = 0; x < n; ++x) {
            run.satisfied = run.satisfied && satisfied_at(inst, f, x);
        }
    }
    run.final = f;
    return run;
}

/// Delta-labelled rooted trees with exactly `n` vertices, generated as strings
/// (each vertex lists, for every label, either '.' or a child subtree).
inline std::vector<std::string> labelled_trees(unsigned delta, unsigned n)
{
    if (n == 0) {
        return {};
    }
    std::vector<std::vector<std::string>> by_size(n + 1);
    by_size[1] = {"(" + std::string(delta, '.') + ")"};
    for (unsigned size = 2; size <= n; ++size) {
        // Distribute size - 1 vertices over the delta slots.
        std::vector<std::string> out;
        std::vector<std::string> slots(delta);
        auto rec = [&](auto&& self, unsigned slot, unsigned left) -> void {
            if (slot == delta) {
                if (left == 0) {
                    std::string s = "(";
                    for (auto& x : slots) {
                        s += x;
                    }
                    out.push_back(s + ")");
                }
                return;
            }
            slots[slot] = ".";
            self(self, slot + 1, left);
            for (unsigned k = 1; k <= left; ++k) {
                for (const auto& t : by_size[k]) {
                    slots[slot] = t;
                    self(self, slot + 1, left - k);
                }
            }
        };
        rec(rec, 0, size - 1);
        by_size[size] = std::move(out);
    }
    return by_size[n];
}

/// (1 / (delta n + 1)) C(delta n + 1, n) with 128-bit arithmetic.
inline unsigned __int128 fuss_catalan(unsigned delta, unsigned n)
{
    unsigned __int128 c = 1;
    const unsigned top = delta * n + 1;
    for (unsigned i = 1; i <= n; ++i) {
        c = c * (top - n + i) / i;
    }
    return c / top;
}

}  // namespace oracle
