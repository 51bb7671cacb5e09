#include "lrmt/partition.hpp"

#include "lrmt/error.hpp"
#include "lrmt/metric.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lrmt {

Partition Partition::discrete(std::size_t vertex_count)
{
    Partition p;
    p.part_count = static_cast<std::uint32_t>(vertex_count);
    p.part_of.resize(vertex_count);
    std::iota(p.part_of.begin(), p.part_of.end(), 0U);
    return p;
}

Partition Partition::single(std::size_t vertex_count)
{
    Partition p;
    p.part_count = vertex_count == 0 ? 0 : 1;
    p.part_of.assign(vertex_count, 0);
    return p;
}

void Partition::validate(std::size_t vertex_count) const
{
    if (part_of.size() != vertex_count) {
        throw PreconditionError("partition covers " + std::to_string(part_of.size()) + " vertices, expected " +
                                std::to_string(vertex_count));
    }
    for (auto p : part_of) {
        if (p >= part_count) {
            throw PreconditionError("part index " + std::to_string(p) + " out of range");
        }
    }
}

std::vector<Vertex> index_order(std::size_t vertex_count)
{
    std::vector<Vertex> order(vertex_count);
    std::iota(order.begin(), order.end(), Vertex{0});
    return order;
}

void check_order(const std::vector<Vertex>& order, std::size_t vertex_count)
{
    if (order.size() != vertex_count) {
        throw PreconditionError("vertex order has the wrong length");
    }
    std::vector<std::uint8_t> seen(vertex_count, 0);
    for (Vertex v : order) {
        if (v >= vertex_count || seen[v]) {
            throw PreconditionError("vertex order is not a permutation");
        }
        seen[v] = 1;
    }
}

IndependenceFunction::IndependenceFunction(const SymGraph& h, std::vector<Vertex> order) :
    graph_(&h), order_(std::move(order))
{
    check_order(order_, h.vertex_count());
    rank_.resize(order_.size());
    for (std::uint32_t i = 0; i < order_.size(); ++i) {
        rank_[order_[i]] = i;
    }
}

VertexSet IndependenceFunction::select(std::span<const Vertex> candidates) const
{
    VertexSet sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    VertexSet chosen;
    std::vector<std::uint8_t> blocked(order_.size(), 0);
    for (Vertex x : sorted) {
        if (blocked[x]) {
            continue;
        }
        chosen.push_back(x);
        for (Vertex y : graph_->adj[x]) {
            blocked[y] = 1;
        }
    }
    return chosen;
}

VertexSet greedy_mis(const SymGraph& h, std::span<const Vertex> X, const std::vector<Vertex>& order)
{
    IndependenceFunction indep(h, order);
    auto out = indep.select(X);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_independent(const SymGraph& h, std::span<const Vertex> S)
{
    std::vector<std::uint8_t> in_s(h.vertex_count(), 0);
    for (Vertex v : S) {
        in_s[v] = 1;
    }
    for (Vertex v : S) {
        for (Vertex w : h.adj[v]) {
            if (w != v && in_s[w]) {
                return false;
            }
        }
    }
    return true;
}

bool is_maximal_independent(const SymGraph& h, std::span<const Vertex> X, std::span<const Vertex> S)
{
    if (!is_independent(h, S)) {
        return false;
    }
    std::vector<std::uint8_t> in_s(h.vertex_count(), 0);
    for (Vertex v : S) {
        in_s[v] = 1;
    }
    std::vector<std::uint8_t> in_x(h.vertex_count(), 0);
    for (Vertex v : X) {
        in_x[v] = 1;
    }
    for (Vertex v : S) {
        if (!in_x[v]) {
            return false;
        }
    }
    for (Vertex v : X) {
        if (in_s[v]) {
            continue;
        }
        bool dominated = false;
        for (Vertex w : h.adj[v]) {
            if (w != v && in_s[w]) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            return false;
        }
    }
    return true;
}

Partition sparse_partition(const SymGraph& h, std::uint32_t r)
{
    const std::size_t n = h.vertex_count();
    Partition pi;
    pi.part_of.assign(n, 0);
    if (n == 0) {
        return pi;
    }
    // Two points share a ball of radius r iff their distance is at most 2r.
    SymGraph power = power_graph(h, 2 * r);
    IndependenceFunction indep(power, index_order(n));
    std::vector<std::uint8_t> assigned(n, 0);
    VertexSet remaining = index_order(n);
    while (!remaining.empty()) {
        auto part = indep.select(remaining);
        for (Vertex v : part) {
            pi.part_of[v] = pi.part_count;
            assigned[v] = 1;
        }
        ++pi.part_count;
        std::erase_if(remaining, [&](Vertex v) { return assigned[v] != 0; });
    }
    return pi;
}

bool is_sparse(const SymGraph& h, const Partition& pi, std::uint32_t r)
{
    std::vector<std::size_t> stamp(pi.part_count, SIZE_MAX);
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
        for (Vertex y : ball(h, x, r)) {
            auto p = pi.part_of[y];
            if (stamp[p] == x) {
                return false;
            }
            stamp[p] = x;
        }
    }
    return true;
}

}  // namespace lrmt
