#include "lrmt/metric.hpp"

#include <algorithm>
#include <deque>

namespace lrmt {

std::vector<std::uint32_t> distances_from(const SymGraph& h, Vertex x, std::uint32_t max_radius)
{
    std::vector<std::uint32_t> dist(h.vertex_count(), unreachable);
    std::deque<Vertex> queue;
    dist[x] = 0;
    queue.push_back(x);
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (dist[u] == max_radius) {
            continue;
        }
        for (Vertex w : h.adj[u]) {
            if (dist[w] == unreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<std::uint32_t> graph_distance(const SymGraph& h, Vertex x, Vertex y)
{
    auto d = distances_from(h, x)[y];
    if (d == unreachable) {
        return std::nullopt;
    }
    return d;
}

VertexSet ball(const SymGraph& h, Vertex x, std::uint32_t r)
{
    auto dist = distances_from(h, x, r);
    VertexSet out;
    for (Vertex v = 0; v < dist.size(); ++v) {
        if (dist[v] <= r) {
            out.push_back(v);
        }
    }
    return out;
}

VertexSet interior(const SymGraph& h, const VertexSet& F, std::uint32_t i)
{
    if (i == 0) {
        return F;
    }
    // Multi-source BFS from the complement of F, stopped at depth i - 1.
    std::vector<std::uint8_t> in_f(h.vertex_count(), 0);
    for (Vertex v : F) {
        in_f[v] = 1;
    }
    std::vector<std::uint32_t> dist(h.vertex_count(), unreachable);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (!in_f[v]) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (dist[u] + 1 >= i) {
            continue;
        }
        for (Vertex w : h.adj[u]) {
            if (dist[w] == unreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    VertexSet out;
    for (Vertex v : F) {
        if (dist[v] == unreachable) {
            out.push_back(v);
        }
    }
    return out;
}

std::size_t max_ball_size(const SymGraph& h, std::uint32_t r)
{
    std::size_t best = 0;
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
        auto dist = distances_from(h, x, r);
        best = std::max<std::size_t>(best, std::count_if(dist.begin(), dist.end(),
                                                         [&](std::uint32_t d) { return d <= r; }));
    }
    return best;
}

SymGraph power_graph(const SymGraph& h, std::uint32_t r)
{
    SymGraph p;
    p.adj.resize(h.vertex_count());
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
        auto dist = distances_from(h, x, r);
        for (Vertex y = 0; y < dist.size(); ++y) {
            if (y != x && dist[y] <= r) {
                p.adj[x].push_back(y);
            }
        }
    }
    return p;
}

}  // namespace lrmt
