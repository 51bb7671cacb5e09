#include "lrmt/graph.hpp"

#include "lrmt/error.hpp"

#include <algorithm>
#include <string>

namespace lrmt {

VariableGraph::VariableGraph(std::size_t vertex_count) : out_(vertex_count), in_(vertex_count) {}

VariableGraph VariableGraph::from_out_lists(std::vector<std::vector<Vertex>> out)
{
    VariableGraph g(out.size());
    for (Vertex x = 0; x < out.size(); ++x) {
        for (Vertex y : out[x]) {
            g.add_edge(x, y);
        }
    }
    return g;
}

VariableGraph VariableGraph::from_lists(std::vector<std::vector<Vertex>> out, std::vector<std::vector<Vertex>> in)
{
    if (out.size() != in.size()) {
        throw PreconditionError("out- and in-lists have different vertex counts");
    }
    VariableGraph g = from_out_lists(out);
    for (Vertex y = 0; y < in.size(); ++y) {
        auto expected = g.in_[y];
        auto given = in[y];
        std::sort(expected.begin(), expected.end());
        std::sort(given.begin(), given.end());
        if (expected != given) {
            throw PreconditionError("in-list of vertex " + std::to_string(y) + " does not match the out-lists");
        }
    }
    g.in_ = std::move(in);
    return g;
}

void VariableGraph::add_edge(Vertex x, Vertex y)
{
    if (x >= out_.size() || y >= out_.size()) {
        throw PreconditionError("edge endpoint out of range");
    }
    if (std::find(out_[x].begin(), out_[x].end(), y) != out_[x].end()) {
        throw PreconditionError("duplicate edge (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }
    out_[x].push_back(y);
    in_[y].push_back(x);
    ++edges_;
}

std::optional<std::size_t> VariableGraph::var_position(Vertex x, Vertex v) const
{
    auto it = std::find(out_[x].begin(), out_[x].end(), v);
    if (it == out_[x].end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - out_[x].begin());
}

VariableGraph VariableGraph::induced(std::span<const Vertex> keep) const
{
    std::vector<std::int64_t> local(out_.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        local[keep[i]] = static_cast<std::int64_t>(i);
    }
    VariableGraph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (Vertex y : out_[keep[i]]) {
            if (local[y] >= 0) {
                h.out_[i].push_back(static_cast<Vertex>(local[y]));
                ++h.edges_;
            }
        }
        for (Vertex x : in_[keep[i]]) {
            if (local[x] >= 0) {
                h.in_[i].push_back(static_cast<Vertex>(local[x]));
            }
        }
    }
    return h;
}

bool SymGraph::has_edge(Vertex x, Vertex y) const
{
    const auto& a = adj[x];
    return std::find(a.begin(), a.end(), y) != a.end();
}

SymGraph symmetrize(const VariableGraph& g)
{
    SymGraph h;
    h.adj.resize(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y : g.var(x)) {
            if (x == y) {
                continue;
            }
            h.adj[x].push_back(y);
            h.adj[y].push_back(x);
        }
    }
    for (auto& list : h.adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return h;
}

std::optional<std::size_t> RelGraph::label(Vertex x, Vertex y) const
{
    auto n = neighbours(x);
    auto it = std::find(n.begin(), n.end(), y);
    if (it == n.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - n.begin());
}

std::size_t RelGraph::max_degree() const
{
    std::size_t d = 0;
    for (const auto& a : graph_.adj) {
        d = std::max(d, a.size());
    }
    return d;
}

RelGraph build_rel(const VariableGraph& g)
{
    // Scanning Var(x) in order and then Cl(v) in order meets every neighbour
    // first at its least shared variable, which is exactly the label order.
    SymGraph h;
    h.adj.resize(g.vertex_count());
    std::vector<std::size_t> seen(g.vertex_count(), SIZE_MAX);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex v : g.var(x)) {
            for (Vertex y : g.cl(v)) {
                if (seen[y] != x) {
                    seen[y] = x;
                    h.adj[x].push_back(y);
                }
            }
        }
    }
    return RelGraph(std::move(h));
}

}  // namespace lrmt
