#pragma once

#include "lrmt/types.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lrmt {

/// Oriented graph whose out-neighbourhoods Var(x) and in-neighbourhoods Cl(x)
/// are totally ordered lists. Edge (x, y) means y is a variable read by x.
///
/// Invariants: y is in Var(x) iff x is in Cl(y); no vertex repeats in a list
/// (so at most one self-loop per vertex). List order realises the well-orders
/// of the variable graph and is fixed by insertion order.
class VariableGraph {
public:
    VariableGraph() = default;
    explicit VariableGraph(std::size_t vertex_count);

    /// Builds from out-lists; Cl(y) is ordered by (x ascending, position in Var(x)).
    static VariableGraph from_out_lists(std::vector<std::vector<Vertex>> out);

    /// Builds from explicit out- and in-lists. Throws PreconditionError if they
    /// do not describe the same edge set.
    static VariableGraph from_lists(std::vector<std::vector<Vertex>> out, std::vector<std::vector<Vertex>> in);

    /// Appends y to Var(x) and x to Cl(y). Throws on a duplicate edge.
    void add_edge(Vertex x, Vertex y);

    std::size_t vertex_count() const { return out_.size(); }
    std::size_t edge_count() const { return edges_; }

    std::span<const Vertex> var(Vertex x) const { return out_[x]; }
    std::span<const Vertex> cl(Vertex x) const { return in_[x]; }

    /// Position of v in Var(x), if present.
    std::optional<std::size_t> var_position(Vertex x, Vertex v) const;

    const std::vector<std::vector<Vertex>>& out_lists() const { return out_; }
    const std::vector<std::vector<Vertex>>& in_lists() const { return in_; }

    /// Graph induced on `keep` (must be sorted, duplicate-free). Vertex i of the
    /// result is keep[i]; list orders are inherited.
    VariableGraph induced(std::span<const Vertex> keep) const;

    friend bool operator==(const VariableGraph&, const VariableGraph&) = default;

private:
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::size_t edges_ = 0;
};

/// Symmetric graph given by adjacency lists; self-loops may be present and are
/// ignored by distance computations and independence tests.
struct SymGraph {
    std::vector<std::vector<Vertex>> adj;

    std::size_t vertex_count() const { return adj.size(); }
    bool has_edge(Vertex x, Vertex y) const;
};

/// Symmetrisation of the oriented graph underlying `g` (no self-loops kept).
SymGraph symmetrize(const VariableGraph& g);

/// Rel(G) with its canonical edge labelling: neighbours(x)[label] is the
/// neighbour carrying that label. Labels at x order N(x) by the Var(x)-least
/// shared variable, ties broken by the order of Cl of that variable.
class RelGraph {
public:
    RelGraph() = default;
    explicit RelGraph(SymGraph graph) : graph_(std::move(graph)) {}

    std::size_t vertex_count() const { return graph_.adj.size(); }
    std::span<const Vertex> neighbours(Vertex x) const { return graph_.adj[x]; }
    bool adjacent(Vertex x, Vertex y) const { return graph_.has_edge(x, y); }
    std::optional<std::size_t> label(Vertex x, Vertex y) const;
    std::size_t max_degree() const;
    const SymGraph& graph() const { return graph_; }

private:
    SymGraph graph_;
};

RelGraph build_rel(const VariableGraph& g);

}  // namespace lrmt
