#pragma once

#include "lrmt/graph.hpp"
#include "lrmt/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lrmt {

/// A total map vertex -> part index in [0, part_count). Parts may be empty.
struct Partition {
    std::uint32_t part_count = 0;
    std::vector<std::uint32_t> part_of;

    static Partition discrete(std::size_t vertex_count);
    static Partition single(std::size_t vertex_count);

    /// Throws PreconditionError if a part index is out of range.
    void validate(std::size_t vertex_count) const;
};

/// Greedy maximal independent subsets of a symmetric graph with respect to a
/// fixed enumeration of the vertices. Self-loops are ignored. Keeps a
/// pointer to `h`, which must outlive it.
class IndependenceFunction {
public:
    IndependenceFunction(const SymGraph& h, std::vector<Vertex> order);

    const std::vector<Vertex>& order() const { return order_; }

    /// Maximal independent subset of `candidates`, listed in enumeration order.
    VertexSet select(std::span<const Vertex> candidates) const;

private:
    const SymGraph* graph_;
    std::vector<Vertex> order_;
    std::vector<std::uint32_t> rank_;
};

/// The identity enumeration 0, 1, ..., n-1.
std::vector<Vertex> index_order(std::size_t vertex_count);

/// Throws PreconditionError unless `order` is a permutation of the vertices.
void check_order(const std::vector<Vertex>& order, std::size_t vertex_count);

/// I(X) for the greedy independence function given by `order`, ascending.
VertexSet greedy_mis(const SymGraph& h, std::span<const Vertex> X, const std::vector<Vertex>& order);

bool is_independent(const SymGraph& h, std::span<const Vertex> S);

/// Every vertex of X outside S has a neighbour in S (S must be a subset of X).
bool is_maximal_independent(const SymGraph& h, std::span<const Vertex> X, std::span<const Vertex> S);

/// Partition in which distinct points of every ball B(x, r) lie in distinct
/// parts. Built by repeatedly removing greedy maximal independent sets of
/// the graph joining points at distance <= 2r.
Partition sparse_partition(const SymGraph& h, std::uint32_t r);

/// Checks the r-sparseness predicate on every ball.
bool is_sparse(const SymGraph& h, const Partition& pi, std::uint32_t r);

}  // namespace lrmt
