#pragma once

#include "lrmt/graph.hpp"
#include "lrmt/rational.hpp"
#include "lrmt/rule.hpp"

#include <cstdint>

namespace lrmt {

/// A variable graph with a local rule on it.
struct Instance {
    VariableGraph graph;
    LocalRule rule;

    unsigned alphabet() const { return rule.alphabet(); }
    std::size_t vertex_count() const { return graph.vertex_count(); }

    /// Throws PreconditionError unless the rule's word lengths match |Var(x)|.
    void validate() const;
};

/// p(x) = 1 - |R(x)| / b^|Var(x)|, exactly.
Rational failure_prob(const Instance& inst, Vertex x);

/// The restriction of f to Var(x), in Var(x) order.
Word restrict_to_var(const VariableGraph& g, const Assignment& f, Vertex x);

/// B_R(f): vertices whose restriction of f is not allowed, ascending.
VertexSet violating_set(const Instance& inst, const Assignment& f);

/// X(G, R): vertices whose rule is not all-allowed, ascending.
VertexSet support_set(const Instance& inst);

struct InstanceParams {
    std::size_t max_var = 0;          ///< D: max |Var(x)| over X(G, R)
    std::size_t max_rel_degree = 0;   ///< Delta: max |N_Rel(x)|, self-loops counted
    std::uint64_t max_forbidden = 0;  ///< beta: max |R^c(x)|
    bool trivially_satisfiable = false;  ///< X(G, R) is empty
};

InstanceParams params(const Instance& inst, const RelGraph& rel);

/// Vertices whose allowed set is empty (no assignment can satisfy them).
VertexSet unsatisfiable_vertices(const Instance& inst);

}  // namespace lrmt
