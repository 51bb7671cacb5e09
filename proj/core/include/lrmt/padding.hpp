#pragma once

#include "lrmt/instance.hpp"
#include "lrmt/partition.hpp"

#include <vector>

namespace lrmt {

/// An instance in which every x of X(G, R) reads exactly D variables.
struct PaddedSystem {
    Instance instance;
    Partition partition;
    std::vector<Vertex> order;
    std::size_t original_count = 0;  ///< vertices 0..original_count-1 are the original ones
    std::size_t width = 0;           ///< D
    /// For a dummy vertex v, dummy_owner[v - original_count] is the x it pads.
    std::vector<Vertex> dummy_owner;
};

/// Appends dummy variables (x, i), i = |Var(x)|..D-1, to Var(x) for every x in
/// X(G, R). Membership in R'(x) depends only on the original coordinates. The
/// dummy (x, i) with x in part j goes to the fresh part p + j * D + i.
/// Dummies follow the original vertices in the enumeration.
PaddedSystem pad_uniform(const Instance& inst, const Partition& pi, const std::vector<Vertex>& order,
                         std::size_t width);

/// pad_uniform with D = max |Var(x)| over X(G, R).
PaddedSystem pad_uniform(const Instance& inst, const Partition& pi, const std::vector<Vertex>& order);

}  // namespace lrmt
