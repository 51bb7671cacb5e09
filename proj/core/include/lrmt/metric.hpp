#pragma once

#include "lrmt/graph.hpp"
#include "lrmt/types.hpp"

#include <cstdint>
#include <limits>
#include <optional>

namespace lrmt {

inline constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

/// BFS distances from x, truncated at max_radius (farther vertices are `unreachable`).
std::vector<std::uint32_t> distances_from(const SymGraph& h, Vertex x,
                                          std::uint32_t max_radius = unreachable);

/// Graph distance, or nullopt when x and y lie in different components.
std::optional<std::uint32_t> graph_distance(const SymGraph& h, Vertex x, Vertex y);

/// B(x, r), ascending.
VertexSet ball(const SymGraph& h, Vertex x, std::uint32_t r);

/// F_{-i}: the x in F whose distance to every vertex outside F is at least i.
/// `F` must be sorted.
VertexSet interior(const SymGraph& h, const VertexSet& F, std::uint32_t i);

/// max_x |B(x, r)|.
std::size_t max_ball_size(const SymGraph& h, std::uint32_t r);

/// Graph on the same vertices joining distinct x, y with d(x, y) <= r.
SymGraph power_graph(const SymGraph& h, std::uint32_t r);

}  // namespace lrmt
