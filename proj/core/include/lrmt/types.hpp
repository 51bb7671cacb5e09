#pragma once

#include <cstdint>
#include <vector>

namespace lrmt {

using Vertex = std::uint32_t;
using Digit = std::uint8_t;

/// A base-b word; position i holds the value of the i-th vertex of an ordered list.
using Word = std::vector<Digit>;

/// A total function V(G) -> b.
using Assignment = std::vector<Digit>;

using VertexSet = std::vector<Vertex>;

}  // namespace lrmt
