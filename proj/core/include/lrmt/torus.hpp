#pragma once

#include "lrmt/instance.hpp"
#include "lrmt/rational.hpp"

#include <cstdint>
#include <vector>

namespace lrmt {

/// Colour the discrete torus so that every translate x + T sees all b colours.
struct TorusSpec {
    std::vector<std::uint32_t> sides;                 ///< side length per axis
    std::vector<std::vector<std::int64_t>> translates;  ///< T, in the order used for Var(x)
    unsigned colors = 2;

    std::size_t dimension() const { return sides.size(); }
    std::size_t point_count() const;

    /// Throws PreconditionError on malformed data, colliding translates, or
    /// more colours than translates.
    void validate() const;
};

/// Point index is mixed-radix with axis 0 most significant.
std::vector<std::uint32_t> torus_coords(const TorusSpec& s, Vertex v);
Vertex torus_vertex(const TorusSpec& s, const std::vector<std::int64_t>& coords);

Instance torus_instance(const TorusSpec& s);

/// Both sides of b (1 - 1/b)^|T| < 1 / (e |T|^2), with e over-approximated.
struct TorusCondition {
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

TorusCondition torus_condition(const TorusSpec& s);

/// d-dimensional torus with side m and the first `count` offsets of the
/// box {0, 1, 2, ...}^d in lexicographic order.
TorusSpec box_torus(std::size_t dimension, std::uint32_t side, std::size_t count, unsigned colors);

}  // namespace lrmt
