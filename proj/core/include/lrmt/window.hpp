#pragma once

#include "lrmt/graph.hpp"
#include "lrmt/rational.hpp"

#include <cstdint>
#include <span>

namespace lrmt {

struct Window {
    Vertex center = 0;
    std::uint32_t radius = 0;
    VertexSet vertices;  ///< B(center, radius), ascending
};

/// Whether max_y |B(y, 3n)| < (1 + eps)^n.
bool growth_condition(const SymGraph& h, const Rational& eps, std::uint32_t n);

/// Least n >= 1 satisfying growth_condition, searching up to `max_n`.
/// Throws PreconditionError if none is found.
std::uint32_t default_window_n(const SymGraph& h, const Rational& eps, std::uint32_t max_n = 4096);

/// Least r in {3, ..., 3n} with sum_{B(y,r)} g < (1 + eps) sum_{B(y,r-3)} g
/// around y = argmax g (least index), or nullopt. No growth check.
std::optional<Window> scan_window(const SymGraph& h, std::span<const std::uint64_t> g, const Rational& eps,
                                  std::uint32_t n);

/// scan_window after checking that g is not identically zero and that the
/// growth condition holds for n; diagnostics name the offending ball.
Window find_window(const SymGraph& h, std::span<const std::uint64_t> g, const Rational& eps, std::uint32_t n);

}  // namespace lrmt
