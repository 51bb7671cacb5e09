#include "lrmt/window.hpp"

#include "lrmt/error.hpp"
#include "lrmt/metric.hpp"

#include <algorithm>

namespace lrmt {

namespace {

/// Largest ball of radius r and its centre.
std::pair<std::size_t, Vertex> largest_ball(const SymGraph& h, std::uint32_t r)
{
    std::size_t best = 0;
    Vertex at = 0;
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
        auto size = ball(h, x, r).size();
        if (size > best) {
            best = size;
            at = x;
        }
    }
    return {best, at};
}

}  // namespace

bool growth_condition(const SymGraph& h, const Rational& eps, std::uint32_t n)
{
    return Rational(largest_ball(h, 3 * n).first) < rpow(1 + eps, n);
}

std::uint32_t default_window_n(const SymGraph& h, const Rational& eps, std::uint32_t max_n)
{
    if (eps <= 0) {
        throw PreconditionError("epsilon must be positive");
    }
    // Ball sizes are bounded by the vertex count, so the condition
    // eventually holds; skip ahead using the cheap bound first.
    const Rational total(h.vertex_count());
    for (std::uint32_t n = 1; n <= max_n; ++n) {
        Rational grow = rpow(1 + eps, n);
        if (total < grow) {
            return n;
        }
        if (Rational(largest_ball(h, 3 * n).first) < grow) {
            return n;
        }
    }
    throw PreconditionError("no window radius n <= " + std::to_string(max_n) + " satisfies the growth condition");
}

std::optional<Window> scan_window(const SymGraph& h, std::span<const std::uint64_t> g, const Rational& eps,
                                  std::uint32_t n)
{
    if (g.size() != h.vertex_count()) {
        throw PreconditionError("weight function has the wrong size");
    }
    Vertex y = static_cast<Vertex>(std::max_element(g.begin(), g.end()) - g.begin());
    auto dist = distances_from(h, y, 3 * n);
    // shell[r] = sum of g over vertices at distance exactly r
    std::vector<std::uint64_t> shell(3 * n + 1, 0);
    for (Vertex v = 0; v < dist.size(); ++v) {
        if (dist[v] <= 3 * n) {
            shell[dist[v]] += g[v];
        }
    }
    std::vector<std::uint64_t> cumulative(shell.size());
    std::uint64_t acc = 0;
    for (std::size_t r = 0; r < shell.size(); ++r) {
        acc += shell[r];
        cumulative[r] = acc;
    }
    for (std::uint32_t r = 3; r <= 3 * n; ++r) {
        if (Rational(cumulative[r]) < (1 + eps) * Rational(cumulative[r - 3])) {
            Window w;
            w.center = y;
            w.radius = r;
            for (Vertex v = 0; v < dist.size(); ++v) {
                if (dist[v] <= r) {
                    w.vertices.push_back(v);
                }
            }
            return w;
        }
    }
    return std::nullopt;
}

Window find_window(const SymGraph& h, std::span<const std::uint64_t> g, const Rational& eps, std::uint32_t n)
{
    if (n == 0) {
        throw PreconditionError("window search radius n must be positive");
    }
    if (g.size() != h.vertex_count() || std::all_of(g.begin(), g.end(), [](std::uint64_t v) { return v == 0; })) {
        throw PreconditionError("weight function is identically zero");
    }
    auto [size, at] = largest_ball(h, 3 * n);
    if (!(Rational(size) < rpow(1 + eps, n))) {
        throw PreconditionError("growth condition fails: |B(" + std::to_string(at) + ", " + std::to_string(3 * n) +
                                ")| = " + std::to_string(size) + " is not below (1 + eps)^" + std::to_string(n));
    }
    auto w = scan_window(h, g, eps, n);
    if (!w) {
        throw InternalError("no window found although the growth condition holds");
    }
    return *w;
}

}  // namespace lrmt
