#include "lrmt/torus.hpp"

#include "lrmt/error.hpp"

#include <cmath>
#include <string>

namespace lrmt {

std::size_t TorusSpec::point_count() const
{
    std::size_t n = 1;
    for (auto m : sides) {
        n *= m;
    }
    return n;
}

void TorusSpec::validate() const
{
    if (sides.empty()) {
        throw PreconditionError("torus needs at least one axis");
    }
    for (auto m : sides) {
        if (m == 0) {
            throw PreconditionError("torus side length must be positive");
        }
    }
    if (point_count() > (std::size_t{1} << 26)) {
        throw PreconditionError("torus too large");
    }
    if (translates.empty()) {
        throw PreconditionError("translate set T must be nonempty");
    }
    for (const auto& t : translates) {
        if (t.size() != sides.size()) {
            throw PreconditionError("translate has the wrong dimension");
        }
    }
    for (std::size_t i = 0; i < translates.size(); ++i) {
        for (std::size_t j = i + 1; j < translates.size(); ++j) {
            bool same = true;
            for (std::size_t a = 0; a < sides.size() && same; ++a) {
                auto m = static_cast<std::int64_t>(sides[a]);
                same = ((translates[i][a] - translates[j][a]) % m + m) % m == 0;
            }
            if (same) {
                throw PreconditionError("translates " + std::to_string(i) + " and " + std::to_string(j) +
                                        " coincide modulo the side lengths");
            }
        }
    }
    if (colors == 0 || colors > translates.size()) {
        throw PreconditionError("no surjection from " + std::to_string(translates.size()) + " translates onto " +
                                std::to_string(colors) + " colours");
    }
}

std::vector<std::uint32_t> torus_coords(const TorusSpec& s, Vertex v)
{
    std::vector<std::uint32_t> c(s.dimension());
    for (std::size_t a = s.dimension(); a-- > 0;) {
        c[a] = v % s.sides[a];
        v /= s.sides[a];
    }
    return c;
}

Vertex torus_vertex(const TorusSpec& s, const std::vector<std::int64_t>& coords)
{
    std::uint64_t v = 0;
    for (std::size_t a = 0; a < s.dimension(); ++a) {
        auto m = static_cast<std::int64_t>(s.sides[a]);
        v = v * s.sides[a] + static_cast<std::uint64_t>((coords[a] % m + m) % m);
    }
    return static_cast<Vertex>(v);
}

Instance torus_instance(const TorusSpec& s)
{
    s.validate();
    const std::size_t n = s.point_count();
    std::vector<std::vector<Vertex>> out(n);
    std::vector<std::int64_t> p(s.dimension());
    for (Vertex x = 0; x < n; ++x) {
        auto c = torus_coords(s, x);
        for (const auto& t : s.translates) {
            for (std::size_t a = 0; a < s.dimension(); ++a) {
                p[a] = static_cast<std::int64_t>(c[a]) + t[a];
            }
            out[x].push_back(torus_vertex(s, p));
        }
    }
    Instance inst{VariableGraph::from_out_lists(std::move(out)), {}};
    inst.rule = LocalRule(s.colors, inst.graph);
    if (n == 0) {
        return inst;
    }
    // Every vertex has the same word length, so compute the surjective codes once.
    std::vector<std::uint8_t> surjective(inst.rule.word_count(0));
    std::vector<std::uint8_t> hit(s.colors);
    for (std::uint64_t code = 0; code < surjective.size(); ++code) {
        std::fill(hit.begin(), hit.end(), 0);
        unsigned distinct = 0;
        for (auto d : inst.rule.decode(0, code)) {
            distinct += hit[d] == 0;
            hit[d] = 1;
        }
        surjective[code] = distinct == s.colors;
    }
    for (Vertex x = 0; x < n; ++x) {
        for (std::uint64_t code = 0; code < surjective.size(); ++code) {
            if (!surjective[code]) {
                inst.rule.set(x, inst.rule.decode(x, code), false);
            }
        }
    }
    return inst;
}

TorusCondition torus_condition(const TorusSpec& s)
{
    s.validate();
    TorusCondition c;
    const auto t = s.translates.size();
    c.lhs = Rational(s.colors) * rpow(Rational(s.colors - 1, s.colors), t);
    c.rhs = Rational(1) / (e_upper_bound() * Rational(t * t));
    c.holds = c.lhs < c.rhs;
    return c;
}

TorusSpec box_torus(std::size_t dimension, std::uint32_t side, std::size_t count, unsigned colors)
{
    TorusSpec s;
    s.sides.assign(dimension, side);
    s.colors = colors;
    std::size_t box = 1;
    while (static_cast<std::size_t>(std::pow(static_cast<double>(box), static_cast<double>(dimension)) + 0.5) < count) {
        ++box;
    }
    std::vector<std::int64_t> t(dimension, 0);
    while (s.translates.size() < count) {
        s.translates.push_back(t);
        std::size_t a = dimension;
        while (a-- > 0) {
            if (++t[a] < static_cast<std::int64_t>(box)) {
                break;
            }
            t[a] = 0;
        }
    }
    return s;
}

}  // namespace lrmt
