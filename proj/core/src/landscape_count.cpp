#include "lrmt/landscape_count.hpp"

#include "lrmt/error.hpp"
#include "lrmt/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace lrmt {

namespace {

using Code = std::vector<std::int64_t>;

struct Node {
    Vertex base;
    std::uint32_t level;
    std::int64_t parent_base;  ///< -1 for roots
    std::uint32_t prev;        ///< code of the Prev word
};

/// All ordered lists of distinct vertices from n with length <= D.
std::vector<std::vector<Vertex>> ordered_lists(unsigned n, unsigned D)
{
    std::vector<std::vector<Vertex>> out{{}};
    std::vector<std::vector<Vertex>> frontier{{}};
    for (unsigned len = 1; len <= D; ++len) {
        std::vector<std::vector<Vertex>> next;
        for (const auto& l : frontier) {
            for (Vertex v = 0; v < n; ++v) {
                if (std::find(l.begin(), l.end(), v) == l.end()) {
                    auto m = l;
                    m.push_back(v);
                    next.push_back(m);
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::uint64_t power(std::uint64_t base, unsigned e)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

class Enumerator {
public:
    explicit Enumerator(const SmallLandscapeParams& prm) : prm_(prm) {}

    SmallLandscapeCount run()
    {
        for (unsigned n = 1; n <= prm_.N1 && result_.complete; ++n) {
            run_size(n);
        }
        result_.classes = classes_.size();
        return result_;
    }

private:
    void run_size(unsigned n)
    {
        n_ = n;
        perms_.clear();
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        do {
            perms_.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        auto lists = ordered_lists(n, prm_.D);
        std::vector<std::size_t> choice(n, 0);
        // Cartesian product of out-lists.
        for (;;) {
            out_.assign(n, {});
            for (unsigned v = 0; v < n; ++v) {
                out_[v] = lists[choice[v]];
            }
            with_graph();
            if (!result_.complete) {
                return;
            }
            unsigned v = 0;
            while (v < n && ++choice[v] == lists.size()) {
                choice[v++] = 0;
            }
            if (v == n) {
                break;
            }
        }
    }

    void with_graph()
    {
        std::vector<std::vector<Vertex>> in(n_);
        for (Vertex x = 0; x < n_; ++x) {
            for (Vertex y : out_[x]) {
                in[y].push_back(x);
            }
        }
        auto rel = build_rel(VariableGraph::from_out_lists(out_));
        if (rel.max_degree() > prm_.delta) {
            return;
        }
        rel_ = rel;
        // Every ordering of every Cl(v).
        in_ = in;
        for (auto& l : in_) {
            std::sort(l.begin(), l.end());
        }
        cl_orders(0);
    }

    void cl_orders(unsigned v)
    {
        if (!result_.complete) {
            return;
        }
        if (v == n_) {
            rules(0);
            return;
        }
        auto saved = in_[v];
        do {
            cl_orders(v + 1);
        } while (std::next_permutation(in_[v].begin(), in_[v].end()));
        in_[v] = saved;
    }

    void rules(unsigned v)
    {
        if (!result_.complete) {
            return;
        }
        if (v == 0) {
            forbidden_.assign(n_, 0);
        }
        if (v == n_) {
            forests();
            return;
        }
        auto words = power(prm_.b, static_cast<unsigned>(out_[v].size()));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << words); ++mask) {
            if (static_cast<unsigned>(__builtin_popcountll(mask)) > prm_.beta) {
                continue;
            }
            forbidden_[v] = mask;
            rules(v + 1);
        }
    }

    bool separated(const std::vector<Vertex>& level) const
    {
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t c = a + 1; c < level.size(); ++c) {
                if (rel_.adjacent(level[a], level[c])) {
                    return false;
                }
            }
        }
        return true;
    }

    void forests()
    {
        nodes_.clear();
        if (prm_.N2 == 0) {
            decorations();
            return;
        }
        grow(std::vector<Vertex>{}, 0, 0);
    }

    /// Chooses level `level` given the previous level's bases.
    void grow(const std::vector<Vertex>& below, std::uint32_t level, unsigned placed)
    {
        if (!result_.complete) {
            return;
        }
        if (placed == prm_.N2) {
            prevs(0);
            return;
        }
        // Candidate bases: a forbidden word exists, and at level > 0 a Rel-neighbour below.
        std::vector<Vertex> cand;
        for (Vertex v = 0; v < n_; ++v) {
            if (forbidden_[v] == 0) {
                continue;
            }
            if (level > 0 && std::none_of(below.begin(), below.end(), [&](Vertex w) { return rel_.adjacent(w, v); })) {
                continue;
            }
            cand.push_back(v);
        }
        const unsigned room = prm_.N2 - placed;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cand.size()); ++mask) {
            std::vector<Vertex> chosen;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                if (mask >> i & 1U) {
                    chosen.push_back(cand[i]);
                }
            }
            if (chosen.size() > room || !separated(chosen)) {
                continue;
            }
            assign_parents(chosen, below, level, placed, 0);
        }
    }

    void assign_parents(const std::vector<Vertex>& chosen, const std::vector<Vertex>& below, std::uint32_t level,
                        unsigned placed, std::size_t i)
    {
        if (i == chosen.size()) {
            grow(chosen, level + 1, placed + static_cast<unsigned>(chosen.size()));
            return;
        }
        if (level == 0) {
            nodes_.push_back({chosen[i], 0, -1, 0});
            assign_parents(chosen, below, level, placed, i + 1);
            nodes_.pop_back();
            return;
        }
        for (Vertex w : below) {
            if (rel_.adjacent(w, chosen[i])) {
                nodes_.push_back({chosen[i], level, static_cast<std::int64_t>(w), 0});
                assign_parents(chosen, below, level, placed, i + 1);
                nodes_.pop_back();
            }
        }
    }

    void prevs(std::size_t i)
    {
        if (!result_.complete) {
            return;
        }
        if (i == nodes_.size()) {
            decorations();
            return;
        }
        auto mask = forbidden_[nodes_[i].base];
        for (std::uint32_t code = 0; code < 64; ++code) {
            if (mask >> code & 1U) {
                nodes_[i].prev = code;
                prevs(i + 1);
            }
        }
    }

    void decorations()
    {
        const auto finals = power(prm_.b, n_);
        const auto parts = power(prm_.p, n_);
        std::vector<std::uint32_t> fin(n_);
        std::vector<std::uint32_t> pi(n_);
        for (std::uint64_t f = 0; f < finals; ++f) {
            auto t = f;
            for (unsigned v = 0; v < n_; ++v) {
                fin[v] = static_cast<std::uint32_t>(t % prm_.b);
                t /= prm_.b;
            }
            for (std::uint64_t q = 0; q < parts; ++q) {
                auto s = q;
                for (unsigned v = 0; v < n_; ++v) {
                    pi[v] = static_cast<std::uint32_t>(s % prm_.p);
                    s /= prm_.p;
                }
                if (++result_.labelled > prm_.budget) {
                    result_.complete = false;
                    return;
                }
                classes_.insert(canonical(fin, pi));
            }
        }
    }

    Code encode(const std::vector<Vertex>& sigma, const std::vector<std::uint32_t>& fin,
                const std::vector<std::uint32_t>& pi) const
    {
        std::vector<Vertex> inverse(n_);
        for (Vertex v = 0; v < n_; ++v) {
            inverse[sigma[v]] = v;
        }
        Code c;
        c.push_back(n_);
        for (Vertex u = 0; u < n_; ++u) {
            Vertex v = inverse[u];
            c.push_back(static_cast<std::int64_t>(out_[v].size()));
            for (Vertex w : out_[v]) {
                c.push_back(sigma[w]);
            }
            c.push_back(static_cast<std::int64_t>(in_[v].size()));
            for (Vertex w : in_[v]) {
                c.push_back(sigma[w]);
            }
            c.push_back(static_cast<std::int64_t>(forbidden_[v]));
            c.push_back(fin[v]);
            c.push_back(pi[v]);
        }
        std::vector<std::array<std::int64_t, 4>> mapped;
        for (const auto& nd : nodes_) {
            mapped.push_back({nd.level, sigma[nd.base], nd.parent_base < 0 ? -1 : sigma[static_cast<Vertex>(nd.parent_base)],
                              nd.prev});
        }
        std::sort(mapped.begin(), mapped.end());
        for (const auto& m : mapped) {
            c.insert(c.end(), m.begin(), m.end());
        }
        return c;
    }

    Code canonical(const std::vector<std::uint32_t>& fin, const std::vector<std::uint32_t>& pi) const
    {
        Code best;
        for (const auto& sigma : perms_) {
            auto c = encode(sigma, fin, pi);
            if (best.empty() || c < best) {
                best = std::move(c);
            }
        }
        return best;
    }

    const SmallLandscapeParams& prm_;
    SmallLandscapeCount result_;
    std::set<Code> classes_;
    unsigned n_ = 0;
    std::vector<std::vector<Vertex>> perms_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    RelGraph rel_;
    std::vector<std::uint64_t> forbidden_;
    std::vector<Node> nodes_;
};

}  // namespace

SmallLandscapeCount enumerate_small_landscapes(const SmallLandscapeParams& params)
{
    if (params.N1 > 4 || params.D > 3 || params.b < 1 || params.p < 1) {
        throw PreconditionError("parameters too large for exhaustive landscape enumeration");
    }
    if (power(params.b, params.D) > 6) {
        throw PreconditionError("b^D too large for exhaustive landscape enumeration");
    }
    return Enumerator(params).run();
}

}  // namespace lrmt
