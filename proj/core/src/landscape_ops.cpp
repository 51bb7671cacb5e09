#include "lrmt/landscape_ops.hpp"

#include "lrmt/error.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace lrmt {

namespace {

std::uint64_t node_key(std::uint32_t level, Vertex base)
{
    return (std::uint64_t{level} << 32) | base;
}

/// Lookup (level, base) -> node index.
class NodeIndex {
public:
    explicit NodeIndex(const DecoratedLandscape& L)
    {
        for (std::size_t i = 0; i < L.nodes.size(); ++i) {
            map_.emplace(node_key(L.nodes[i].level, L.nodes[i].base), i);
        }
    }

    std::optional<std::size_t> find(std::uint32_t level, Vertex base) const
    {
        auto it = map_.find(node_key(level, base));
        if (it == map_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

private:
    std::unordered_map<std::uint64_t, std::size_t> map_;
};

void check_index(const DecoratedLandscape& L, std::size_t i)
{
    if (i >= L.nodes.size()) {
        throw PreconditionError("node index out of range");
    }
}

/// Canvas predecessors of node u (nodes one level down over a Rel-neighbour).
template <class Fn>
void for_each_predecessor(const DecoratedLandscape& L, const NodeIndex& index, std::size_t u, Fn&& fn)
{
    const auto& node = L.nodes[u];
    if (node.level == 0) {
        return;
    }
    for (Vertex w : L.rel.neighbours(node.base)) {
        if (auto p = index.find(node.level - 1, w)) {
            fn(*p);
        }
    }
}

bool tree_pushable(const DecoratedLandscape& L, const NodeIndex& index, const std::vector<std::size_t>& root_of,
                   std::size_t root)
{
    if (L.nodes[root].level == 0) {
        return false;
    }
    for (std::size_t u = 0; u < L.nodes.size(); ++u) {
        if (root_of[u] != root) {
            continue;
        }
        bool entered = false;
        for_each_predecessor(L, index, u, [&](std::size_t p) { entered = entered || root_of[p] != root; });
        if (entered) {
            return false;
        }
        // Lowering the tree must not land a node on an occupied position.
        if (auto other = index.find(L.nodes[u].level - 1, L.nodes[u].base); other && root_of[*other] != root) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_pushable(const DecoratedLandscape& L)
{
    return std::all_of(L.nodes.begin(), L.nodes.end(), [](const ForestNode& n) { return n.level > 0; });
}

bool is_pushable_tree(const DecoratedLandscape& L, std::size_t root)
{
    check_index(L, root);
    if (L.nodes[root].parent != no_parent) {
        throw PreconditionError("node is not a root");
    }
    return tree_pushable(L, NodeIndex(L), L.roots_of(), root);
}

bool is_rebranchable(const DecoratedLandscape& L, std::size_t x, std::size_t y, std::size_t z)
{
    check_index(L, x);
    check_index(L, y);
    check_index(L, z);
    return x != y && y != z && x != z && L.nodes[z].parent == static_cast<std::int32_t>(x) && canvas_edge(L, y, z);
}

bool is_joinable(const DecoratedLandscape& L, std::size_t y, std::size_t z)
{
    check_index(L, y);
    check_index(L, z);
    return y != z && L.nodes[z].parent == no_parent && canvas_edge(L, y, z);
}

bool is_rebranchable_tree(const DecoratedLandscape& L, std::size_t root)
{
    check_index(L, root);
    NodeIndex index(L);
    auto root_of = L.roots_of();
    for (std::size_t z = 0; z < L.nodes.size(); ++z) {
        if (root_of[z] != root || L.nodes[z].parent == no_parent) {
            continue;
        }
        auto x = static_cast<std::size_t>(L.nodes[z].parent);
        bool found = false;
        for_each_predecessor(L, index, z, [&](std::size_t y) { found = found || y != x; });
        if (found) {
            return true;
        }
    }
    return false;
}

bool is_joinable_tree(const DecoratedLandscape& L, std::size_t root)
{
    check_index(L, root);
    bool found = false;
    for_each_predecessor(L, NodeIndex(L), root, [&](std::size_t y) { found = found || y != root; });
    return found;
}

DecoratedLandscape push_all(const DecoratedLandscape& L)
{
    if (!is_pushable(L)) {
        throw PreconditionError("push_all: landscape is not pushable (a node is at level 0)");
    }
    auto K = L;
    for (auto& n : K.nodes) {
        --n.level;
    }
    return K;
}

DecoratedLandscape push_tree(const DecoratedLandscape& L, std::size_t root)
{
    if (!is_pushable_tree(L, root)) {
        throw PreconditionError("push_tree: tree is not pushable");
    }
    auto root_of = L.roots_of();
    auto K = L;
    for (std::size_t u = 0; u < K.nodes.size(); ++u) {
        if (root_of[u] == root) {
            --K.nodes[u].level;
        }
    }
    return K;
}

DecoratedLandscape rebranch(const DecoratedLandscape& L, std::size_t x, std::size_t y, std::size_t z)
{
    if (!is_rebranchable(L, x, y, z)) {
        throw PreconditionError("rebranch: triple is not rebranchable");
    }
    auto K = L;
    K.nodes[z].parent = static_cast<std::int32_t>(y);
    return K;
}

DecoratedLandscape join(const DecoratedLandscape& L, std::size_t y, std::size_t z)
{
    if (!is_joinable(L, y, z)) {
        throw PreconditionError("join: pair is not joinable");
    }
    auto K = L;
    K.nodes[z].parent = static_cast<std::int32_t>(y);
    return K;
}

std::string GroundOp::describe() const
{
    std::ostringstream out;
    switch (kind) {
    case Kind::push_all:
        out << "push_all";
        break;
    case Kind::push_tree:
        out << "push_tree " << a;
        break;
    case Kind::rebranch:
        out << "rebranch " << a << ' ' << b << ' ' << c;
        break;
    case Kind::join:
        out << "join " << a << ' ' << b;
        break;
    }
    return out.str();
}

std::size_t ground_guard(const DecoratedLandscape& L)
{
    std::size_t levels = 0;
    for (const auto& n : L.nodes) {
        levels += n.level;
    }
    const std::size_t n2 = L.nodes.size();
    return 2 * (n2 + 1) * (n2 + levels + 1);
}

GroundResult ground(const DecoratedLandscape& L)
{
    validate_landscape(L);
    GroundResult res;
    res.landscape = L;
    auto& K = res.landscape;
    const std::size_t guard = ground_guard(L);
    auto key = [&](std::size_t i) { return node_key(K.nodes[i].level, K.nodes[i].base); };

    while (!K.grounded()) {
        if (res.log.size() >= guard) {
            std::string ops;
            for (const auto& op : res.log) {
                ops += "\n  " + op.describe();
            }
            throw InternalError("grounding exceeded its guard of " + std::to_string(guard) + " operations:" + ops);
        }
        NodeIndex index(K);
        auto root_of = K.roots_of();
        auto roots = K.roots();
        std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

        // (1) join
        bool done = false;
        for (auto z : roots) {
            std::optional<std::size_t> best;
            for_each_predecessor(K, index, z, [&](std::size_t y) {
                if (y != z && (!best || K.nodes[y].base < K.nodes[*best].base)) {
                    best = y;
                }
            });
            if (best) {
                K.nodes[z].parent = static_cast<std::int32_t>(*best);
                res.log.push_back({GroundOp::Kind::join, *best, z, 0});
                done = true;
                break;
            }
        }
        if (done) {
            continue;
        }
        // (2) push a pushable tree
        for (auto r : roots) {
            if (tree_pushable(K, index, root_of, r)) {
                for (std::size_t u = 0; u < K.nodes.size(); ++u) {
                    if (root_of[u] == r) {
                        --K.nodes[u].level;
                    }
                }
                res.log.push_back({GroundOp::Kind::push_tree, r, 0, 0});
                done = true;
                break;
            }
        }
        if (done) {
            continue;
        }
        // (3) push everything
        if (is_pushable(K)) {
            for (auto& n : K.nodes) {
                --n.level;
            }
            res.log.push_back({GroundOp::Kind::push_all, 0, 0, 0});
            continue;
        }
        // (4) move a subtree out of the least tree above level 0
        std::optional<std::size_t> found;
        for (auto r : roots) {
            if (K.nodes[r].level > 0) {
                found = r;
                break;
            }
        }
        if (!found) {
            throw InternalError("ungrounded landscape without a tree above level 0");
        }
        const std::size_t focus = *found;
        using Choice = std::tuple<int, std::uint32_t, Vertex, Vertex, std::size_t, std::size_t>;
        std::optional<Choice> best;
        for (std::size_t z = 0; z < K.nodes.size(); ++z) {
            if (root_of[z] != focus || K.nodes[z].parent == no_parent) {
                continue;
            }
            for_each_predecessor(K, index, z, [&](std::size_t y) {
                if (root_of[y] == focus) {
                    return;
                }
                Choice c{K.nodes[root_of[y]].level == 0 ? 0 : 1, K.nodes[z].level, K.nodes[z].base, K.nodes[y].base, y,
                         z};
                if (!best || c < *best) {
                    best = c;
                }
            });
        }
        if (!best) {
            throw InternalError("no operation applies to an ungrounded landscape");
        }
        auto y = std::get<4>(*best);
        auto z = std::get<5>(*best);
        auto x = static_cast<std::size_t>(K.nodes[z].parent);
        K.nodes[z].parent = static_cast<std::int32_t>(y);
        res.log.push_back({GroundOp::Kind::rebranch, x, y, z});
    }
    validate_landscape(K);
    return res;
}

}  // namespace lrmt
