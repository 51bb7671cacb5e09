#include "lrmt/landscape.hpp"

#include "lrmt/error.hpp"
#include "lrmt/trace_io.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_map>

namespace lrmt {

namespace {

std::uint64_t node_key(std::uint32_t level, Vertex base)
{
    return (std::uint64_t{level} << 32) | base;
}

}  // namespace

std::uint32_t DecoratedLandscape::height() const
{
    std::uint32_t h = 0;
    for (const auto& n : nodes) {
        h = std::max(h, n.level + 1);
    }
    return h;
}

std::vector<std::size_t> DecoratedLandscape::roots_of() const
{
    std::vector<std::size_t> root(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::size_t r = i;
        std::size_t guard = 0;
        while (nodes[r].parent != no_parent) {
            r = static_cast<std::size_t>(nodes[r].parent);
            if (++guard > nodes.size()) {
                throw InternalError("cycle in landscape forest");
            }
        }
        root[i] = r;
    }
    return root;
}

std::vector<std::size_t> DecoratedLandscape::roots() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].parent == no_parent) {
            out.push_back(i);
        }
    }
    return out;
}

bool DecoratedLandscape::grounded() const
{
    return std::all_of(nodes.begin(), nodes.end(),
                       [](const ForestNode& n) { return n.parent != no_parent || n.level == 0; });
}

void DecoratedLandscape::canonicalize()
{
    std::vector<std::size_t> order(nodes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return node_key(nodes[a].level, nodes[a].base) < node_key(nodes[b].level, nodes[b].base);
    });
    std::vector<std::int32_t> new_index(nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_index[order[i]] = static_cast<std::int32_t>(i);
    }
    std::vector<ForestNode> sorted;
    sorted.reserve(nodes.size());
    for (auto i : order) {
        auto n = nodes[i];
        if (n.parent != no_parent) {
            n.parent = new_index[static_cast<std::size_t>(n.parent)];
        }
        sorted.push_back(std::move(n));
    }
    nodes = std::move(sorted);
}

bool DecoratedLandscape::same_as(const DecoratedLandscape& other) const
{
    auto a = *this;
    auto b = other;
    a.canonicalize();
    b.canonicalize();
    bool same_base = (a.base == b.base) || (a.base && b.base && a.base->graph == b.base->graph &&
                                            a.base->rule == b.base->rule);
    return same_base && a.nodes == b.nodes && a.final == b.final && a.part == b.part && a.relaxed == b.relaxed;
}

bool canvas_edge(const DecoratedLandscape& L, std::size_t x, std::size_t y)
{
    const auto& a = L.nodes[x];
    const auto& b = L.nodes[y];
    return a.level + 1 == b.level && L.rel.adjacent(a.base, b.base);
}

std::optional<std::string> check_landscape(const DecoratedLandscape& L)
{
    if (!L.base) {
        return L.nodes.empty() ? std::nullopt : std::optional<std::string>("forest without a base graph");
    }
    const auto& inst = *L.base;
    const auto n = inst.vertex_count();
    if (L.final.size() != n || L.part.size() != n || L.relaxed.size() != n || L.origin.size() != n) {
        return "decoration sizes differ from the vertex count";
    }
    for (auto d : L.final) {
        if (d >= inst.alphabet()) {
            return "Final takes a value outside the alphabet";
        }
    }
    std::unordered_map<std::uint64_t, std::size_t> at;
    std::vector<std::vector<std::size_t>> by_level(L.height());
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
        const auto& node = L.nodes[i];
        auto tag = "node (" + std::to_string(node.base) + ", " + std::to_string(node.level) + ")";
        if (node.base >= n) {
            return tag + " has an out-of-range base";
        }
        if (!at.emplace(node_key(node.level, node.base), i).second) {
            return tag + " occurs twice";
        }
        by_level[node.level].push_back(i);
        if (node.prev.size() != inst.graph.var(node.base).size()) {
            return tag + " has a Prev word of the wrong length";
        }
        for (auto d : node.prev) {
            if (d >= inst.alphabet()) {
                return tag + " has a Prev digit outside the alphabet";
            }
        }
        if (!L.relaxed[node.base] && inst.rule.allows(node.base, node.prev)) {
            return tag + " has a Prev word that the rule allows";
        }
        if (node.parent != no_parent) {
            auto p = static_cast<std::size_t>(node.parent);
            if (p >= L.nodes.size()) {
                return tag + " has an out-of-range parent";
            }
            if (!canvas_edge(L, p, i)) {
                return tag + " hangs from a node that is not a Canvas predecessor";
            }
        }
    }
    for (const auto& level : by_level) {
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                const auto& x = L.nodes[level[a]];
                const auto& y = L.nodes[level[b]];
                if (L.rel.adjacent(x.base, y.base)) {
                    return "nodes (" + std::to_string(x.base) + ", " + std::to_string(x.level) + ") and (" +
                           std::to_string(y.base) + ", " + std::to_string(y.level) + ") are at Rel-distance 1";
                }
            }
        }
    }
    return std::nullopt;
}

void validate_landscape(const DecoratedLandscape& L)
{
    if (auto problem = check_landscape(L)) {
        throw InternalError("invalid landscape: " + *problem);
    }
}

LandscapeType landscape_type(const DecoratedLandscape& L)
{
    LandscapeType t;
    if (!L.base) {
        return t;
    }
    const auto& inst = *L.base;
    t.N1 = inst.vertex_count();
    t.N2 = L.nodes.size();
    t.delta = L.rel.max_degree();
    for (Vertex x = 0; x < inst.vertex_count(); ++x) {
        t.D = std::max(t.D, inst.graph.var(x).size());
        t.beta = std::max(t.beta, inst.rule.forbidden_count(x));
        t.p = std::max(t.p, L.part[x] + 1);
    }
    return t;
}

bool has_type(const DecoratedLandscape& L, const LandscapeType& t)
{
    auto u = landscape_type(L);
    return u.D <= t.D && u.delta <= t.delta && u.beta <= t.beta && u.N1 <= t.N1 && u.N2 == t.N2 && u.p <= t.p;
}

DecoratedLandscape extract_landscape(const Engine& engine, const RunTrace& trace)
{
    const auto& inst = engine.instance();
    const auto n = inst.vertex_count();
    DecoratedLandscape L;
    L.base = engine.instance_ptr();
    L.rel = engine.rel();
    L.final = trace.final.assignment;
    L.part = engine.partition().part_of;
    L.origin.resize(n);
    std::iota(L.origin.begin(), L.origin.end(), Vertex{0});
    L.relaxed.assign(n, 0);

    std::vector<std::int64_t> prev_level(n, -1);  // node index of (v, i - 1), if any
    std::vector<std::int64_t> this_level(n, -1);
    for (std::size_t i = 0; i < trace.steps(); ++i) {
        const auto& S = trace.resample_sets[i];
        for (std::size_t a = 0; a < S.size(); ++a) {
            ForestNode node;
            node.base = S[a];
            node.level = static_cast<std::uint32_t>(i);
            node.prev = trace.violating_words[i][a];
            if (i > 0) {
                std::int64_t best = -1;
                for (Vertex w : L.rel.neighbours(S[a])) {
                    if (prev_level[w] >= 0 && (best < 0 || w < L.nodes[static_cast<std::size_t>(best)].base)) {
                        best = prev_level[w];
                    }
                }
                if (best < 0) {
                    throw InternalError("resampled vertex " + std::to_string(S[a]) + " at step " + std::to_string(i) +
                                        " has no Rel-neighbour resampled at the previous step");
                }
                node.parent = static_cast<std::int32_t>(best);
            }
            this_level[S[a]] = static_cast<std::int64_t>(L.nodes.size());
            L.nodes.push_back(std::move(node));
        }
        if (i > 0) {
            for (Vertex v : trace.resample_sets[i - 1]) {
                prev_level[v] = -1;
            }
        }
        for (Vertex v : S) {
            prev_level[v] = this_level[v];
            this_level[v] = -1;
        }
    }
    validate_landscape(L);
    return L;
}

std::vector<Word> asgn_seq(const DecoratedLandscape& L)
{
    const auto n = L.vertex_count();
    std::vector<Word> seq(n);
    if (L.nodes.empty()) {
        return seq;
    }
    const auto& g = L.base->graph;
    std::vector<std::vector<std::size_t>> by_level(L.height());
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
        by_level[L.nodes[i].level].push_back(i);
    }
    Assignment asgn = L.final;
    std::vector<std::size_t> stamp(n, SIZE_MAX);
    // Walking down from Asgn_k: at level i - 1 each variable of a node first
    // contributes Asgn_i to its Seq (collected in reverse), then takes Prev.
    for (std::size_t i = by_level.size(); i-- > 0;) {
        for (auto idx : by_level[i]) {
            const auto& node = L.nodes[idx];
            auto vars = g.var(node.base);
            for (std::size_t j = 0; j < vars.size(); ++j) {
                Vertex v = vars[j];
                if (stamp[v] == i) {
                    throw InternalError("two nodes at level " + std::to_string(i) + " share variable " +
                                        std::to_string(v));
                }
                stamp[v] = i;
                seq[v].push_back(asgn[v]);
                asgn[v] = node.prev[j];
            }
        }
    }
    for (auto& s : seq) {
        std::reverse(s.begin(), s.end());
    }
    return seq;
}

DecoratedLandscape restrict_landscape(const DecoratedLandscape& L, const VertexSet& keep)
{
    if (!std::is_sorted(keep.begin(), keep.end()) || std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw PreconditionError("restriction vertex set must be sorted and duplicate-free");
    }
    const auto& G = L.base->graph;
    const auto& R = L.base->rule;
    std::vector<std::int64_t> local(L.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= L.vertex_count()) {
            throw PreconditionError("restriction vertex out of range");
        }
        local[keep[i]] = static_cast<std::int64_t>(i);
    }
    auto inst = std::make_shared<Instance>();
    inst->graph = G.induced(keep);
    inst->rule = LocalRule(R.alphabet(), inst->graph);

    DecoratedLandscape K;
    K.relaxed.assign(keep.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        Vertex x = keep[i];
        auto lx = static_cast<Vertex>(i);
        if (inst->graph.var(lx).size() != G.var(x).size()) {
            K.relaxed[i] = 1;
            continue;
        }
        K.relaxed[i] = L.relaxed[x];
        for (std::uint64_t code = 0; code < R.word_count(x); ++code) {
            if (!R.allows_code(x, code)) {
                inst->rule.set(lx, inst->rule.decode(lx, code), false);
            }
        }
    }
    K.base = inst;
    K.rel = build_rel(inst->graph);
    for (Vertex x : keep) {
        K.final.push_back(L.final[x]);
        K.part.push_back(L.part[x]);
        K.origin.push_back(L.origin[x]);
    }

    std::vector<std::int32_t> new_index(L.nodes.size(), no_parent);
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
        const auto& node = L.nodes[i];
        if (local[node.base] < 0) {
            continue;
        }
        // A node whose variables all fall outside is isolated in Rel(H) and
        // contributes nothing to Asgn or Seq; keeping it can block grounding.
        if (!G.var(node.base).empty() && inst->graph.var(static_cast<Vertex>(local[node.base])).empty()) {
            continue;
        }
        ForestNode m;
        m.base = static_cast<Vertex>(local[node.base]);
        m.level = node.level;
        auto vars = G.var(node.base);
        for (std::size_t j = 0; j < vars.size(); ++j) {
            if (local[vars[j]] >= 0) {
                m.prev.push_back(node.prev[j]);
            }
        }
        new_index[i] = static_cast<std::int32_t>(K.nodes.size());
        K.nodes.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
        if (new_index[i] == no_parent || L.nodes[i].parent == no_parent) {
            continue;
        }
        auto p = new_index[static_cast<std::size_t>(L.nodes[i].parent)];
        if (p == no_parent) {
            continue;
        }
        auto& child = K.nodes[static_cast<std::size_t>(new_index[i])];
        if (K.rel.adjacent(K.nodes[static_cast<std::size_t>(p)].base, child.base)) {
            child.parent = p;
        }
    }
    validate_landscape(K);
    return K;
}

bool is_faithful_at(const DecoratedLandscape& L, const VertexSet& keep, Vertex x)
{
    const auto& G = L.base->graph;
    auto in_keep = [&](Vertex v) { return std::binary_search(keep.begin(), keep.end(), v); };
    if (!in_keep(x)) {
        return false;
    }
    for (Vertex y : G.cl(x)) {
        if (!in_keep(y)) {
            return false;
        }
        for (Vertex v : G.var(y)) {
            if (!in_keep(v)) {
                return false;
            }
        }
    }
    return true;
}

nlohmann::ordered_json landscape_to_json(const DecoratedLandscape& L)
{
    nlohmann::ordered_json j;
    j["format"] = "lrmt-landscape/1";
    j["vertices"] = L.vertex_count();
    j["height"] = L.height();
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& n : L.nodes) {
        nlohmann::ordered_json node;
        node["base"] = L.origin.empty() ? n.base : L.origin[n.base];
        node["level"] = n.level;
        node["parent"] = n.parent;
        std::string prev;
        for (auto d : n.prev) {
            prev += std::to_string(d);
            prev += ' ';
        }
        if (!prev.empty()) {
            prev.pop_back();
        }
        node["prev"] = prev;
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    std::vector<std::uint32_t> fin(L.final.begin(), L.final.end());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(counters_digest(fin)));
    j["final_digest"] = buf;
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(counters_digest(L.part)));
    j["part_digest"] = buf;
    return j;
}

}  // namespace lrmt
