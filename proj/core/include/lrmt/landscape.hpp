#pragma once

#include "lrmt/engine.hpp"
#include "lrmt/instance.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lrmt {

inline constexpr std::int32_t no_parent = -1;

/// A vertex (base, level) of the forest together with its Prev word.
struct ForestNode {
    Vertex base = 0;
    std::uint32_t level = 0;
    std::int32_t parent = no_parent;  ///< index into DecoratedLandscape::nodes
    Word prev;                        ///< a forbidden word over Var(base)

    friend bool operator==(const ForestNode&, const ForestNode&) = default;
};

/// A forest in Canvas(G) decorated with Final, Prev and pi.
struct DecoratedLandscape {
    std::shared_ptr<const Instance> base;
    RelGraph rel;
    std::vector<ForestNode> nodes;
    Assignment final;
    std::vector<std::uint32_t> part;
    /// Vertex of the originating instance that each vertex of `base` stands for.
    std::vector<Vertex> origin;
    /// Vertices whose rule was relaxed to all-allowed by a restriction; their
    /// Prev words are no longer forbidden words.
    std::vector<std::uint8_t> relaxed;

    bool empty() const { return nodes.empty(); }
    std::size_t vertex_count() const { return base ? base->vertex_count() : 0; }
    /// Least k with every node below level k.
    std::uint32_t height() const;
    /// Roots of the trees, each node mapped to the index of its root.
    std::vector<std::size_t> roots_of() const;
    std::vector<std::size_t> roots() const;
    bool grounded() const;

    /// Sorts nodes by (level, base) and renumbers parents accordingly.
    void canonicalize();

    /// Structural equality after canonicalisation (instance compared by value).
    bool same_as(const DecoratedLandscape& other) const;
};

/// First violated invariant, or nullopt for a valid decorated landscape.
std::optional<std::string> check_landscape(const DecoratedLandscape& L);

/// Throws InternalError when check_landscape reports a problem.
void validate_landscape(const DecoratedLandscape& L);

/// Whether (x, y) is an edge of Canvas(G): levels consecutive, bases Rel-adjacent.
bool canvas_edge(const DecoratedLandscape& L, std::size_t x, std::size_t y);

struct LandscapeType {
    std::size_t D = 0;
    std::size_t delta = 0;
    std::uint64_t beta = 0;
    std::size_t N1 = 0;
    std::size_t N2 = 0;
    std::uint32_t p = 0;

    friend bool operator==(const LandscapeType&, const LandscapeType&) = default;
};

LandscapeType landscape_type(const DecoratedLandscape& L);

/// Whether L is of type t, i.e. every quantity is within its bound and the
/// forest has exactly t.N2 vertices.
bool has_type(const DecoratedLandscape& L, const LandscapeType& t);

/// Level-i nodes are IB(MT_i); each node above level 0 hangs from the
/// Rel-adjacent node one level down with least base vertex. Final = MT_k.
DecoratedLandscape extract_landscape(const Engine& engine, const RunTrace& trace);

/// Seq(x) for every vertex x of L's base graph, via Asgn_k, ..., Asgn_0.
std::vector<Word> asgn_seq(const DecoratedLandscape& L);

/// Res_L(V): the restriction to the subgraph induced on `keep` (sorted local
/// vertex ids). Forest edges that are no longer Canvas edges are dropped, as
/// are nodes whose base vertex keeps none of its variables.
DecoratedLandscape restrict_landscape(const DecoratedLandscape& L, const VertexSet& keep);

/// Whether Res_L(keep) is faithful at x (a vertex of L in `keep`).
bool is_faithful_at(const DecoratedLandscape& L, const VertexSet& keep, Vertex x);

nlohmann::ordered_json landscape_to_json(const DecoratedLandscape& L);

}  // namespace lrmt
