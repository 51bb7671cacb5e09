#pragma once

#include "lrmt/landscape.hpp"

#include <string>
#include <vector>

namespace lrmt {

/// Every node above level 0.
bool is_pushable(const DecoratedLandscape& L);

/// The tree rooted at `root` is above level 0 and no Canvas edge enters it
/// from another tree.
bool is_pushable_tree(const DecoratedLandscape& L, std::size_t root);

/// (x, z) is a forest edge and (y, z) a Canvas edge; x, y, z distinct.
bool is_rebranchable(const DecoratedLandscape& L, std::size_t x, std::size_t y, std::size_t z);

/// z is a root and (y, z) a Canvas edge.
bool is_joinable(const DecoratedLandscape& L, std::size_t y, std::size_t z);

/// Whether the tree rooted at `root` contains the forest edge of some
/// rebranchable triple.
bool is_rebranchable_tree(const DecoratedLandscape& L, std::size_t root);
bool is_joinable_tree(const DecoratedLandscape& L, std::size_t root);

/// All operations keep node indices stable and throw PreconditionError naming
/// the violated predicate.
DecoratedLandscape push_all(const DecoratedLandscape& L);
DecoratedLandscape push_tree(const DecoratedLandscape& L, std::size_t root);
DecoratedLandscape rebranch(const DecoratedLandscape& L, std::size_t x, std::size_t y, std::size_t z);
DecoratedLandscape join(const DecoratedLandscape& L, std::size_t y, std::size_t z);

struct GroundOp {
    enum class Kind { push_all, push_tree, rebranch, join } kind;
    std::size_t a = 0;  ///< push_tree: root; rebranch: x; join: y
    std::size_t b = 0;  ///< rebranch: y; join: z
    std::size_t c = 0;  ///< rebranch: z

    std::string describe() const;
};

struct GroundResult {
    DecoratedLandscape landscape;
    std::vector<GroundOp> log;
};

/// Iteration cap used by ground(): 2 (N2 + 1)(N2 + sum of levels + 1).
std::size_t ground_guard(const DecoratedLandscape& L);

/// An equivalent grounded landscape. Each step takes the first applicable of:
/// a join (least root by (level, base), least predecessor base); a push of a
/// pushable tree (least root); push_all; a rebranching that moves a subtree
/// out of the least tree above level 0. Throws InternalError with the
/// operation log if the guard is exceeded.
GroundResult ground(const DecoratedLandscape& L);

}  // namespace lrmt
