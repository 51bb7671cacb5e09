#pragma once

#include <cstdint>

namespace lrmt {

struct SmallLandscapeParams {
    unsigned D = 1;
    unsigned delta = 2;
    unsigned beta = 1;
    unsigned N1 = 2;
    unsigned N2 = 2;
    unsigned p = 2;
    unsigned b = 2;
    /// Maximum number of labelled objects to visit before giving up.
    std::uint64_t budget = 50'000'000;
};

struct SmallLandscapeCount {
    std::uint64_t classes = 0;
    std::uint64_t labelled = 0;  ///< labelled objects visited
    bool complete = true;        ///< false when the budget ran out
};

/// Iso-classes of grounded decorated landscapes of type
/// (D, Delta, beta, N1, N2, p) whose base graph has between 1 and N1
/// vertices, by exhaustive enumeration and canonical forms.
SmallLandscapeCount enumerate_small_landscapes(const SmallLandscapeParams& params);

}  // namespace lrmt
