#pragma once

#include "lrmt/rational.hpp"

#include <cstdint>
#include <vector>

namespace lrmt {

/// Coefficients 0..degree of a truncated power series.
using Series = std::vector<Integer>;

/// Q_i truncated at `degree`: Q_0 = X, Q_{i+1} = X (1 + Q_i)^Delta.
Series q_series(unsigned delta, std::uint64_t i, std::size_t degree);

/// Number of Delta-labelled trees with N vertices (0 for N = 0), read off
/// Q_N, at which point the first N + 1 coefficients are stable.
Integer count_labelled_trees(unsigned delta, std::uint64_t N);

/// (1 / (Delta N + 1)) C(Delta N + 1, N).
Integer fuss_catalan(unsigned delta, std::uint64_t N);

/// (Delta^Delta / (Delta - 1)^(Delta - 1))^N; Delta >= 2.
Rational ghg_bound(unsigned delta, std::uint64_t N);

/// (Delta - 1)^(Delta - 1) / Delta^Delta.
Rational critical_point(unsigned delta);

/// Exact Q_i(x) via the recursion; denominators grow like Delta^i, so keep i small.
Rational q_value_exact(unsigned delta, std::uint64_t i, const Rational& x);

/// Certified upper bound on Q_i(x) for x >= 0: the recursion with every
/// iterate rounded up to a multiple of 2^-bits. The map u -> x (1 + u)^Delta
/// is increasing, so each rounded iterate dominates the exact one.
Rational q_value_upper(unsigned delta, std::uint64_t i, const Rational& x, unsigned bits = 256);

/// Explicit bound on iso-classes of grounded decorated landscapes of type
/// (D, Delta, beta, N1, N2, p) over alphabet b. `c_factor` is the part
/// depending only on (D, Delta, N1, p, b); `value` = c_factor *
/// max(N2, 1)^N1 * (Delta^Delta / (Delta - 1)^(Delta - 1) * beta)^N2.
struct LfffBound {
    Integer c_factor;
    Rational value;
    Integer floor_value;
};

LfffBound lfff_bound(std::uint64_t D, unsigned delta, std::uint64_t beta, std::uint64_t N1, std::uint64_t N2,
                     std::uint64_t p, unsigned b);

}  // namespace lrmt
