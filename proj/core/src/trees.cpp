#include "lrmt/trees.hpp"

#include "lrmt/error.hpp"

namespace lrmt {

namespace {

Series multiply(const Series& a, const Series& b, std::size_t degree)
{
    Series c(degree + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

void require_delta(unsigned delta, unsigned least)
{
    if (delta < least) {
        throw PreconditionError("Delta must be at least " + std::to_string(least) + " (got " +
                                std::to_string(delta) + ")");
    }
}

}  // namespace

Series q_series(unsigned delta, std::uint64_t i, std::size_t degree)
{
    require_delta(delta, 1);
    Series q(degree + 1, 0);
    if (degree >= 1) {
        q[1] = 1;
    }
    for (std::uint64_t step = 0; step < i; ++step) {
        Series one_plus = q;
        one_plus[0] += 1;
        Series power(degree + 1, 0);
        power[0] = 1;
        for (unsigned d = 0; d < delta; ++d) {
            power = multiply(power, one_plus, degree);
        }
        Series next(degree + 1, 0);
        for (std::size_t j = 0; j < degree; ++j) {
            next[j + 1] = power[j];
        }
        if (next == q) {
            break;
        }
        q = std::move(next);
    }
    return q;
}

Integer count_labelled_trees(unsigned delta, std::uint64_t N)
{
    if (N == 0) {
        return 0;
    }
    return q_series(delta, N, static_cast<std::size_t>(N))[static_cast<std::size_t>(N)];
}

Integer fuss_catalan(unsigned delta, std::uint64_t N)
{
    const std::uint64_t m = static_cast<std::uint64_t>(delta) * N + 1;
    return binomial(m, N) / m;
}

Rational critical_point(unsigned delta)
{
    require_delta(delta, 2);
    return Rational(ipow(delta - 1, delta - 1), ipow(delta, delta));
}

Rational ghg_bound(unsigned delta, std::uint64_t N)
{
    require_delta(delta, 2);
    return rpow(Rational(ipow(delta, delta), ipow(delta - 1, delta - 1)), N);
}

Rational q_value_exact(unsigned delta, std::uint64_t i, const Rational& x)
{
    require_delta(delta, 1);
    Rational q = x;
    for (std::uint64_t step = 0; step < i; ++step) {
        q = x * rpow(1 + q, delta);
    }
    return q;
}

Rational q_value_upper(unsigned delta, std::uint64_t i, const Rational& x, unsigned bits)
{
    require_delta(delta, 1);
    if (x < 0) {
        throw PreconditionError("q_value_upper needs x >= 0");
    }
    Rational u = round_up_dyadic(x, bits);
    for (std::uint64_t step = 0; step < i; ++step) {
        u = round_up_dyadic(x * rpow(1 + u, delta), bits);
    }
    return u;
}

LfffBound lfff_bound(std::uint64_t D, unsigned delta, std::uint64_t beta, std::uint64_t N1, std::uint64_t N2,
                     std::uint64_t p, unsigned b)
{
    require_delta(delta, 2);
    if (D > 16) {
        throw PreconditionError("D too large for the explicit bound");
    }
    LfffBound out;
    Integer bD = ipow(b, D);
    if (bD > Integer(1) << 20) {
        throw PreconditionError("b^D too large for the explicit bound");
    }
    auto bD64 = static_cast<std::uint64_t>(bD);
    out.c_factor = Integer(N1) * ipow(N1 + 1, D * N1) * ipow(factorial(D), N1) * ipow(factorial(delta), N1) *
                   ipow(2, bD64 * N1) * ipow(b, N1) * ipow(p, N1) * ipow(N1, N1);
    out.value = Rational(out.c_factor * ipow(std::max<std::uint64_t>(N2, 1), N1)) *
                rpow(Rational(ipow(delta, delta), ipow(delta - 1, delta - 1)) * Rational(beta), N2);
    out.floor_value = numerator(out.value) / denominator(out.value);
    return out;
}

}  // namespace lrmt
