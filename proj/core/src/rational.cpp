#include "lrmt/rational.hpp"

#include "lrmt/error.hpp"

#include <cctype>

namespace lrmt {

Integer ipow(const Integer& base, std::uint64_t exponent)
{
    Integer result = 1;
    Integer b = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

Rational rpow(const Rational& base, std::uint64_t exponent)
{
    return Rational(ipow(numerator(base), exponent), ipow(denominator(base), exponent));
}

Integer factorial(std::uint64_t n)
{
    Integer result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

Integer binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

const Rational& e_upper_bound()
{
    static const Rational value = parse_rational("2.71828182845904523536028747135266249775724709369996");
    return value;
}

Rational parse_rational(const std::string& text)
{
    auto bad = [&] { return ParseError("not a rational number: '" + text + "'"); };
    if (text.empty()) {
        throw bad();
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-' || text[pos] == '+') {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) {
            throw bad();
        }
        Integer v = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw bad();
            }
            v = v * 10 + (text[i] - '0');
        }
        return v;
    };
    Rational result;
    if (auto slash = text.find('/'); slash != std::string::npos) {
        Integer num = digits(pos, slash);
        Integer den = digits(slash + 1, text.size());
        if (den == 0) {
            throw bad();
        }
        result = Rational(num, den);
    } else if (auto dot = text.find('.'); dot != std::string::npos) {
        Integer whole = dot == pos ? Integer(0) : digits(pos, dot);
        Integer frac = digits(dot + 1, text.size());
        result = Rational(whole) + Rational(frac, ipow(10, text.size() - dot - 1));
    } else {
        result = Rational(digits(pos, text.size()));
    }
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value)
{
    return value.str();
}

std::string to_string(const Integer& value)
{
    return value.str();
}

double to_double(const Rational& value)
{
    return value.convert_to<double>();
}

Rational round_up_dyadic(const Rational& value, unsigned bits)
{
    Integer scale = Integer(1) << bits;
    Integer scaled_num = numerator(value) * scale;
    Integer den = denominator(value);
    Integer q = scaled_num / den;
    if (q * den < scaled_num) {
        q += 1;
    }
    return Rational(q, scale);
}

}  // namespace lrmt
