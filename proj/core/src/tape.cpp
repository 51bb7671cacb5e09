#include "lrmt/tape.hpp"

#include "lrmt/error.hpp"
#include "lrmt/rng.hpp"

#include <limits>

namespace lrmt {

Digit hashed_digit(std::uint64_t seed, std::uint64_t stream, std::uint64_t position, unsigned b)
{
    const std::uint64_t base = mix64(mix64(mix64(seed) ^ stream) ^ position);
    if (b <= 1) {
        return 0;
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::uint64_t r = mix64(base + attempt);
        if (r < limit) {
            return static_cast<Digit>(r % b);
        }
    }
}

RandomTape RandomTape::stream(unsigned alphabet, std::uint32_t part_count, std::uint64_t seed)
{
    if (alphabet < 1 || alphabet > 256) {
        throw PreconditionError("alphabet size must be in [1, 256]");
    }
    RandomTape t;
    t.b_ = alphabet;
    t.parts_ = part_count;
    t.seed_ = seed;
    return t;
}

RandomTape RandomTape::finite(unsigned alphabet, std::uint32_t part_count, std::size_t width, std::vector<Digit> digits)
{
    if (alphabet < 1 || alphabet > 256) {
        throw PreconditionError("alphabet size must be in [1, 256]");
    }
    if (digits.size() != static_cast<std::size_t>(part_count) * width) {
        throw PreconditionError("finite tape needs part_count * width digits");
    }
    for (auto d : digits) {
        if (d >= alphabet) {
            throw PreconditionError("tape digit out of range");
        }
    }
    RandomTape t;
    t.b_ = alphabet;
    t.parts_ = part_count;
    t.finite_ = true;
    t.width_ = width;
    t.digits_ = std::move(digits);
    return t;
}

RandomTape RandomTape::finite_from_seed(unsigned alphabet, std::uint32_t part_count, std::size_t width,
                                        std::uint64_t seed)
{
    auto s = stream(alphabet, part_count, seed);
    std::vector<Digit> digits;
    digits.reserve(static_cast<std::size_t>(part_count) * width);
    for (std::uint32_t i = 0; i < part_count; ++i) {
        for (std::size_t j = 0; j < width; ++j) {
            digits.push_back(*s.at(i, j));
        }
    }
    auto t = finite(alphabet, part_count, width, std::move(digits));
    return t;
}

std::optional<Digit> RandomTape::at(std::uint32_t part, std::size_t position) const
{
    if (part >= parts_) {
        throw PreconditionError("tape part index out of range");
    }
    if (finite_) {
        if (position >= width_) {
            return std::nullopt;
        }
        return digits_[static_cast<std::size_t>(part) * width_ + position];
    }
    return hashed_digit(seed_, part, position, b_);
}

Word RandomTape::row(std::uint32_t part, std::size_t length) const
{
    Word w;
    w.reserve(length);
    for (std::size_t j = 0; j < length; ++j) {
        auto d = at(part, j);
        if (!d) {
            break;
        }
        w.push_back(*d);
    }
    return w;
}

}  // namespace lrmt
