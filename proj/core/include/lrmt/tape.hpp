#pragma once

#include "lrmt/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lrmt {

/// Source of base-b digits rnd(i, j), one stream per part i.
///
/// A stream tape derives every digit from (seed, part, position) alone, so any
/// digit is addressable without generating its predecessors. A finite tape is
/// an explicit p x k table.
class RandomTape {
public:
    RandomTape() = default;

    static RandomTape stream(unsigned alphabet, std::uint32_t part_count, std::uint64_t seed);

    /// `digits` is row-major: digits[part * width + position].
    static RandomTape finite(unsigned alphabet, std::uint32_t part_count, std::size_t width, std::vector<Digit> digits);

    /// The first `width` digits of every stream of stream(alphabet, part_count, seed).
    static RandomTape finite_from_seed(unsigned alphabet, std::uint32_t part_count, std::size_t width,
                                       std::uint64_t seed);

    unsigned alphabet() const { return b_; }
    std::uint32_t part_count() const { return parts_; }
    bool is_finite() const { return finite_; }
    /// Finite width k; meaningless for stream tapes.
    std::size_t width() const { return width_; }
    std::uint64_t seed() const { return seed_; }

    /// nullopt once a finite tape runs out.
    std::optional<Digit> at(std::uint32_t part, std::size_t position) const;

    /// Row `part` of a finite tape, or the first `length` digits of a stream.
    Word row(std::uint32_t part, std::size_t length) const;

    /// Row-major digits of a finite tape.
    const std::vector<Digit>& digits() const { return digits_; }

    friend bool operator==(const RandomTape&, const RandomTape&) = default;

private:
    unsigned b_ = 2;
    std::uint32_t parts_ = 0;
    bool finite_ = false;
    std::size_t width_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<Digit> digits_;
};

/// Uniform digit in [0, b) addressed by (seed, stream, position); rejection
/// sampling on 64-bit words removes modulo bias.
Digit hashed_digit(std::uint64_t seed, std::uint64_t stream, std::uint64_t position, unsigned b);

}  // namespace lrmt
