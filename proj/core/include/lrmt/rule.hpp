#pragma once

#include "lrmt/graph.hpp"
#include "lrmt/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lrmt {

/// Per-vertex sets R(x) of allowed words over Var(x), alphabet {0, ..., b-1}.
///
/// Words are indexed by their code: position 0 is the most significant base-b
/// digit. A freshly constructed rule allows everything.
class LocalRule {
public:
    /// Largest table a single vertex may carry (b^|Var(x)| entries).
    static constexpr std::uint64_t max_table_size = std::uint64_t{1} << 24;

    LocalRule() = default;
    LocalRule(unsigned alphabet, const VariableGraph& g);
    LocalRule(unsigned alphabet, std::vector<std::size_t> word_lengths);

    unsigned alphabet() const { return b_; }
    std::size_t vertex_count() const { return lengths_.size(); }
    std::size_t word_length(Vertex x) const { return lengths_[x]; }
    std::uint64_t word_count(Vertex x) const { return tables_[x].size(); }

    std::uint64_t encode(Vertex x, std::span<const Digit> word) const;
    Word decode(Vertex x, std::uint64_t code) const;

    bool allows(Vertex x, std::span<const Digit> word) const { return tables_[x][encode(x, word)] != 0; }
    bool allows_code(Vertex x, std::uint64_t code) const { return tables_[x][code] != 0; }

    void set_allowed(Vertex x, std::span<const Word> words);
    void allow_all(Vertex x);
    void forbid_all(Vertex x);
    void set(Vertex x, std::span<const Digit> word, bool allowed);

    std::uint64_t allowed_count(Vertex x) const { return allowed_[x]; }
    std::uint64_t forbidden_count(Vertex x) const { return word_count(x) - allowed_[x]; }
    bool is_trivial(Vertex x) const { return allowed_[x] == word_count(x); }

    std::vector<Word> allowed_words(Vertex x) const;
    std::vector<Word> forbidden_words(Vertex x) const;

    friend bool operator==(const LocalRule&, const LocalRule&) = default;

private:
    void check_word(Vertex x, std::span<const Digit> word) const;

    unsigned b_ = 2;
    std::vector<std::size_t> lengths_;
    std::vector<std::vector<std::uint8_t>> tables_;
    std::vector<std::uint64_t> allowed_;
};

}  // namespace lrmt
