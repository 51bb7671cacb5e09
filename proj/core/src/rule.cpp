#include "lrmt/rule.hpp"

#include "lrmt/error.hpp"

#include <string>

namespace lrmt {

namespace {

std::uint64_t table_size(unsigned b, std::size_t length)
{
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (size > LocalRule::max_table_size / b) {
            throw PreconditionError("rule table b^" + std::to_string(length) + " exceeds the supported size");
        }
        size *= b;
    }
    return size;
}

}  // namespace

LocalRule::LocalRule(unsigned alphabet, const VariableGraph& g)
{
    std::vector<std::size_t> lengths(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        lengths[x] = g.var(x).size();
    }
    *this = LocalRule(alphabet, std::move(lengths));
}

LocalRule::LocalRule(unsigned alphabet, std::vector<std::size_t> word_lengths) :
    b_(alphabet), lengths_(std::move(word_lengths))
{
    if (b_ < 1 || b_ > 256) {
        throw PreconditionError("alphabet size must be in [1, 256]");
    }
    tables_.resize(lengths_.size());
    allowed_.resize(lengths_.size());
    for (std::size_t x = 0; x < lengths_.size(); ++x) {
        auto n = table_size(b_, lengths_[x]);
        tables_[x].assign(n, 1);
        allowed_[x] = n;
    }
}

void LocalRule::check_word(Vertex x, std::span<const Digit> word) const
{
    if (word.size() != lengths_[x]) {
        throw PreconditionError("word length " + std::to_string(word.size()) + " does not match |Var(" +
                                std::to_string(x) + ")| = " + std::to_string(lengths_[x]));
    }
    for (Digit d : word) {
        if (d >= b_) {
            throw PreconditionError("digit out of range for alphabet " + std::to_string(b_));
        }
    }
}

std::uint64_t LocalRule::encode(Vertex x, std::span<const Digit> word) const
{
    check_word(x, word);
    std::uint64_t code = 0;
    for (Digit d : word) {
        code = code * b_ + d;
    }
    return code;
}

Word LocalRule::decode(Vertex x, std::uint64_t code) const
{
    Word w(lengths_[x]);
    for (std::size_t i = w.size(); i-- > 0;) {
        w[i] = static_cast<Digit>(code % b_);
        code /= b_;
    }
    return w;
}

void LocalRule::set_allowed(Vertex x, std::span<const Word> words)
{
    forbid_all(x);
    for (const auto& w : words) {
        set(x, w, true);
    }
}

void LocalRule::allow_all(Vertex x)
{
    tables_[x].assign(tables_[x].size(), 1);
    allowed_[x] = tables_[x].size();
}

void LocalRule::forbid_all(Vertex x)
{
    tables_[x].assign(tables_[x].size(), 0);
    allowed_[x] = 0;
}

void LocalRule::set(Vertex x, std::span<const Digit> word, bool allowed)
{
    auto code = encode(x, word);
    auto& slot = tables_[x][code];
    if (slot != static_cast<std::uint8_t>(allowed)) {
        slot = allowed ? 1 : 0;
        allowed ? ++allowed_[x] : --allowed_[x];
    }
}

std::vector<Word> LocalRule::allowed_words(Vertex x) const
{
    std::vector<Word> out;
    for (std::uint64_t c = 0; c < tables_[x].size(); ++c) {
        if (tables_[x][c]) {
            out.push_back(decode(x, c));
        }
    }
    return out;
}

std::vector<Word> LocalRule::forbidden_words(Vertex x) const
{
    std::vector<Word> out;
    for (std::uint64_t c = 0; c < tables_[x].size(); ++c) {
        if (!tables_[x][c]) {
            out.push_back(decode(x, c));
        }
    }
    return out;
}

}  // namespace lrmt
