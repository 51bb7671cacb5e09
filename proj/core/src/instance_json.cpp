#include "lrmt/instance_json.hpp"

#include "lrmt/error.hpp"

#include <fstream>
#include <sstream>

namespace lrmt {

namespace {

constexpr const char* digit_chars = "0123456789abcdefghijklmnopqrstuvwxyz";

}  // namespace

std::string word_to_string(const Word& w)
{
    std::string s;
    for (auto d : w) {
        if (d >= 36) {
            throw PreconditionError("digit too large for the string form");
        }
        s.push_back(digit_chars[d]);
    }
    return s;
}

Word word_from_string(const std::string& s, unsigned b)
{
    Word w;
    for (char ch : s) {
        unsigned d = 0;
        if (ch >= '0' && ch <= '9') {
            d = static_cast<unsigned>(ch - '0');
        } else if (ch >= 'a' && ch <= 'z') {
            d = static_cast<unsigned>(ch - 'a') + 10;
        } else {
            throw ParseError("bad digit '" + std::string(1, ch) + "' in word '" + s + "'");
        }
        if (d >= b) {
            throw ParseError("digit '" + std::string(1, ch) + "' out of range for alphabet " + std::to_string(b));
        }
        w.push_back(static_cast<Digit>(d));
    }
    return w;
}

nlohmann::ordered_json instance_to_json(const Instance& inst)
{
    if (inst.alphabet() > 36) {
        throw PreconditionError("instance JSON supports alphabets up to 36");
    }
    nlohmann::ordered_json j;
    j["format"] = instance_format_tag;
    j["b"] = inst.alphabet();
    j["vertices"] = inst.vertex_count();
    j["out_adj"] = inst.graph.out_lists();
    j["in_adj"] = inst.graph.in_lists();
    auto allowed = nlohmann::ordered_json::array();
    for (Vertex x = 0; x < inst.vertex_count(); ++x) {
        if (inst.rule.is_trivial(x)) {
            allowed.push_back("all");
            continue;
        }
        auto words = nlohmann::ordered_json::array();
        for (const auto& w : inst.rule.allowed_words(x)) {
            words.push_back(word_to_string(w));
        }
        allowed.push_back(std::move(words));
    }
    j["allowed"] = std::move(allowed);
    return j;
}

Instance instance_from_json(const nlohmann::json& j)
{
    try {
        if (j.at("format").get<std::string>() != instance_format_tag) {
            throw ParseError("unsupported instance format '" + j.at("format").get<std::string>() + "'");
        }
        auto b = j.at("b").get<unsigned>();
        auto n = j.at("vertices").get<std::size_t>();
        auto out = j.at("out_adj").get<std::vector<std::vector<Vertex>>>();
        if (out.size() != n) {
            throw ParseError("out_adj has " + std::to_string(out.size()) + " entries, expected " + std::to_string(n));
        }
        for (const auto& list : out) {
            for (auto v : list) {
                if (v >= n) {
                    throw ParseError("vertex index out of range in out_adj");
                }
            }
        }
        Instance inst;
        try {
            inst.graph = j.contains("in_adj")
                             ? VariableGraph::from_lists(out, j.at("in_adj").get<std::vector<std::vector<Vertex>>>())
                             : VariableGraph::from_out_lists(out);
            inst.rule = LocalRule(b, inst.graph);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
        const auto& allowed = j.at("allowed");
        if (!allowed.is_array() || allowed.size() != n) {
            throw ParseError("'allowed' must be an array with one entry per vertex");
        }
        for (Vertex x = 0; x < n; ++x) {
            const auto& entry = allowed[x];
            if (entry.is_string() && entry.get<std::string>() == "all") {
                continue;
            }
            if (!entry.is_array()) {
                throw ParseError("allowed entry of vertex " + std::to_string(x) + " must be \"all\" or a list");
            }
            inst.rule.forbid_all(x);
            for (const auto& s : entry) {
                auto w = word_from_string(s.get<std::string>(), b);
                if (w.size() != inst.graph.var(x).size()) {
                    throw ParseError("word '" + s.get<std::string>() + "' at vertex " + std::to_string(x) +
                                     " has the wrong length");
                }
                inst.rule.set(x, w, true);
            }
        }
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("instance JSON: ") + e.what());
    }
}

std::string dump_instance(const Instance& inst)
{
    return instance_to_json(inst).dump(2) + "\n";
}

Instance load_instance_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return instance_from_json(j);
}

void save_instance_json(const Instance& inst, const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << dump_instance(inst);
}

}  // namespace lrmt
