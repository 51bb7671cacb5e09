#include "lrmt/cnf.hpp"

#include "lrmt/error.hpp"
#include "lrmt/lll.hpp"
#include "lrmt/rng.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace lrmt {

void CnfInstance::validate() const
{
    std::set<std::vector<std::pair<std::uint32_t, bool>>> seen;
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        std::vector<std::pair<std::uint32_t, bool>> key;
        for (const auto& lit : clauses[c]) {
            if (lit.var >= variable_count) {
                throw ParseError("clause " + std::to_string(c) + " uses variable " + std::to_string(lit.var + 1) +
                                 " beyond the declared count " + std::to_string(variable_count));
            }
            key.emplace_back(lit.var, lit.positive);
        }
        std::sort(key.begin(), key.end());
        for (std::size_t i = 1; i < key.size(); ++i) {
            if (key[i].first == key[i - 1].first) {
                throw ParseError("clause " + std::to_string(c) + " repeats variable " + std::to_string(key[i].first + 1));
            }
        }
        if (!seen.insert(key).second) {
            throw ParseError("clause " + std::to_string(c) + " duplicates an earlier clause");
        }
    }
}

CnfInstance parse_dimacs(std::istream& in, CnfMode mode)
{
    CnfInstance cnf;
    bool header = false;
    std::size_t declared_clauses = 0;
    Clause current;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) { return ParseError("line " + std::to_string(line_no) + ": " + what); };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) {
            continue;
        }
        if (tok == "c") {
            continue;
        }
        if (tok == "%") {
            break;
        }
        if (tok == "p") {
            std::string fmt;
            long long n = -1;
            long long m = -1;
            if (header || !(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0) {
                throw fail("malformed problem line");
            }
            header = true;
            cnf.variable_count = static_cast<std::uint32_t>(n);
            declared_clauses = static_cast<std::size_t>(m);
            continue;
        }
        if (!header) {
            throw fail("clause before the 'p cnf' header");
        }
        ls.clear();
        ls.str(line);
        long long v = 0;
        while (ls >> v) {
            if (v == 0) {
                if (current.empty()) {
                    throw fail("empty clause");
                }
                if (mode == CnfMode::three_sat && current.size() != 3) {
                    throw fail("clause with " + std::to_string(current.size()) + " literals in 3-SAT mode");
                }
                cnf.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            auto var = static_cast<std::uint64_t>(v < 0 ? -v : v);
            if (var > cnf.variable_count) {
                throw fail("variable " + std::to_string(var) + " exceeds the declared count");
            }
            current.push_back({static_cast<std::uint32_t>(var - 1), v > 0});
        }
        if (!ls.eof()) {
            throw fail("unexpected token");
        }
    }
    if (!header) {
        throw ParseError("missing 'p cnf' header");
    }
    if (!current.empty()) {
        throw ParseError("last clause is not terminated by 0");
    }
    if (cnf.clauses.size() != declared_clauses) {
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(cnf.clauses.size()));
    }
    cnf.validate();
    return cnf;
}

CnfInstance parse_dimacs_string(const std::string& text, CnfMode mode)
{
    std::istringstream in(text);
    return parse_dimacs(in, mode);
}

CnfInstance load_dimacs(const std::string& path, CnfMode mode)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    return parse_dimacs(in, mode);
}

std::string to_dimacs(const CnfInstance& cnf)
{
    std::ostringstream out;
    out << "p cnf " << cnf.variable_count << ' ' << cnf.clauses.size() << '\n';
    for (const auto& clause : cnf.clauses) {
        for (const auto& lit : clause) {
            out << (lit.positive ? "" : "-") << lit.var + 1 << ' ';
        }
        out << "0\n";
    }
    return out.str();
}

CnfGraph from_cnf(const CnfInstance& cnf)
{
    cnf.validate();
    const auto m = static_cast<std::uint32_t>(cnf.clauses.size());
    CnfRoles roles{m, cnf.variable_count};
    std::vector<std::vector<Vertex>> out(m + cnf.variable_count);
    for (std::uint32_t c = 0; c < m; ++c) {
        for (const auto& lit : cnf.clauses[c]) {
            out[c].push_back(roles.variable_vertex(lit.var));
        }
        std::sort(out[c].begin(), out[c].end());
    }
    Instance inst{VariableGraph::from_out_lists(std::move(out)), {}};
    inst.rule = LocalRule(2, inst.graph);
    for (std::uint32_t c = 0; c < m; ++c) {
        // Exactly one word falsifies a clause: every literal false.
        Word falsifier(inst.graph.var(c).size());
        for (const auto& lit : cnf.clauses[c]) {
            auto pos = *inst.graph.var_position(c, roles.variable_vertex(lit.var));
            falsifier[pos] = lit.positive ? 0 : 1;
        }
        inst.rule.set(c, falsifier, false);
    }
    return {std::move(inst), roles};
}

namespace {

CnfInstance generate_once(std::uint32_t clause_count, unsigned delta, std::mt19937_64& rng)
{
    // Components are chains (or, for delta 3, possibly cycles) of clauses in
    // which consecutive clauses share exactly one variable.
    const std::uint32_t max_len = delta == 1 ? 1 : delta == 2 ? 2 : 8;
    std::vector<std::vector<std::uint32_t>> vars(clause_count);
    std::uint32_t next_var = 0;
    std::uint32_t done = 0;
    while (done < clause_count) {
        auto len = 1 + static_cast<std::uint32_t>(uniform_below(rng, std::min(max_len, clause_count - done)));
        bool cycle = delta == 3 && len >= 3 && uniform_below(rng, 2) == 1;
        std::vector<std::uint32_t> shared(len, 0);
        std::uint32_t links = cycle ? len : len - 1;
        for (std::uint32_t i = 0; i < links; ++i) {
            shared[i] = next_var++;
        }
        for (std::uint32_t i = 0; i < len; ++i) {
            auto& v = vars[done + i];
            if (i > 0) {
                v.push_back(shared[i - 1]);
            } else if (cycle) {
                v.push_back(shared[len - 1]);
            }
            if (i < links && (i + 1 < len || cycle)) {
                v.push_back(shared[i]);
            }
            while (v.size() < 3) {
                v.push_back(next_var++);
            }
        }
        done += len;
    }
    std::vector<std::uint32_t> relabel(next_var);
    std::iota(relabel.begin(), relabel.end(), 0U);
    shuffle_portable(relabel, rng);
    shuffle_portable(vars, rng);
    CnfInstance cnf;
    cnf.variable_count = next_var;
    for (auto& v : vars) {
        Clause clause;
        for (auto x : v) {
            clause.push_back({relabel[x], uniform_below(rng, 2) == 1});
        }
        shuffle_portable(clause, rng);
        cnf.clauses.push_back(std::move(clause));
    }
    return cnf;
}

}  // namespace

CnfInstance random_bounded_overlap_sat(std::uint32_t clause_count, unsigned delta_target, std::uint64_t seed)
{
    if (delta_target < 1 || delta_target > 3) {
        throw PreconditionError("delta_target must be 1, 2 or 3");
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto cnf = generate_once(clause_count, delta_target, rng);
        auto g = from_cnf(cnf);
        auto rel = build_rel(g.instance.graph);
        if (params(g.instance, rel).max_rel_degree > delta_target) {
            continue;
        }
        if (!check_lll_condition(g.instance, rel, LllVariant::tight).passed && clause_count > 0) {
            continue;
        }
        return cnf;
    }
    throw InternalError("bounded-overlap generator failed to meet its own constraints");
}

}  // namespace lrmt
