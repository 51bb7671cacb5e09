#pragma once

#include "lrmt/instance.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lrmt {

struct Literal {
    std::uint32_t var = 0;
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct CnfInstance {
    std::uint32_t variable_count = 0;
    std::vector<Clause> clauses;

    /// Throws ParseError on out-of-range or repeated variables inside a clause,
    /// or on repeated clauses (compared as literal sets).
    void validate() const;

    friend bool operator==(const CnfInstance&, const CnfInstance&) = default;
};

enum class CnfMode { three_sat, general };

CnfInstance parse_dimacs(std::istream& in, CnfMode mode = CnfMode::three_sat);
CnfInstance parse_dimacs_string(const std::string& text, CnfMode mode = CnfMode::three_sat);
CnfInstance load_dimacs(const std::string& path, CnfMode mode = CnfMode::three_sat);
std::string to_dimacs(const CnfInstance& cnf);

/// Which kind of object a vertex of a CNF variable graph stands for.
struct CnfRoles {
    std::uint32_t clause_count = 0;
    std::uint32_t variable_count = 0;

    bool is_clause(Vertex v) const { return v < clause_count; }
    Vertex clause_vertex(std::uint32_t c) const { return c; }
    Vertex variable_vertex(std::uint32_t j) const { return clause_count + j; }
    std::uint32_t variable_of(Vertex v) const { return v - clause_count; }
};

struct CnfGraph {
    Instance instance;
    CnfRoles roles;
};

/// Clause vertices 0..m-1 followed by variable vertices; Var(c) lists the
/// clause's variables by ascending index, R(c) holds the satisfying words.
CnfGraph from_cnf(const CnfInstance& cnf);

/// Random 3-CNF in which every clause shares variables with at most
/// delta_target - 1 other clauses. Deterministic in `seed`.
CnfInstance random_bounded_overlap_sat(std::uint32_t clause_count, unsigned delta_target, std::uint64_t seed);

}  // namespace lrmt
