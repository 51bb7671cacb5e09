#include "lrmt/bundled.hpp"

#include "lrmt/error.hpp"

namespace lrmt {

CnfInstance disjoint_cnf()
{
    CnfInstance c;
    c.variable_count = 24;
    for (std::uint32_t i = 0; i < 8; ++i) {
        c.clauses.push_back({{3 * i, true}, {3 * i + 1, true}, {3 * i + 2, true}});
    }
    return c;
}

CnfInstance chain_cnf()
{
    CnfInstance c;
    c.variable_count = 25;
    for (std::uint32_t i = 0; i < 12; ++i) {
        c.clauses.push_back({{2 * i, i % 2 == 0}, {2 * i + 1, i % 3 != 0}, {2 * i + 2, i % 4 < 2}});
    }
    return c;
}

TorusSpec small_torus_spec()
{
    return box_torus(2, 5, 10, 2);
}

TorusSpec solver_torus_spec()
{
    return box_torus(2, 32, 10, 2);
}

std::vector<std::string> bundled_names()
{
    return {"disjoint", "chain", "torus5", "torus32"};
}

Instance bundled_instance(const std::string& name)
{
    if (name == "disjoint") {
        return from_cnf(disjoint_cnf()).instance;
    }
    if (name == "chain") {
        return from_cnf(chain_cnf()).instance;
    }
    if (name == "torus5") {
        return torus_instance(small_torus_spec());
    }
    if (name == "torus32") {
        return torus_instance(solver_torus_spec());
    }
    throw PreconditionError("unknown bundled instance '" + name + "'");
}

std::vector<BundledInstance> bundled_instances()
{
    std::vector<BundledInstance> out;
    for (const auto& name : bundled_names()) {
        out.push_back({name, bundled_instance(name)});
    }
    return out;
}

}  // namespace lrmt
