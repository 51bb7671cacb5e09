#pragma once

#include "lrmt/cnf.hpp"
#include "lrmt/instance.hpp"
#include "lrmt/torus.hpp"

#include <string>
#include <vector>

namespace lrmt {

/// 8 variable-disjoint all-positive 3-clauses (Delta = 1).
CnfInstance disjoint_cnf();

/// 12 clauses c_i = (v_{2i}, v_{2i+1}, v_{2i+2}) with mixed signs (Delta = 3).
CnfInstance chain_cnf();

/// d = 2, side 5, 10 translates, b = 2: small enough for exhaustive zeta checks.
TorusSpec small_torus_spec();

/// d = 2, side 32, 10 translates, b = 2.
TorusSpec solver_torus_spec();

struct BundledInstance {
    std::string name;
    Instance instance;
};

/// disjoint, chain, torus5, torus32.
std::vector<BundledInstance> bundled_instances();

/// Throws PreconditionError for an unknown name.
Instance bundled_instance(const std::string& name);

std::vector<std::string> bundled_names();

}  // namespace lrmt
