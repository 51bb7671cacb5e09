#include "lrmt/instance.hpp"

#include "lrmt/error.hpp"

#include <algorithm>
#include <string>

namespace lrmt {

void Instance::validate() const
{
    if (rule.vertex_count() != graph.vertex_count()) {
        throw PreconditionError("rule and graph disagree on the vertex count");
    }
    for (Vertex x = 0; x < graph.vertex_count(); ++x) {
        if (rule.word_length(x) != graph.var(x).size()) {
            throw PreconditionError("rule word length at vertex " + std::to_string(x) + " differs from |Var|");
        }
    }
}

Rational failure_prob(const Instance& inst, Vertex x)
{
    return Rational(Integer(inst.rule.forbidden_count(x)), Integer(inst.rule.word_count(x)));
}

Word restrict_to_var(const VariableGraph& g, const Assignment& f, Vertex x)
{
    auto vars = g.var(x);
    Word w(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        w[i] = f[vars[i]];
    }
    return w;
}

VertexSet violating_set(const Instance& inst, const Assignment& f)
{
    if (f.size() != inst.vertex_count()) {
        throw PreconditionError("assignment size differs from the vertex count");
    }
    const unsigned b = inst.alphabet();
    VertexSet out;
    for (Vertex x = 0; x < inst.vertex_count(); ++x) {
        if (inst.rule.is_trivial(x)) {
            continue;
        }
        std::uint64_t code = 0;
        for (Vertex v : inst.graph.var(x)) {
            if (f[v] >= b) {
                throw PreconditionError("assignment value out of range at vertex " + std::to_string(v));
            }
            code = code * b + f[v];
        }
        if (!inst.rule.allows_code(x, code)) {
            out.push_back(x);
        }
    }
    return out;
}

VertexSet support_set(const Instance& inst)
{
    VertexSet out;
    for (Vertex x = 0; x < inst.vertex_count(); ++x) {
        if (!inst.rule.is_trivial(x)) {
            out.push_back(x);
        }
    }
    return out;
}

InstanceParams params(const Instance& inst, const RelGraph& rel)
{
    InstanceParams p;
    bool any = false;
    for (Vertex x = 0; x < inst.vertex_count(); ++x) {
        if (!inst.rule.is_trivial(x)) {
            any = true;
            p.max_var = std::max(p.max_var, inst.graph.var(x).size());
        }
        p.max_rel_degree = std::max(p.max_rel_degree, rel.neighbours(x).size());
        p.max_forbidden = std::max(p.max_forbidden, inst.rule.forbidden_count(x));
    }
    p.trivially_satisfiable = !any;
    return p;
}

VertexSet unsatisfiable_vertices(const Instance& inst)
{
    VertexSet out;
    for (Vertex x = 0; x < inst.vertex_count(); ++x) {
        if (inst.rule.allowed_count(x) == 0) {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace lrmt
