#include "lrmt/padding.hpp"

#include "lrmt/error.hpp"

#include <algorithm>
#include <string>

namespace lrmt {

PaddedSystem pad_uniform(const Instance& inst, const Partition& pi, const std::vector<Vertex>& order,
                         std::size_t width)
{
    inst.validate();
    pi.validate(inst.vertex_count());
    check_order(order, inst.vertex_count());
    const std::size_t n = inst.vertex_count();
    PaddedSystem out;
    out.original_count = n;
    out.width = width;

    auto support = support_set(inst);
    std::vector<std::vector<Vertex>> lists = inst.graph.out_lists();
    for (Vertex x : support) {
        if (lists[x].size() > width) {
            throw PreconditionError("vertex " + std::to_string(x) + " reads more than D = " + std::to_string(width) +
                                    " variables");
        }
        for (std::size_t i = lists[x].size(); i < width; ++i) {
            lists[x].push_back(static_cast<Vertex>(n + out.dummy_owner.size()));
            lists.emplace_back();
            out.dummy_owner.push_back(x);
        }
    }
    // Original in-lists keep their order; each dummy has Cl = {owner}.
    auto in_lists = inst.graph.in_lists();
    for (Vertex owner : out.dummy_owner) {
        in_lists.push_back({owner});
    }
    out.instance.graph = VariableGraph::from_lists(std::move(lists), std::move(in_lists));
    out.instance.rule = LocalRule(inst.alphabet(), out.instance.graph);
    const unsigned b = inst.alphabet();
    for (Vertex x : support) {
        const std::size_t extra = out.instance.graph.var(x).size() - inst.graph.var(x).size();
        std::uint64_t multiplier = 1;
        for (std::size_t i = 0; i < extra; ++i) {
            multiplier *= b;
        }
        out.instance.rule.forbid_all(x);
        for (std::uint64_t code = 0; code < inst.rule.word_count(x); ++code) {
            if (!inst.rule.allows_code(x, code)) {
                continue;
            }
            for (std::uint64_t tail = 0; tail < multiplier; ++tail) {
                out.instance.rule.set(x, out.instance.rule.decode(x, code * multiplier + tail), true);
            }
        }
    }

    out.partition.part_count = pi.part_count + pi.part_count * static_cast<std::uint32_t>(width);
    out.partition.part_of = pi.part_of;
    for (std::size_t d = 0; d < out.dummy_owner.size(); ++d) {
        Vertex owner = out.dummy_owner[d];
        Vertex v = static_cast<Vertex>(n + d);
        auto i = *out.instance.graph.var_position(owner, v);
        out.partition.part_of.push_back(pi.part_count + pi.part_of[owner] * static_cast<std::uint32_t>(width) +
                                        static_cast<std::uint32_t>(i));
    }

    out.order = order;
    for (std::size_t d = 0; d < out.dummy_owner.size(); ++d) {
        out.order.push_back(static_cast<Vertex>(n + d));
    }
    return out;
}

PaddedSystem pad_uniform(const Instance& inst, const Partition& pi, const std::vector<Vertex>& order)
{
    std::size_t width = 0;
    for (Vertex x : support_set(inst)) {
        width = std::max(width, inst.graph.var(x).size());
    }
    return pad_uniform(inst, pi, order, width);
}

}  // namespace lrmt
