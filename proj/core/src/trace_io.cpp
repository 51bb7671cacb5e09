#include "lrmt/trace_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <ostream>

namespace lrmt {

std::uint64_t counters_digest(std::span<const std::uint32_t> counters)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto c : counters) {
        for (int i = 0; i < 4; ++i) {
            h ^= (c >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

void write_trace_jsonl(std::ostream& out, const RunTrace& trace, const VariableGraph& g)
{
    nlohmann::ordered_json head;
    head["format"] = "lrmt-trace/1";
    head["vertices"] = g.vertex_count();
    head["steps"] = trace.steps();
    head["status"] = to_string(trace.status);
    head["max_resamples"] = trace.max_resamples();
    out << head.dump() << '\n';
    std::vector<std::uint32_t> h(g.vertex_count(), 0);
    for (std::size_t j = 0; j < trace.steps(); ++j) {
        for (Vertex x : trace.resample_sets[j]) {
            for (Vertex v : g.var(x)) {
                ++h[v];
            }
        }
        nlohmann::ordered_json line;
        line["step"] = j;
        line["resampled"] = trace.resample_sets[j];
        line["counters"] = hex64(counters_digest(h));
        out << line.dump() << '\n';
    }
}

}  // namespace lrmt
