#pragma once

#include "lrmt/engine.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>

namespace lrmt {

/// 64-bit FNV-1a over the little-endian bytes of the counters.
std::uint64_t counters_digest(std::span<const std::uint32_t> counters);

/// One JSON object per line: a header, then {"step", "resampled", "counters"}
/// for every step, where "counters" is the hex digest of h_{j+1}.
void write_trace_jsonl(std::ostream& out, const RunTrace& trace, const VariableGraph& g);

}  // namespace lrmt
