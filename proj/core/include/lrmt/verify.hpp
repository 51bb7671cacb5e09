#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lrmt {

enum class InjectedFault {
    none,
    corrupt_zeta,  ///< flip one payload digit before decoding
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t runs = 200;   ///< fuzzed runs per run-based check
    std::size_t tapes = 200;  ///< tapes per instance for zeta round-trips
    std::size_t k = 8;        ///< tape width for zeta round-trips
    InjectedFault fault = InjectedFault::none;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;                    ///< first failure, empty on success
    nlohmann::ordered_json counterexample;  ///< null on success
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
    /// One line per check; identical bytes for identical options.
    std::string summary() const;
};

/// Checks: zeta round-trips, Seq = Used, grounding, padding pairing, greedy
/// independence, partition sparseness, tree counts and the Q iteration.
VerifyReport run_verify_suite(const VerifyOptions& options);

}  // namespace lrmt
