#pragma once

#include "lrmt/config.hpp"
#include "lrmt/error.hpp"

#include <CLI11.hpp>

#include <functional>
#include <string>

namespace lrmt::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_input = 2,
    exit_cap = 3,
    exit_property = 4,
};

/// A subcommand registers its options and returns the action to run once
/// parsing succeeded.
using Action = std::function<int()>;

Action add_solve(CLI::App& app);
Action add_tail(CLI::App& app);
Action add_verify(CLI::App& app);
Action add_count(CLI::App& app);
Action add_generate(CLI::App& app);

/// Options shared by solve and tail. Values given on the command line
/// override the config file.
struct ExperimentOptions {
    std::string config_path;
    std::string instance;
    bool three_sat = false;
    std::string eps;
    std::uint32_t radius = 0;
    std::size_t step_cap = 0;
    std::uint64_t seed = 0;
    std::string order;
    std::string initial;
    std::string condition;
    bool force = false;
    unsigned threads = 0;

    std::vector<CLI::Option*> given;
    CLI::Option* o_instance = nullptr;
    CLI::Option* o_eps = nullptr;
    CLI::Option* o_radius = nullptr;
    CLI::Option* o_cap = nullptr;
    CLI::Option* o_seed = nullptr;
    CLI::Option* o_order = nullptr;
    CLI::Option* o_initial = nullptr;
    CLI::Option* o_condition = nullptr;
    CLI::Option* o_threads = nullptr;
    CLI::Option* o_three_sat = nullptr;
    CLI::Option* o_force = nullptr;

    void add_to(CLI::App& app);
    ExperimentConfig resolve() const;
};

void write_file(const std::string& path, const std::string& content);

}  // namespace lrmt::cli
