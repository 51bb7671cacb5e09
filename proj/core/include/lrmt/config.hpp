#pragma once

#include "lrmt/cnf.hpp"
#include "lrmt/engine.hpp"
#include "lrmt/lll.hpp"
#include "lrmt/rational.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <optional>
#include <string>

namespace lrmt {

/// Where an instance comes from. Textual forms:
///   path.cnf | path.json                      files (DIMACS or instance JSON)
///   bundled:NAME                              see bundled_names()
///   random-sat:clauses=M,delta=D,seed=S       random_bounded_overlap_sat
///   torus:d=D,m=M,t=T,b=B                     box_torus
/// DIMACS files are read in general mode unless `three_sat` is set.
struct InstanceSource {
    std::string text;
    bool three_sat = false;
};

Instance load_instance(const InstanceSource& source);

struct ExperimentConfig {
    InstanceSource instance;
    Rational eps{1, 2};
    std::optional<std::uint32_t> radius;    ///< partition sparsity; default 3n
    std::optional<std::uint32_t> window_n;  ///< default: least n with the growth condition
    std::size_t step_cap = 1000;
    std::uint64_t first_seed = 0;
    std::size_t seed_count = 1;
    std::string order = "index";    ///< index | reverse | random:SEED
    std::string initial = "zero";   ///< zero | random:SEED
    LllVariant condition = LllVariant::tight;
    bool force = false;
    unsigned threads = 0;
    std::uint32_t max_n = 10;
    bool classic = false;
    bool landscapes = false;

    struct Outputs {
        std::string assignment;
        std::string trace;
        std::string csv;
        std::string svg;
        std::string n2_csv;
    } outputs;
};

/// Throws ParseError on unknown keys or ill-typed values.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
nlohmann::ordered_json config_to_json(const ExperimentConfig& c);

std::vector<Vertex> make_order(const std::string& spec, std::size_t vertex_count);
Assignment make_initial(const std::string& spec, const Instance& inst);

/// Everything a run needs, built deterministically from a config.
struct PreparedExperiment {
    std::shared_ptr<const Instance> instance;
    std::shared_ptr<const Engine> engine;
    std::uint32_t radius = 0;
    std::uint32_t window_n = 0;  ///< 0 if no n up to the search limit satisfies the growth condition
    Assignment initial;
};

PreparedExperiment prepare(const ExperimentConfig& config);

/// prepare() for an already loaded instance.
PreparedExperiment prepare(const ExperimentConfig& config, Instance instance);

}  // namespace lrmt
