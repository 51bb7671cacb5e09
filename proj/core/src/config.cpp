#include "lrmt/config.hpp"

#include "lrmt/bundled.hpp"
#include "lrmt/error.hpp"
#include "lrmt/instance_json.hpp"
#include "lrmt/partition.hpp"
#include "lrmt/rng.hpp"
#include "lrmt/torus.hpp"
#include "lrmt/window.hpp"

#include <fstream>
#include <map>
#include <random>

namespace lrmt {

namespace {

bool starts_with(const std::string& s, const std::string& prefix)
{
    return s.rfind(prefix, 0) == 0;
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::uint64_t parse_uint(const std::string& text, const std::string& what)
{
    try {
        std::size_t used = 0;
        auto v = std::stoull(text, &used);
        if (used != text.size() || text.empty() || text[0] == '-') {
            throw ParseError("");
        }
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected a nonnegative integer for " + what + ", got '" + text + "'");
    }
}

/// "a=1,b=2" -> map; every key must be in `allowed`.
std::map<std::string, std::uint64_t> parse_params(const std::string& text, const std::vector<std::string>& allowed)
{
    std::map<std::string, std::uint64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        auto item = text.substr(start, end - start);
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected key=value in '" + text + "'");
        }
        auto key = item.substr(0, eq);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ParseError("unknown parameter '" + key + "' in '" + text + "'");
        }
        out[key] = parse_uint(item.substr(eq + 1), key);
        start = end + 1;
    }
    for (const auto& key : allowed) {
        if (!out.contains(key)) {
            throw ParseError("missing parameter '" + key + "' in '" + text + "'");
        }
    }
    return out;
}

std::uint64_t seed_suffix(const std::string& spec, const std::string& prefix)
{
    return parse_uint(spec.substr(prefix.size()), prefix + "SEED");
}

}  // namespace

Instance load_instance(const InstanceSource& source)
{
    const auto& t = source.text;
    if (starts_with(t, "bundled:")) {
        try {
            return bundled_instance(t.substr(8));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
    if (starts_with(t, "random-sat:")) {
        auto p = parse_params(t.substr(11), {"clauses", "delta", "seed"});
        try {
            return from_cnf(random_bounded_overlap_sat(static_cast<std::uint32_t>(p["clauses"]),
                                                       static_cast<unsigned>(p["delta"]), p["seed"]))
                .instance;
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
    if (starts_with(t, "torus:")) {
        auto p = parse_params(t.substr(6), {"d", "m", "t", "b"});
        auto spec = box_torus(p["d"], static_cast<std::uint32_t>(p["m"]), p["t"], static_cast<unsigned>(p["b"]));
        try {
            return torus_instance(spec);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
    if (ends_with(t, ".json")) {
        return load_instance_json(t);
    }
    return from_cnf(load_dimacs(t, source.three_sat ? CnfMode::three_sat : CnfMode::general)).instance;
}

ExperimentConfig config_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) {
        throw ParseError("config must be a JSON object");
    }
    static const std::vector<std::string> keys = {
        "instance", "three_sat", "eps",    "radius",     "window_n", "step_cap", "first_seed", "seed_count",
        "order",    "initial",   "condition", "force",   "threads",  "max_n",    "classic",    "landscapes",
        "outputs"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ParseError("unknown config key '" + key + "'");
        }
    }
    ExperimentConfig c;
    try {
        if (!j.contains("instance")) {
            throw ParseError("config needs an 'instance'");
        }
        c.instance.text = j.at("instance").get<std::string>();
        c.instance.three_sat = j.value("three_sat", false);
        if (j.contains("eps")) {
            const auto& e = j.at("eps");
            c.eps = e.is_string() ? parse_rational(e.get<std::string>()) : parse_rational(std::to_string(e.get<int>()));
        }
        if (j.contains("radius") && !j.at("radius").is_null()) {
            c.radius = j.at("radius").get<std::uint32_t>();
        }
        if (j.contains("window_n") && !j.at("window_n").is_null()) {
            c.window_n = j.at("window_n").get<std::uint32_t>();
        }
        c.step_cap = j.value("step_cap", c.step_cap);
        c.first_seed = j.value("first_seed", c.first_seed);
        c.seed_count = j.value("seed_count", c.seed_count);
        c.order = j.value("order", c.order);
        c.initial = j.value("initial", c.initial);
        if (j.contains("condition")) {
            c.condition = parse_lll_variant(j.at("condition").get<std::string>());
        }
        c.force = j.value("force", c.force);
        c.threads = j.value("threads", c.threads);
        c.max_n = j.value("max_n", c.max_n);
        c.classic = j.value("classic", c.classic);
        c.landscapes = j.value("landscapes", c.landscapes);
        if (j.contains("outputs")) {
            const auto& o = j.at("outputs");
            for (const auto& [key, value] : o.items()) {
                if (key != "assignment" && key != "trace" && key != "csv" && key != "svg" && key != "n2_csv") {
                    throw ParseError("unknown output key '" + key + "'");
                }
            }
            c.outputs.assignment = o.value("assignment", "");
            c.outputs.trace = o.value("trace", "");
            c.outputs.csv = o.value("csv", "");
            c.outputs.svg = o.value("svg", "");
            c.outputs.n2_csv = o.value("n2_csv", "");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad config value: ") + e.what());
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
    if (c.eps <= 0 || c.eps >= 1) {
        throw ParseError("eps must lie strictly between 0 and 1");
    }
    make_order(c.order, 0);
    if (c.initial != "zero" && !starts_with(c.initial, "random:")) {
        throw ParseError("initial must be 'zero' or 'random:SEED'");
    }
    return c;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("config '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& c)
{
    nlohmann::ordered_json j;
    j["instance"] = c.instance.text;
    j["three_sat"] = c.instance.three_sat;
    j["eps"] = to_string(c.eps);
    j["radius"] = c.radius ? nlohmann::ordered_json(*c.radius) : nlohmann::ordered_json(nullptr);
    j["window_n"] = c.window_n ? nlohmann::ordered_json(*c.window_n) : nlohmann::ordered_json(nullptr);
    j["step_cap"] = c.step_cap;
    j["first_seed"] = c.first_seed;
    j["seed_count"] = c.seed_count;
    j["order"] = c.order;
    j["initial"] = c.initial;
    j["condition"] = to_string(c.condition);
    j["force"] = c.force;
    j["threads"] = c.threads;
    j["max_n"] = c.max_n;
    j["classic"] = c.classic;
    j["landscapes"] = c.landscapes;
    j["outputs"] = {{"assignment", c.outputs.assignment},
                    {"trace", c.outputs.trace},
                    {"csv", c.outputs.csv},
                    {"svg", c.outputs.svg},
                    {"n2_csv", c.outputs.n2_csv}};
    return j;
}

std::vector<Vertex> make_order(const std::string& spec, std::size_t vertex_count)
{
    auto order = index_order(vertex_count);
    if (spec == "index") {
        return order;
    }
    if (spec == "reverse") {
        std::reverse(order.begin(), order.end());
        return order;
    }
    if (starts_with(spec, "random:")) {
        std::mt19937_64 rng(seed_suffix(spec, "random:"));
        shuffle_portable(order, rng);
        return order;
    }
    throw ParseError("order must be 'index', 'reverse' or 'random:SEED', got '" + spec + "'");
}

Assignment make_initial(const std::string& spec, const Instance& inst)
{
    if (spec == "zero") {
        return zero_assignment(inst);
    }
    if (starts_with(spec, "random:")) {
        std::mt19937_64 rng(seed_suffix(spec, "random:"));
        Assignment f(inst.vertex_count());
        for (auto& d : f) {
            d = static_cast<Digit>(uniform_below(rng, inst.alphabet()));
        }
        return f;
    }
    throw ParseError("initial must be 'zero' or 'random:SEED', got '" + spec + "'");
}

PreparedExperiment prepare(const ExperimentConfig& config)
{
    return prepare(config, load_instance(config.instance));
}

PreparedExperiment prepare(const ExperimentConfig& config, Instance instance)
{
    PreparedExperiment out;
    auto inst = std::make_shared<const Instance>(std::move(instance));
    auto metric = symmetrize(inst->graph);
    if (config.window_n) {
        out.window_n = *config.window_n;
    } else {
        try {
            out.window_n = default_window_n(metric, config.eps);
        } catch (const PreconditionError&) {
            out.window_n = 0;
        }
    }
    out.radius = config.radius ? *config.radius : 3 * std::max<std::uint32_t>(out.window_n, 1);
    auto order = make_order(config.order, inst->vertex_count());
    out.engine = std::make_shared<const Engine>(inst, sparse_partition(metric, out.radius), order);
    out.initial = make_initial(config.initial, *inst);
    out.instance = std::move(inst);
    return out;
}

}  // namespace lrmt
