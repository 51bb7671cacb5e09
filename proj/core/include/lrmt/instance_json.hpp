#pragma once

#include "lrmt/instance.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace lrmt {

inline constexpr const char* instance_format_tag = "lrmt-instance/1";

nlohmann::ordered_json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

/// Serialised with two-space indentation and a trailing newline.
std::string dump_instance(const Instance& inst);
Instance load_instance_json(const std::string& path);
void save_instance_json(const Instance& inst, const std::string& path);

/// Digit characters 0-9a-z; alphabets above 36 cannot be written as strings.
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s, unsigned b);

}  // namespace lrmt
