#pragma once

#include "lrmt/instance.hpp"
#include "lrmt/rational.hpp"

#include <string>

namespace lrmt {

enum class LllVariant {
    symmetric_e,  ///< p(x) < 1 / (e Delta)
    tight,        ///< p(x) < (Delta - 1)^(Delta - 1) / Delta^Delta
};

std::string to_string(LllVariant v);
LllVariant parse_lll_variant(const std::string& text);

struct LllReport {
    LllVariant variant = LllVariant::tight;
    std::size_t delta = 0;
    Rational threshold;
    Rational max_prob;
    Rational margin;  ///< threshold - max_prob
    VertexSet failing;
    bool passed = false;
};

/// Threshold for a given Delta (Delta = 1 gives 1 in the tight variant).
Rational lll_threshold(LllVariant variant, std::size_t delta);

LllReport check_lll_condition(const Instance& inst, const RelGraph& rel, LllVariant variant);

}  // namespace lrmt
