#pragma once

#include "lrmt/tail.hpp"

#include <string>
#include <vector>

namespace lrmt {

struct ChartSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;  ///< (x, y), y > 0
};

/// Line chart with a log10 y axis. Non-positive y values are skipped.
std::string log_chart_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                          const std::vector<ChartSeries>& series);

/// Empirical exceedance curve and, if given, the analytic one.
std::string tail_chart_svg(const TailEstimate& est, const std::vector<Rational>* analytic = nullptr);

}  // namespace lrmt
