#include "lrmt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lrmt {

namespace {

constexpr double width = 640;
constexpr double height = 420;
constexpr double left = 70;
constexpr double right = 150;
constexpr double top = 40;
constexpr double bottom = 50;

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v)
{
    return format_double(std::round(v * 100) / 100);
}

}  // namespace

std::string log_chart_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                          const std::vector<ChartSeries>& series)
{
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const auto& s : series) {
        for (auto [x, y] : s.points) {
            if (y <= 0) {
                continue;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, std::log10(y));
            ymax = std::max(ymax, std::log10(y));
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = 0;
        xmax = 1;
        ymin = -1;
        ymax = 0;
    }
    if (xmax == xmin) {
        xmax = xmin + 1;
    }
    ymin = std::floor(ymin);
    ymax = std::ceil(ymax);
    if (ymax == ymin) {
        ymax = ymin + 1;
    }
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double ly) { return top + (ymax - ly) / (ymax - ymin) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
      << "</text>\n";
    for (double d = ymin; d <= ymax + 1e-9; d += 1) {
        o << "<line x1=\"" << left << "\" x2=\"" << left + pw << "\" y1=\"" << num(sy(d)) << "\" y2=\"" << num(sy(d))
          << "\" stroke=\"#ddd\"/>\n";
        o << "<text x=\"" << left - 6 << "\" y=\"" << num(sy(d) + 4) << "\" text-anchor=\"end\">1e" << d
          << "</text>\n";
    }
    const double xstep = std::max(1.0, std::ceil((xmax - xmin) / 10));
    for (double x = xmin; x <= xmax + 1e-9; x += xstep) {
        o << "<text x=\"" << num(sx(x)) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
          << format_double(x) << "</text>\n";
    }
    o << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    o << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">" << escape(x_label)
      << "</text>\n";
    o << "<text transform=\"translate(18," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(y_label) << "</text>\n";

    double ly = top + 10;
    for (const auto& s : series) {
        std::ostringstream path;
        for (auto [x, y] : s.points) {
            if (y > 0) {
                path << (path.tellp() == 0 ? "" : " ") << num(sx(x)) << ',' << num(sy(std::log10(y)));
            }
        }
        o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\" points=\"" << path.str()
          << "\"/>\n";
        for (auto [x, y] : s.points) {
            if (y > 0) {
                o << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(std::log10(y))) << "\" r=\"3\" fill=\""
                  << s.color << "\"/>\n";
            }
        }
        o << "<line x1=\"" << left + pw + 10 << "\" x2=\"" << left + pw + 30 << "\" y1=\"" << ly << "\" y2=\"" << ly
          << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << left + pw + 35 << "\" y=\"" << ly + 4 << "\">" << escape(s.label) << "</text>\n";
        ly += 18;
    }
    o << "</svg>\n";
    return o.str();
}

std::string tail_chart_svg(const TailEstimate& est, const std::vector<Rational>* analytic)
{
    std::vector<ChartSeries> series;
    ChartSeries emp{"empirical", "#1f77b4", {}};
    for (const auto& r : est.rows) {
        emp.points.emplace_back(r.n, r.p_hat);
    }
    series.push_back(std::move(emp));
    if (analytic != nullptr) {
        ChartSeries an{"analytic", "#d62728", {}};
        for (std::size_t i = 0; i < analytic->size(); ++i) {
            an.points.emplace_back(static_cast<double>(i), to_double((*analytic)[i]));
        }
        series.push_back(std::move(an));
    }
    return log_chart_svg("Exceedance P(max resamples > N)", "N", "probability", series);
}

}  // namespace lrmt
