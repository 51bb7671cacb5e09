#pragma once

#include "lrmt/engine.hpp"
#include "lrmt/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lrmt {

struct TailConfig {
    std::shared_ptr<const Engine> engine;
    Assignment initial;  ///< empty means f = 0
    std::uint64_t first_seed = 0;
    std::size_t samples = 0;
    std::uint32_t max_n = 10;  ///< rows N = 0..max_n
    std::size_t step_cap = 1000;
    unsigned threads = 0;  ///< 0 = hardware concurrency
    bool classic = false;  ///< fresh-randomness baseline instead of shared streams
    /// Also record N2 = |V(K)| per run, with K the landscape restricted to the
    /// window found by scan_window(eps, window_n).
    bool landscapes = false;
    Rational eps{1, 2};
    std::uint32_t window_n = 0;  ///< 0 = default_window_n
};

struct TailRow {
    std::uint32_t n = 0;
    std::size_t trials = 0;
    std::size_t exceedances = 0;  ///< runs with max resamples > n
    double p_hat = 0;
    double ci_half = 0;  ///< 1.96 sqrt(p (1 - p) / trials)
};

/// Weighted least squares fit of log_b P-hat(N) = a + slope N over rows with
/// at least `min_exceedances` exceedances.
struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    double se = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::size_t points = 0;
};

struct N2Row {
    std::uint64_t n2 = 0;
    std::size_t count = 0;
    double p = 0;  ///< P(N2 = n2)
    double q = 0;  ///< Q(n2) = P(N2 > n2)
};

struct TailEstimate {
    std::size_t samples = 0;
    std::size_t cap_exceeded = 0;
    std::vector<std::uint32_t> max_resamples;  ///< per seed, in seed order
    std::vector<TailRow> rows;
    std::optional<SlopeFit> slope;
    std::size_t n2_samples = 0;  ///< runs for which a window existed
    std::vector<N2Row> n2_rows;
};

inline constexpr std::size_t min_fit_exceedances = 30;

TailEstimate tail_estimate(const TailConfig& config);

std::optional<SlopeFit> fit_slope(const std::vector<TailRow>& rows, unsigned b,
                                  std::size_t min_exceedances = min_fit_exceedances);

/// Exact P(max_x h(x) > N) for the unbounded algorithm when Rel(G) has
/// maximum degree <= 1. Clauses reading the same tuple of parts see the same
/// digit words; distinct tuples must use disjoint parts.
Rational analytic_tail_delta1(const Engine& engine, const Assignment& f, std::uint32_t n);

/// CSV with header N,trials,exceedances,p_hat,ci95_half[,analytic].
std::string tail_csv(const TailEstimate& est, const std::vector<Rational>* analytic = nullptr);

std::string n2_csv(const TailEstimate& est);

/// printf-style %.12g, locale independent.
std::string format_double(double v);

}  // namespace lrmt
