#pragma once

// Correlation and growth-rate estimation over benchmark series.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "twinsort/core.hpp"

namespace twinsort {

// Output of a log-log least-squares fit. A slope near 1 with high r² is the
// empirical signature of linear growth.
struct analysis_result {
    double pearson_r = 0.0;
    double loglog_slope = 0.0;
    double fit_r2 = 0.0;
};

// Median of the values; the argument is taken by value because computing it
// reorders the data.
inline double median(std::vector<double> values) {
    if (values.empty()) {
        throw degenerate_input("median of an empty sequence");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    return (values[mid - 1] + values[mid]) / 2.0;
}

// Pearson product-moment correlation, two-pass form: means first, then
// centered co-moments. Clamped to [-1, 1] so exact linear data cannot drift
// past the mathematical bound through rounding.
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw degenerate_input("correlation needs series of equal length");
    }
    if (xs.size() < 2) {
        throw degenerate_input("correlation needs at least 2 points");
    }
    const auto n = static_cast<double>(xs.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw degenerate_input("correlation undefined for a zero-variance series");
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

namespace detail {

// Least-squares line through (xs, ys); also reports the correlation, whose
// square is the fraction of variance the line explains.
struct line_fit {
    double slope = 0.0;
    double r = 0.0;
};

inline line_fit fit_line(std::span<const double> xs, std::span<const double> ys) {
    const auto n = static_cast<double>(xs.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0) {
        throw degenerate_input("slope undefined for a zero-variance abscissa");
    }
    line_fit fit;
    fit.slope = sxy / sxx;
    fit.r = (syy == 0.0) ? 1.0 : std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    return fit;
}

} // namespace detail

// Growth-exponent estimate: least-squares slope of log(t) against log(n).
// Exact power laws t = c*n^a give slope a and r² = 1.
inline analysis_result loglog_slope(std::span<const std::uint64_t> ns,
                                    std::span<const double> ts) {
    if (ns.size() != ts.size()) {
        throw degenerate_input("slope fit needs series of equal length");
    }
    if (ns.size() < 3) {
        throw degenerate_input("slope fit needs at least 3 points");
    }
    std::vector<double> log_n;
    std::vector<double> log_t;
    log_n.reserve(ns.size());
    log_t.reserve(ts.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 1 || !(ts[i] > 0.0)) {
            throw degenerate_input("slope fit needs n >= 1 and t > 0");
        }
        log_n.push_back(std::log(static_cast<double>(ns[i])));
        log_t.push_back(std::log(ts[i]));
    }
    const detail::line_fit fit = detail::fit_line(log_n, log_t);
    analysis_result result;
    result.loglog_slope = fit.slope;
    result.pearson_r = fit.r;
    result.fit_r2 = fit.r * fit.r;
    return result;
}

} // namespace twinsort
