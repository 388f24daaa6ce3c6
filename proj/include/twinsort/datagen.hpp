#pragma once

// Deterministic dataset generation. Every distribution consumes a single
// splitmix64 stream seeded from the spec, in a pinned call order, so a
// (dist, n, k, seed) tuple always yields byte-identical data.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "twinsort/core.hpp"
#include "twinsort/prng.hpp"

namespace twinsort {

enum class distribution_kind {
    random,     // n independent draws from [0, k]
    reversed,   // the random draws, sorted descending
    nsorted,    // the random draws sorted ascending, then 5% displaced
    u_random,   // n distinct values from [0, k], uniformly permuted
    u_reversed, // n distinct values, sorted descending
    u_nsorted,  // n distinct values sorted ascending, then 5% displaced
};

inline constexpr distribution_kind all_distributions[] = {
    distribution_kind::random,   distribution_kind::reversed,
    distribution_kind::nsorted,  distribution_kind::u_random,
    distribution_kind::u_reversed, distribution_kind::u_nsorted,
};

inline std::string to_string(distribution_kind d) {
    switch (d) {
    case distribution_kind::random:
        return "random";
    case distribution_kind::reversed:
        return "reversed";
    case distribution_kind::nsorted:
        return "nsorted";
    case distribution_kind::u_random:
        return "u_random";
    case distribution_kind::u_reversed:
        return "u_reversed";
    case distribution_kind::u_nsorted:
        return "u_nsorted";
    }
    return "unknown";
}

inline std::optional<distribution_kind> parse_distribution(std::string_view name) {
    for (const distribution_kind d : all_distributions) {
        if (name == to_string(d)) {
            return d;
        }
    }
    return std::nullopt;
}

inline constexpr bool requires_unique(distribution_kind d) {
    return d == distribution_kind::u_random || d == distribution_kind::u_reversed ||
           d == distribution_kind::u_nsorted;
}

// Fraction of elements displaced by the nearly-sorted distributions.
inline constexpr double default_displacement = 0.05;

struct dataset_spec {
    distribution_kind dist = distribution_kind::random;
    std::uint64_t n = 0;
    std::uint64_t k = 0; // inclusive maximum value
    std::uint64_t seed = 0;
    double displacement = default_displacement; // nsorted / u_nsorted only
};

// Unique distributions need n distinct values in [0, k]. The size condition
// is phrased as n-1 > k so k = 2^64-1 cannot wrap.
inline void validate(const dataset_spec& spec) {
    if (requires_unique(spec.dist) && spec.n > 0 && spec.n - 1 > spec.k) {
        throw spec_invalid("unique distribution needs n <= k+1, got n=" +
                           std::to_string(spec.n) + " k=" + std::to_string(spec.k));
    }
    if (!(spec.displacement >= 0.0 && spec.displacement <= 1.0)) {
        throw spec_invalid("displacement fraction must lie in [0, 1]");
    }
}

namespace detail {

// One value uniform on [0, upper]. upper+1 wraps to zero only for the full
// 64-bit range, where the raw stream is already uniform.
inline std::uint64_t draw_value(prng& rng, std::uint64_t upper) {
    if (upper == std::numeric_limits<std::uint64_t>::max()) {
        return rng.next();
    }
    return rng.below(upper + 1);
}

} // namespace detail

inline std::vector<element> draw_random(prng& rng, std::uint64_t n, std::uint64_t k) {
    std::vector<element> values;
    values.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        values.push_back(detail::draw_value(rng, k));
    }
    return values;
}

// Floyd's sampling: n distinct values from [0, k] with each subset equally
// likely, in O(n) draws. Output order is the insertion order of the
// accepted candidates, which is biased toward ascending; callers wanting a
// uniform permutation shuffle afterwards.
inline std::vector<element> floyd_sample(prng& rng, std::uint64_t n, std::uint64_t k) {
    std::vector<element> values;
    values.reserve(n);
    std::unordered_set<element> chosen;
    chosen.reserve(n * 2);
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t upper = k - (n - 1) + i;
        std::uint64_t candidate = detail::draw_value(rng, upper);
        if (!chosen.insert(candidate).second) {
            candidate = upper;
            chosen.insert(candidate);
        }
        values.push_back(candidate);
    }
    return values;
}

inline void fisher_yates(prng& rng, std::vector<element>& values) {
    for (std::uint64_t i = values.size(); i > 1; --i) {
        const std::uint64_t j = rng.below(i);
        std::swap(values[i - 1], values[j]);
    }
}

// Number of elements to displace: ceil(fraction*n), with results within
// floating-point noise of an integer snapped to it so e.g. 0.05*1000 stays
// exactly 50.
inline std::uint64_t displaced_count(std::uint64_t n, double fraction) {
    const double x = fraction * static_cast<double>(n);
    const double nearest = std::round(x);
    const bool snap = std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x));
    return static_cast<std::uint64_t>(snap ? nearest : std::ceil(x));
}

// Perturbs a sorted vector by swapping random distinct pairs. Each swap
// displaces two elements, so ceil(fraction*n) displaced elements means
// ceil of half that many swaps.
inline void displace(prng& rng, std::vector<element>& values,
                     double fraction = default_displacement) {
    const std::uint64_t n = values.size();
    if (n < 2) {
        return;
    }
    const std::uint64_t swaps = (displaced_count(n, fraction) + 1) / 2;
    for (std::uint64_t s = 0; s < swaps; ++s) {
        const std::uint64_t i = rng.below(n);
        std::uint64_t j = rng.below(n - 1);
        j += (j >= i) ? 1 : 0;
        std::swap(values[i], values[j]);
    }
}

inline std::vector<element> generate(const dataset_spec& spec) {
    validate(spec);
    prng rng(spec.seed);
    switch (spec.dist) {
    case distribution_kind::random:
        return draw_random(rng, spec.n, spec.k);
    case distribution_kind::reversed: {
        auto values = draw_random(rng, spec.n, spec.k);
        std::sort(values.begin(), values.end(), std::greater<>{});
        return values;
    }
    case distribution_kind::nsorted: {
        auto values = draw_random(rng, spec.n, spec.k);
        std::sort(values.begin(), values.end());
        displace(rng, values, spec.displacement);
        return values;
    }
    case distribution_kind::u_random: {
        auto values = floyd_sample(rng, spec.n, spec.k);
        fisher_yates(rng, values);
        return values;
    }
    case distribution_kind::u_reversed: {
        auto values = floyd_sample(rng, spec.n, spec.k);
        std::sort(values.begin(), values.end(), std::greater<>{});
        return values;
    }
    case distribution_kind::u_nsorted: {
        auto values = floyd_sample(rng, spec.n, spec.k);
        std::sort(values.begin(), values.end());
        displace(rng, values, spec.displacement);
        return values;
    }
    }
    throw spec_invalid("unknown distribution kind");
}

} // namespace twinsort
