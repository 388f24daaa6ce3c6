#pragma once

// The seven comparison baselines, all sharing the twin-array sort's report
// contract: sorted copy out, input untouched, deterministic aux_words.
//
// Auxiliary-word accounting per algorithm:
//   counting_sort     (k+1) count words + n scatter words
//   pigeonhole_sort   (k+1) hole counters
//   msd_radix_sort    513 words per partitioning call (256 bucket counters
//                     reused as fill cursors + 257 boundaries), summed over
//                     all calls
//   spreadsort        2*bins + 1 words per binning call, summed
//   flashsort         m class-boundary words, m = ceil(0.43*n)
//   bucket_sort       n bucket cursors + n element words
//   quicksort_middle  0 (in-place; recursion stack not counted)

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "twinsort/core.hpp"
#include "twinsort/twinarray.hpp"

namespace twinsort {

// Exactly the seven baselines under comparison.
enum class baseline_algo {
    counting_sort,
    pigeonhole_sort,
    msd_radix_sort,
    spreadsort,
    flashsort,
    bucket_sort,
    quicksort_middle,
};

// One partition step of the middle-pivot quicksort, for instrumented runs.
// `low` and `high` are the inclusive bounds of the subrange, `pivot_index`
// the index whose value was used as pivot.
struct pivot_record {
    std::size_t low = 0;
    std::size_t high = 0;
    std::size_t pivot_index = 0;
};

// Instrumentation output for bucket_sort.
struct bucket_stats {
    std::uint64_t bucket_count = 0;
};

// Trusted oracle for differential tests and --verify. Never benchmarked as a
// baseline.
inline std::vector<element> reference_sort(std::span<const element> input) {
    std::vector<element> out(input.begin(), input.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline void check_range_guard(std::uint64_t max_value, const sort_options& options) {
    if (max_value >= options.range_guard) {
        throw range_guard_exceeded("value range " + std::to_string(max_value) +
                                   "+1 exceeds range guard " +
                                   std::to_string(options.range_guard));
    }
}

inline void insertion_sort(element* first, element* last) noexcept {
    for (element* it = first + 1; it < last; ++it) {
        element v = *it;
        element* hole = it;
        while (hole > first && hole[-1] > v) {
            *hole = hole[-1];
            --hole;
        }
        *hole = v;
    }
}

// Hoare partition around the value at the middle index. Returns the split
// point j; [low, j] and [j+1, high] are both non-empty.
template <typename PivotSink>
inline std::size_t hoare_partition_middle(element* a, std::size_t low, std::size_t high,
                                          PivotSink&& on_pivot) noexcept {
    const std::size_t mid = low + (high - low) / 2;
    on_pivot(low, high, mid);
    const element pivot = a[mid];
    auto i = static_cast<std::int64_t>(low) - 1;
    auto j = static_cast<std::int64_t>(high) + 1;
    while (true) {
        do {
            ++i;
        } while (a[i] < pivot);
        do {
            --j;
        } while (a[j] > pivot);
        if (i >= j) {
            return static_cast<std::size_t>(j);
        }
        std::swap(a[i], a[j]);
    }
}

// Recurses into the smaller side and loops on the larger, keeping the stack
// logarithmic whatever the pivot quality.
template <typename PivotSink>
inline void quicksort_middle_range(element* a, std::size_t low, std::size_t high,
                                   PivotSink&& on_pivot) noexcept {
    while (low < high) {
        const std::size_t split = hoare_partition_middle(a, low, high, on_pivot);
        if (split - low < high - split) {
            quicksort_middle_range(a, low, split, on_pivot);
            low = split + 1;
        } else {
            quicksort_middle_range(a, split + 1, high, on_pivot);
            high = split;
        }
    }
}

inline constexpr std::size_t radix_insertion_cutoff = 32;

// American-flag permutation step on one byte, then recursion per bucket.
inline void msd_radix_range(element* first, element* last, int byte_index,
                            std::uint64_t& aux_words) {
    const auto len = static_cast<std::size_t>(last - first);
    if (len <= radix_insertion_cutoff) {
        insertion_sort(first, last);
        return;
    }
    if (byte_index < 0) {
        return; // all processed bytes equal; the range is constant
    }
    const int shift = byte_index * 8;

    std::array<std::size_t, 256> fill{};   // bucket counters, then fill cursors
    std::array<std::size_t, 257> bounds{}; // bucket boundaries
    aux_words += 513;

    for (const element* p = first; p < last; ++p) {
        ++fill[(*p >> shift) & 0xFFu];
    }
    for (std::size_t b = 0; b < 256; ++b) {
        bounds[b + 1] = bounds[b] + fill[b];
        fill[b] = bounds[b];
    }
    for (std::size_t b = 0; b < 256; ++b) {
        while (fill[b] < bounds[b + 1]) {
            element v = first[fill[b]];
            std::size_t dest = (v >> shift) & 0xFFu;
            while (dest != b) {
                std::swap(v, first[fill[dest]]);
                ++fill[dest];
                dest = (v >> shift) & 0xFFu;
            }
            first[fill[b]] = v;
            ++fill[b];
        }
    }
    for (std::size_t b = 0; b < 256; ++b) {
        msd_radix_range(first + bounds[b], first + bounds[b + 1], byte_index - 1, aux_words);
    }
}

inline constexpr std::size_t spread_comparison_cutoff = 256;
inline constexpr int spread_max_split_bits = 11;

// Simplified spreadsort: bin on the high bits of the value span, recurse,
// and hand small bins to the middle-pivot quicksort.
inline void spreadsort_range(element* first, element* last, std::uint64_t& aux_words) {
    const auto len = static_cast<std::size_t>(last - first);
    if (len <= spread_comparison_cutoff) {
        if (len > 1) {
            quicksort_middle_range(first, 0, len - 1, [](std::size_t, std::size_t, std::size_t) {});
        }
        return;
    }
    const auto [min_it, max_it] = std::minmax_element(first, last);
    const element lo = *min_it;
    const element hi = *max_it;
    if (lo == hi) {
        return;
    }
    const int span_bits = std::bit_width(hi - lo);
    const int split_bits = std::min(spread_max_split_bits, span_bits);
    const int shift = span_bits - split_bits;
    const std::size_t bins = std::size_t{1} << split_bits;

    std::vector<std::size_t> fill(bins, 0);
    std::vector<std::size_t> bounds(bins + 1, 0);
    aux_words += 2 * bins + 1;

    const auto bin_of = [lo, shift](element v) { return static_cast<std::size_t>((v - lo) >> shift); };
    for (const element* p = first; p < last; ++p) {
        ++fill[bin_of(*p)];
    }
    for (std::size_t b = 0; b < bins; ++b) {
        bounds[b + 1] = bounds[b] + fill[b];
        fill[b] = bounds[b];
    }
    for (std::size_t b = 0; b < bins; ++b) {
        while (fill[b] < bounds[b + 1]) {
            element v = first[fill[b]];
            std::size_t dest = bin_of(v);
            while (dest != b) {
                std::swap(v, first[fill[dest]]);
                ++fill[dest];
                dest = bin_of(v);
            }
            first[fill[b]] = v;
            ++fill[b];
        }
    }
    for (std::size_t b = 0; b < bins; ++b) {
        spreadsort_range(first + bounds[b], first + bounds[b + 1], aux_words);
    }
}

} // namespace detail

// Classic counting sort: count, exclusive prefix sums, stable scatter.
inline sort_report counting_sort(std::span<const element> input,
                                 const sort_options& options = {}) {
    sort_report report;
    if (input.empty()) {
        return report;
    }
    const std::uint64_t k = find_max(input);
    detail::check_range_guard(k, options);
    report.max_value = k;

    std::vector<std::uint64_t> counts(k + 1, 0);
    for (const element v : input) {
        ++counts[v];
    }
    std::uint64_t running = 0;
    for (auto& c : counts) {
        const std::uint64_t next = running + c;
        c = running;
        running = next;
    }
    report.output.resize(input.size());
    for (const element v : input) {
        report.output[counts[v]++] = v;
    }
    report.aux_words = (k + 1) + input.size();
    return report;
}

// Pigeonhole sort with k+1 holes. Values are bare integers, so each hole is
// just a multiplicity counter and the output is emitted hole by hole.
inline sort_report pigeonhole_sort(std::span<const element> input,
                                   const sort_options& options = {}) {
    sort_report report;
    if (input.empty()) {
        return report;
    }
    const std::uint64_t k = find_max(input);
    detail::check_range_guard(k, options);
    report.max_value = k;

    std::vector<std::uint64_t> holes(k + 1, 0);
    for (const element v : input) {
        ++holes[v];
    }
    report.output.reserve(input.size());
    for (std::uint64_t v = 0; v <= k; ++v) {
        for (std::uint64_t c = holes[v]; c != 0; --c) {
            report.output.push_back(v);
        }
    }
    report.aux_words = k + 1;
    return report;
}

// Byte-wise MSD radix sort, base 256, starting at the highest byte the
// maximum actually uses, with an insertion-sort cutoff at 32 elements.
inline sort_report msd_radix_sort(std::span<const element> input,
                                  const sort_options& = {}) {
    sort_report report;
    report.output.assign(input.begin(), input.end());
    if (input.empty()) {
        return report;
    }
    const std::uint64_t k = find_max(input);
    report.max_value = k;
    const int top_byte = (std::bit_width(k) + 7) / 8 - 1;
    if (top_byte >= 0) {
        detail::msd_radix_range(report.output.data(),
                                report.output.data() + report.output.size(), top_byte,
                                report.aux_words);
    }
    return report;
}

// Simplified spreadsort hybrid: high-bit radix binning with a quicksort
// fall-back on bins of at most 256 elements.
inline sort_report spreadsort(std::span<const element> input,
                              const sort_options& = {}) {
    sort_report report;
    report.output.assign(input.begin(), input.end());
    if (input.empty()) {
        return report;
    }
    report.max_value = find_max(input);
    detail::spreadsort_range(report.output.data(),
                             report.output.data() + report.output.size(),
                             report.aux_words);
    return report;
}

// Neubert's flashsort: m = ceil(0.43*n) classes, cycle-leader permutation
// into class regions, then one insertion-sort pass to finish.
inline sort_report flashsort(std::span<const element> input,
                             const sort_options& = {}) {
    sort_report report;
    report.output.assign(input.begin(), input.end());
    if (input.size() <= 1) {
        if (!input.empty()) {
            report.max_value = input.front();
        }
        return report;
    }
    element* a = report.output.data();
    const std::size_t n = report.output.size();

    std::size_t max_index = 0;
    element lo = a[0];
    element hi = a[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (a[i] < lo) {
            lo = a[i];
        }
        if (a[i] > hi) {
            hi = a[i];
            max_index = i;
        }
    }
    report.max_value = hi;
    if (lo == hi) {
        return report; // constant input, nothing to permute
    }

    const std::uint64_t m = (std::uint64_t{43} * n + 99) / 100; // ceil(0.43*n)
    const element width = hi - lo;
    const auto class_of = [m, lo, width](element v) {
        // exact in 128 bits; (m-1)*(v-lo) overflows 64 for wide ranges
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(m - 1) * (v - lo) / width);
    };

    std::vector<std::uint64_t> bounds(m, 0);
    report.aux_words = m;
    for (std::size_t i = 0; i < n; ++i) {
        ++bounds[class_of(a[i])];
    }
    for (std::uint64_t c = 1; c < m; ++c) {
        bounds[c] += bounds[c - 1];
    }

    // Cycle-leader permutation; bounds[c] decrements as class c fills from
    // the top of its region, so a cycle closes exactly when a placement
    // lands back on the scan position. `cls` tracks the class of the last
    // element placed; the closing placement can belong to a different class
    // than the element the cycle started with, so the boundary test must
    // follow it. Starting from the maximum puts the first cycle in the last
    // class.
    std::swap(a[0], a[max_index]);
    std::size_t moved = 0;
    std::size_t scan = 0;
    std::uint64_t cls = m - 1;
    while (moved < n - 1) {
        while (scan >= bounds[cls]) {
            ++scan;
            cls = class_of(a[scan]);
        }
        element cycle = a[scan];
        while (scan != bounds[cls]) {
            cls = class_of(cycle);
            std::swap(cycle, a[--bounds[cls]]);
            ++moved;
        }
    }

    detail::insertion_sort(a, a + n);
    return report;
}

// Bucket sort with exactly n buckets (bucket b covers values with
// v*n/(k+1) == b), flat storage, and insertion sort per bucket.
inline sort_report bucket_sort(std::span<const element> input,
                               const sort_options& = {},
                               bucket_stats* stats = nullptr) {
    sort_report report;
    if (stats != nullptr) {
        stats->bucket_count = input.size();
    }
    if (input.empty()) {
        return report;
    }
    const std::uint64_t k = find_max(input);
    report.max_value = k;
    const std::size_t n = input.size();

    // k+1 as a 128-bit value so k == 2^64-1 cannot wrap.
    const auto slots = static_cast<unsigned __int128>(k) + 1;
    const auto bucket_of = [n, slots](element v) {
        return static_cast<std::size_t>(static_cast<unsigned __int128>(v) * n / slots);
    };

    std::vector<std::size_t> cursors(n, 0);
    std::vector<element> stash(n);
    report.aux_words = static_cast<std::uint64_t>(n) + n;

    for (const element v : input) {
        ++cursors[bucket_of(v)];
    }
    std::size_t running = 0;
    for (auto& c : cursors) {
        const std::size_t next = running + c;
        c = running;
        running = next;
    }
    for (const element v : input) {
        stash[cursors[bucket_of(v)]++] = v;
    }
    // cursors[b] is now one past the end of bucket b.
    std::size_t begin = 0;
    for (std::size_t b = 0; b < n; ++b) {
        detail::insertion_sort(stash.data() + begin, stash.data() + cursors[b]);
        begin = cursors[b];
    }
    report.output = std::move(stash);
    return report;
}

// Recursive quicksort with the pivot always taken from the middle of the
// subrange and Hoare partitioning. `trace` records every partition step for
// instrumented runs.
inline sort_report quicksort_middle(std::span<const element> input,
                                    const sort_options& = {},
                                    std::vector<pivot_record>* trace = nullptr) {
    sort_report report;
    report.output.assign(input.begin(), input.end());
    if (input.empty()) {
        return report;
    }
    report.max_value = find_max(input);
    if (report.output.size() > 1) {
        if (trace != nullptr) {
            detail::quicksort_middle_range(
                report.output.data(), 0, report.output.size() - 1,
                [trace](std::size_t low, std::size_t high, std::size_t pivot_index) {
                    trace->push_back({low, high, pivot_index});
                });
        } else {
            detail::quicksort_middle_range(report.output.data(), 0, report.output.size() - 1,
                                           [](std::size_t, std::size_t, std::size_t) {});
        }
    }
    return report;
}

inline sort_report baseline_sort(baseline_algo algo, std::span<const element> input,
                                 const sort_options& options = {}) {
    switch (algo) {
    case baseline_algo::counting_sort:
        return counting_sort(input, options);
    case baseline_algo::pigeonhole_sort:
        return pigeonhole_sort(input, options);
    case baseline_algo::msd_radix_sort:
        return msd_radix_sort(input, options);
    case baseline_algo::spreadsort:
        return spreadsort(input, options);
    case baseline_algo::flashsort:
        return flashsort(input, options);
    case baseline_algo::bucket_sort:
        return bucket_sort(input, options);
    case baseline_algo::quicksort_middle:
        return quicksort_middle(input, options);
    }
    throw spec_invalid("unknown baseline algorithm id");
}

} // namespace twinsort
