#pragma once

// Twin-array sort: a counting-sort variant that sizes two auxiliary arrays
// (one for values, one for multiplicities) by the input maximum, then picks
// one of two reconstruction strategies depending on whether a verification
// pass finds any duplicate values.
//
//   1. max-scan: one pass over the input to find k, the largest value.
//   2. populate: values[v] = v and counts[v] += 1 for every input element.
//      Both arrays have k+1 slots.
//   3. verify: scan counts for any multiplicity above one.
//   4. reconstruct:
//        - distinct path  (no duplicates): emit the occupied value slots in
//          ascending order. Occupancy is decided by counts, never by the
//          values array itself, because an empty slot and a stored value of
//          zero are indistinguishable there; a single zero is emitted first
//          when counts[0] == 1.
//        - frequency path (duplicates): emit each value i counts[i] times.
//          Zeros flow naturally from counts[0].
//
// Time is O(n + k): one pass over the input, a constant number of passes
// over the k+1 slots. Auxiliary space is exactly 2*(k+1) words, which is
// what sort_report::aux_words records.

#include <bit>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "twinsort/core.hpp"

namespace twinsort {

// The two k+1-slot auxiliary arrays. Slot i of `values` holds i when value i
// occurred in the input and the zero sentinel otherwise; `counts[i]` is the
// multiplicity of value i. counts is authoritative for occupancy.
struct twin_arrays {
    std::vector<element> values;
    std::vector<std::uint64_t> counts;
    std::uint64_t max_value = 0;
};

// Single left-to-right scan for the maximum. The top-level sort handles the
// empty case before ever calling this.
inline std::uint64_t find_max(std::span<const element> input) {
    if (input.empty()) {
        throw empty_input("find_max on empty input");
    }
    element best = input.front();
    for (const element v : input.subspan(1)) {
        if (v > best) {
            best = v;
        }
    }
    return best;
}

// One pass over the input populating both arrays. `max_value` must be the
// input maximum (the caller's max-scan result).
inline twin_arrays build_twin_arrays(std::span<const element> input,
                                     std::uint64_t max_value,
                                     const sort_options& options = {}) {
    if (max_value >= options.range_guard) {
        throw range_guard_exceeded("twin arrays would need " +
                                   std::to_string(max_value) +
                                   "+1 slots, range guard is " +
                                   std::to_string(options.range_guard));
    }
    twin_arrays twin;
    twin.max_value = max_value;
    twin.values.assign(max_value + 1, 0);
    twin.counts.assign(max_value + 1, 0);
    for (const element v : input) {
        assert(v <= max_value);
        twin.counts[v] += 1;
        twin.values[v] = v;
    }
    return twin;
}

// The verifier: true iff any multiplicity exceeds one. Short-circuits on the
// first duplicate found.
inline bool has_duplicates(const twin_arrays& twin) noexcept {
    for (const std::uint64_t c : twin.counts) {
        if (c > 1) {
            return true;
        }
    }
    return false;
}

namespace detail {

inline std::uint64_t occupied_total(const twin_arrays& twin) noexcept {
    return std::accumulate(twin.counts.begin(), twin.counts.end(), std::uint64_t{0});
}

// Distinct-path extraction into a pre-sized buffer. All multiplicities are
// 0 or 1 here, so the emit step is a branch-free gather: the store always
// happens, the cursor only advances for occupied slots. Slot 0 needs no
// special case because counts gates the advance.
inline void extract_distinct(const twin_arrays& twin, std::vector<element>& out) noexcept {
    const element* values = twin.values.data();
    const std::uint64_t* counts = twin.counts.data();
    const std::size_t slots = twin.counts.size();
    element* dst = out.data();
    std::size_t pos = 0;
    for (std::size_t i = 0; i < slots; ++i) {
        dst[pos] = values[i];
        pos += counts[i] != 0;
    }
    assert(pos == out.size());
}

// Frequency-path emission into a pre-sized buffer: value i written counts[i]
// times, ascending i.
inline void emit_frequency(const twin_arrays& twin, std::vector<element>& out) noexcept {
    const std::uint64_t* counts = twin.counts.data();
    const std::size_t slots = twin.counts.size();
    element* dst = out.data();
    std::size_t pos = 0;
    for (std::size_t i = 0; i < slots; ++i) {
        for (std::uint64_t c = counts[i]; c != 0; --c) {
            dst[pos++] = static_cast<element>(i);
        }
    }
    assert(pos == out.size());
}

} // namespace detail

// Occupied values in ascending slot order. Only valid on duplicate-free twin
// arrays; reconstruct_frequency handles every multiplicity profile.
inline std::vector<element> reconstruct_distinct(const twin_arrays& twin) {
    if (has_duplicates(twin)) {
        throw path_misuse("reconstruct_distinct on twin arrays with duplicates");
    }
    std::vector<element> out(detail::occupied_total(twin));
    detail::extract_distinct(twin, out);
    return out;
}

// Each value i repeated counts[i] times, ascending i.
inline std::vector<element> reconstruct_frequency(const twin_arrays& twin) {
    std::vector<element> out(detail::occupied_total(twin));
    detail::emit_frequency(twin, out);
    return out;
}

inline sort_report twinarray_sort(std::span<const element> input,
                                  const sort_options& options = {}) {
    sort_report report;
    if (input.empty()) {
        // No max-scan, no allocation; the distinct path is the vacuous one.
        report.path = sort_path::distinct;
        return report;
    }
    const std::uint64_t k = find_max(input);
    const twin_arrays twin = build_twin_arrays(input, k, options);
    report.max_value = k;
    report.aux_words = 2 * (k + 1);
    report.output.resize(input.size());
    if (has_duplicates(twin)) {
        report.path = sort_path::frequency;
        detail::emit_frequency(twin, report.output);
    } else {
        // The verifier just established the distinct-path precondition, so
        // skip the public wrapper's re-check.
        report.path = sort_path::distinct;
        detail::extract_distinct(twin, report.output);
    }
    return report;
}

} // namespace twinsort
