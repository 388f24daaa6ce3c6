#pragma once

// Shared vocabulary for the sorting library: the element type, the report
// every sort returns, tuning options, and the error taxonomy.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twinsort {

// Keys are unsigned 64-bit integers; non-negativity is structural.
using element = std::uint64_t;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// find_max called on an empty sequence.
class empty_input : public error {
public:
    using error::error;
};

// A value-indexed algorithm would need more than options.range_guard slots.
class range_guard_exceeded : public error {
public:
    using error::error;
};

// reconstruct_distinct called on twin arrays that contain duplicates.
class path_misuse : public error {
public:
    using error::error;
};

// uniform draw requested from an empty range.
class zero_bound : public error {
public:
    using error::error;
};

// A dataset spec or harness configuration violates its invariants.
class spec_invalid : public error {
public:
    using error::error;
};

// A statistic was requested on data with no variance or too few points.
class degenerate_input : public error {
public:
    using error::error;
};

// Filesystem-level read/write failure.
class io_error : public error {
public:
    using error::error;
};

// A dataset file does not conform to the TAS1 layout.
class malformed_file : public error {
public:
    using error::error;
};

// A CSV input does not conform to the trial-record schema.
class malformed_csv : public error {
public:
    using error::error;
};

// Which reconstruction strategy the twin-array sort took.
enum class sort_path { distinct, frequency };

inline const char* to_string(sort_path path) noexcept {
    return path == sort_path::distinct ? "distinct" : "frequency";
}

struct sort_options {
    // Maximum number of slots (max_value + 1) a value-indexed algorithm may
    // allocate per auxiliary array. Exceeding it raises range_guard_exceeded
    // instead of attempting a doomed allocation.
    std::uint64_t range_guard = std::uint64_t{1} << 32;
};

// Result of one sort invocation. `output` is a sorted copy; the input is
// never modified. `aux_words` is the deterministic count of auxiliary
// machine words the algorithm allocated (see each algorithm's accounting
// note), independent of timing and machine. `path` is set by the twin-array
// sort only.
struct sort_report {
    std::vector<element> output;
    std::optional<sort_path> path;
    std::uint64_t aux_words = 0;
    std::uint64_t max_value = 0;
};

} // namespace twinsort
