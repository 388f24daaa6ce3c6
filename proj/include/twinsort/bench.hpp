#pragma once

// Benchmark harness: wall-clock timing with a verification gate, grid
// orchestration, the k-sweep behind the correlation analysis, and the CSV
// trial log.
//
// Measurement contract: the clock brackets the sort call alone. Dataset
// generation, the reference sort, and output verification all happen
// outside the timed region. Trials are strictly serialized.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twinsort/analysis.hpp"
#include "twinsort/baselines.hpp"
#include "twinsort/core.hpp"
#include "twinsort/datagen.hpp"
#include "twinsort/prng.hpp"
#include "twinsort/twinarray.hpp"

namespace twinsort {

// The eight algorithms under measurement.
enum class algo_id {
    twinarray,
    counting,
    pigeonhole,
    msd_radix,
    spreadsort,
    flashsort,
    bucket,
    quicksort,
};

inline constexpr algo_id all_algos[] = {
    algo_id::twinarray, algo_id::counting,  algo_id::pigeonhole, algo_id::msd_radix,
    algo_id::spreadsort, algo_id::flashsort, algo_id::bucket,     algo_id::quicksort,
};

inline std::string to_string(algo_id algo) {
    switch (algo) {
    case algo_id::twinarray:
        return "twinarray";
    case algo_id::counting:
        return "counting";
    case algo_id::pigeonhole:
        return "pigeonhole";
    case algo_id::msd_radix:
        return "msd_radix";
    case algo_id::spreadsort:
        return "spreadsort";
    case algo_id::flashsort:
        return "flashsort";
    case algo_id::bucket:
        return "bucket";
    case algo_id::quicksort:
        return "quicksort";
    }
    return "unknown";
}

inline std::optional<algo_id> parse_algo(std::string_view name) {
    for (const algo_id algo : all_algos) {
        if (name == to_string(algo)) {
            return algo;
        }
    }
    return std::nullopt;
}

inline sort_report run_sort(algo_id algo, std::span<const element> input,
                            const sort_options& options = {}) {
    switch (algo) {
    case algo_id::twinarray:
        return twinarray_sort(input, options);
    case algo_id::counting:
        return baseline_sort(baseline_algo::counting_sort, input, options);
    case algo_id::pigeonhole:
        return baseline_sort(baseline_algo::pigeonhole_sort, input, options);
    case algo_id::msd_radix:
        return baseline_sort(baseline_algo::msd_radix_sort, input, options);
    case algo_id::spreadsort:
        return baseline_sort(baseline_algo::spreadsort, input, options);
    case algo_id::flashsort:
        return baseline_sort(baseline_algo::flashsort, input, options);
    case algo_id::bucket:
        return baseline_sort(baseline_algo::bucket_sort, input, options);
    case algo_id::quicksort:
        return baseline_sort(baseline_algo::quicksort_middle, input, options);
    }
    throw spec_invalid("unknown algorithm id");
}

// One benchmark measurement. rep is 1-based; rep == 0 together with
// ok == false marks a cell that failed (sort error or verification
// mismatch) and carries no timing.
//
// k is the dataset's maximum value as found by the sort's max-scan, the
// quantity auxiliary structures are sized by. The generation-time bound can
// exceed it (a Random draw rarely attains its bound); failure markers fall
// back to the bound because no scan ran.
struct trial_record {
    algo_id algo = algo_id::twinarray;
    distribution_kind dist = distribution_kind::random;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t seed = 0;
    std::uint64_t rep = 0;
    double wall_time_s = 0.0;
    std::uint64_t aux_words = 0;
    std::optional<sort_path> path; // engaged only for twinarray
    bool ok = true;
};

// Dataset identity attached to every record of a cell.
struct trial_label {
    distribution_kind dist = distribution_kind::random;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t seed = 0;
};

namespace detail {

inline trial_record failed_marker(algo_id algo, const trial_label& label) {
    trial_record record;
    record.algo = algo;
    record.dist = label.dist;
    record.n = label.n;
    record.k = label.k;
    record.seed = label.seed;
    record.ok = false;
    return record;
}

} // namespace detail

// Times `reps` runs of one algorithm on one input. The output of the first
// run is checked against reference_sort; a mismatch or a sort error yields
// a single failure marker and no timing records.
inline std::vector<trial_record> time_sort(algo_id algo, const trial_label& label,
                                           std::span<const element> input,
                                           std::uint64_t reps,
                                           const sort_options& options = {}) {
    if (reps < 1) {
        throw spec_invalid("time_sort needs reps >= 1");
    }
    const std::vector<element> expected = reference_sort(input);

    std::vector<trial_record> records;
    records.reserve(reps);
    try {
        for (std::uint64_t rep = 1; rep <= reps; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            const sort_report report = run_sort(algo, input, options);
            const auto stop = std::chrono::steady_clock::now();

            if (rep == 1 && report.output != expected) {
                return {detail::failed_marker(algo, label)};
            }
            trial_record record;
            record.algo = algo;
            record.dist = label.dist;
            record.n = label.n;
            record.k = input.empty() ? label.k : report.max_value;
            record.seed = label.seed;
            record.rep = rep;
            record.wall_time_s = std::chrono::duration<double>(stop - start).count();
            record.aux_words = report.aux_words;
            if (algo == algo_id::twinarray) {
                record.path = report.path;
            }
            records.push_back(record);
        }
    } catch (const error&) {
        return {detail::failed_marker(algo, label)};
    }
    return records;
}

struct suite_config {
    std::vector<algo_id> algos;
    std::vector<dataset_spec> specs;
    std::uint64_t reps = 5;
    sort_options options;
};

// Runs the full grid in deterministic order: specs outermost (each dataset
// is generated exactly once and shared across every algorithm), then
// algorithms, then reps. A spec that fails to generate yields one failure
// marker per algorithm instead of aborting the suite.
inline std::vector<trial_record> run_suite(const suite_config& config) {
    std::vector<trial_record> records;
    for (const dataset_spec& spec : config.specs) {
        const trial_label label{spec.dist, spec.n, spec.k, spec.seed};
        std::vector<element> data;
        bool generated = false;
        try {
            data = generate(spec);
            generated = true;
        } catch (const error&) {
        }
        for (const algo_id algo : config.algos) {
            if (!generated) {
                records.push_back(detail::failed_marker(algo, label));
                continue;
            }
            const auto cell = time_sort(algo, label, data, config.reps, config.options);
            records.insert(records.end(), cell.begin(), cell.end());
        }
    }
    return records;
}

// Seed for grid cell `index`, derived so any cell is reproducible without
// replaying the whole grid: it is the (index+1)-th output of the splitmix64
// stream seeded with the master seed.
inline std::uint64_t derive_cell_seed(std::uint64_t master_seed, std::uint64_t index) {
    return prng(master_seed + index * golden_gamma).next();
}

struct range_sweep_result {
    std::vector<trial_record> records;
    // pearson_r is the raw-series correlation against k; the slope fields
    // come from a log-log fit of the same series.
    analysis_result time_vs_k;
    analysis_result memory_vs_k;
};

// Fixes n and sweeps k: one Random dataset per k, twinarray only, median
// wall time and aux_words per k, correlated against k.
inline range_sweep_result range_sweep(std::uint64_t n_fixed,
                                      std::span<const std::uint64_t> ks,
                                      std::uint64_t reps, std::uint64_t master_seed,
                                      const sort_options& options = {}) {
    if (ks.size() < 5) {
        throw spec_invalid("range sweep needs at least 5 k values");
    }
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < n_fixed) {
            throw spec_invalid("range sweep needs every k >= n");
        }
        if (i > 0 && ks[i] <= ks[i - 1]) {
            throw spec_invalid("range sweep needs strictly increasing k values");
        }
        if (ks[i] >= options.range_guard) {
            throw range_guard_exceeded("sweep k " + std::to_string(ks[i]) +
                                       " exceeds the range guard");
        }
    }

    range_sweep_result result;
    std::vector<double> k_axis;
    std::vector<double> time_series;
    std::vector<double> memory_series;
    std::vector<std::uint64_t> k_unsigned;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        dataset_spec spec;
        spec.dist = distribution_kind::random;
        spec.n = n_fixed;
        spec.k = ks[i];
        spec.seed = derive_cell_seed(master_seed, i);
        const std::vector<element> data = generate(spec);

        const trial_label label{spec.dist, spec.n, spec.k, spec.seed};
        const auto cell = time_sort(algo_id::twinarray, label, data, reps, options);
        std::vector<double> rep_times;
        for (const trial_record& record : cell) {
            if (!record.ok) {
                throw error("range sweep trial failed verification");
            }
            rep_times.push_back(record.wall_time_s);
        }
        // Correlate against the realized maximum (the k the auxiliary
        // arrays are actually sized by), keeping the memory series exactly
        // affine; the requested bound stays visible in the records.
        k_axis.push_back(static_cast<double>(cell.front().k));
        time_series.push_back(median(std::move(rep_times)));
        memory_series.push_back(static_cast<double>(cell.front().aux_words));
        k_unsigned.push_back(cell.front().k);
        result.records.insert(result.records.end(), cell.begin(), cell.end());
    }

    result.time_vs_k.pearson_r = pearson(k_axis, time_series);
    result.memory_vs_k.pearson_r = pearson(k_axis, memory_series);
    try {
        const analysis_result fit = loglog_slope(k_unsigned, time_series);
        result.time_vs_k.loglog_slope = fit.loglog_slope;
        result.time_vs_k.fit_r2 = fit.fit_r2;
    } catch (const degenerate_input&) {
    }
    try {
        const analysis_result fit = loglog_slope(k_unsigned, memory_series);
        result.memory_vs_k.loglog_slope = fit.loglog_slope;
        result.memory_vs_k.fit_r2 = fit.fit_r2;
    } catch (const degenerate_input&) {
    }
    return result;
}

// ---- CSV trial log ----------------------------------------------------
//
// One row per trial record, RFC 4180: fields containing commas, quotes, or
// line breaks are quoted with inner quotes doubled. The writer never needs
// quoting (names and numbers only) but the reader accepts it.

inline constexpr std::string_view csv_header =
    "algo,dist,n,k,seed,rep,wall_time_s,aux_words,path,status";

namespace detail {

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') {
            quoted += "\"\"";
        } else {
            quoted += c;
        }
    }
    quoted += '"';
    return quoted;
}

inline std::string format_seconds(double seconds) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9f", seconds);
    return buffer;
}

// Splits one CSV record into fields, honoring RFC 4180 quoting. `pos` is
// advanced past the record and its line terminator.
inline std::vector<std::string> split_csv_record(std::string_view text, std::size_t& pos) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    while (pos < text.size()) {
        const char c = text[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field += '"';
                    ++pos;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            ++pos;
            continue;
        }
        if (c == '"' && field.empty()) {
            quoted = true;
            ++pos;
            continue;
        }
        if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            ++pos;
            continue;
        }
        if (c == '\n' || c == '\r') {
            ++pos;
            if (c == '\r' && pos < text.size() && text[pos] == '\n') {
                ++pos;
            }
            break;
        }
        field += c;
        ++pos;
    }
    if (quoted) {
        throw malformed_csv("unterminated quoted field");
    }
    fields.push_back(std::move(field));
    return fields;
}

inline std::uint64_t parse_u64_field(const std::string& field, const char* what) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size() || field.empty()) {
        throw malformed_csv(std::string("bad ") + what + " field: '" + field + "'");
    }
    return value;
}

inline double parse_double_field(const std::string& field, const char* what) {
    if (field.empty()) {
        throw malformed_csv(std::string("bad ") + what + " field: empty");
    }
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) {
        throw malformed_csv(std::string("bad ") + what + " field: '" + field + "'");
    }
    return value;
}

} // namespace detail

inline std::string encode_csv(std::span<const trial_record> records) {
    std::string out{csv_header};
    out += '\n';
    for (const trial_record& record : records) {
        out += detail::csv_quote(to_string(record.algo));
        out += ',';
        out += detail::csv_quote(to_string(record.dist));
        out += ',';
        out += std::to_string(record.n);
        out += ',';
        out += std::to_string(record.k);
        out += ',';
        out += std::to_string(record.seed);
        out += ',';
        out += std::to_string(record.rep);
        out += ',';
        out += detail::format_seconds(record.wall_time_s);
        out += ',';
        out += std::to_string(record.aux_words);
        out += ',';
        out += record.path ? to_string(*record.path) : "";
        out += ',';
        out += record.ok ? "ok" : "failed";
        out += '\n';
    }
    return out;
}

inline std::vector<trial_record> decode_csv(std::string_view text) {
    std::size_t pos = 0;
    const std::vector<std::string> header = detail::split_csv_record(text, pos);
    std::string joined;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) {
            joined += ',';
        }
        joined += header[i];
    }
    if (joined != csv_header) {
        throw malformed_csv("bad header: '" + joined + "'");
    }

    std::vector<trial_record> records;
    while (pos < text.size()) {
        if (text[pos] == '\n' || text[pos] == '\r') { // tolerate a blank final line
            ++pos;
            continue;
        }
        const std::vector<std::string> fields = detail::split_csv_record(text, pos);
        if (fields.size() != 10) {
            throw malformed_csv("expected 10 fields, got " +
                                std::to_string(fields.size()));
        }
        trial_record record;
        const auto algo = parse_algo(fields[0]);
        if (!algo) {
            throw malformed_csv("unknown algorithm '" + fields[0] + "'");
        }
        record.algo = *algo;
        const auto dist = parse_distribution(fields[1]);
        if (!dist) {
            throw malformed_csv("unknown distribution '" + fields[1] + "'");
        }
        record.dist = *dist;
        record.n = detail::parse_u64_field(fields[2], "n");
        record.k = detail::parse_u64_field(fields[3], "k");
        record.seed = detail::parse_u64_field(fields[4], "seed");
        record.rep = detail::parse_u64_field(fields[5], "rep");
        record.wall_time_s = detail::parse_double_field(fields[6], "wall_time_s");
        record.aux_words = detail::parse_u64_field(fields[7], "aux_words");
        if (fields[8] == "distinct") {
            record.path = sort_path::distinct;
        } else if (fields[8] == "frequency") {
            record.path = sort_path::frequency;
        } else if (!fields[8].empty()) {
            throw malformed_csv("unknown path '" + fields[8] + "'");
        }
        if (fields[9] == "ok") {
            record.ok = true;
        } else if (fields[9] == "failed") {
            record.ok = false;
        } else {
            throw malformed_csv("unknown status '" + fields[9] + "'");
        }
        records.push_back(std::move(record));
    }
    return records;
}

inline void write_csv(const std::filesystem::path& path,
                      std::span<const trial_record> records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error("cannot open " + path.string() + " for writing");
    }
    const std::string text = encode_csv(records);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
        throw io_error("write failed for " + path.string());
    }
}

inline std::vector<trial_record> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open " + path.string() + " for reading");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw io_error("read failed for " + path.string());
    }
    return decode_csv(text);
}

} // namespace twinsort
