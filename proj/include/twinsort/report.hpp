#pragma once

// Turns a trial CSV into human-readable output: a markdown report with
// median-of-reps summary tables, range-sweep correlations, and log-log
// scaling fits, plus two-column plot-data files, one per series.
//
// Every number emitted here is recomputable from the CSV alone. Records
// with status failed are excluded from the numbers and surfaced as a
// warning. Degenerate analyses (too few points, zero variance) become
// warnings, never crashes.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "twinsort/analysis.hpp"
#include "twinsort/bench.hpp"
#include "twinsort/core.hpp"

namespace twinsort {

struct report_output {
    std::string markdown;
    // file name -> contents; names follow <algo>_<dist>_<metric>.dat with
    // metric one of time_vs_n, mem_vs_n, time_vs_k, mem_vs_k
    std::vector<std::pair<std::string, std::string>> plot_files;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::string format_fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

// Medians of integer data land on halves at worst; one decimal is exact.
inline std::string format_words(double value) {
    return format_fixed(value, 1);
}

struct series_point {
    std::vector<double> times;
    std::vector<double> words;
};

// Benchmark cell: every ok record with the same coordinates, seeds merged.
using cell_key = std::tuple<algo_id, distribution_kind, std::uint64_t, std::uint64_t>;

struct group_series {
    // per distinct n: median time and words over everything at that n
    std::map<std::uint64_t, series_point> by_n;
    std::map<std::uint64_t, series_point> by_k;
    std::map<std::uint64_t, series_point> by_n_diag; // only cells with k == n
};

} // namespace detail

inline report_output analyze_records(std::span<const trial_record> records) {
    report_output out;

    std::map<detail::cell_key, detail::series_point> cells;
    std::uint64_t failed_count = 0;
    for (const trial_record& record : records) {
        if (!record.ok) {
            ++failed_count;
            continue;
        }
        auto& cell = cells[{record.algo, record.dist, record.n, record.k}];
        cell.times.push_back(record.wall_time_s);
        cell.words.push_back(static_cast<double>(record.aux_words));
    }
    if (failed_count > 0) {
        out.warnings.push_back(std::to_string(failed_count) +
                               " failed trial(s) excluded from all numbers");
    }
    if (cells.empty()) {
        out.warnings.push_back("no successful trials; nothing to analyze");
    }
    if (records.size() == 1) {
        out.warnings.push_back("only one record; analyses need more points");
    }

    // Table rows per (algo, dist, n), ks and seeds merged.
    std::map<std::tuple<algo_id, distribution_kind, std::uint64_t>, detail::series_point>
        table_rows;
    // Per-(algo, dist) series for sweeps, scaling fits, and plot files.
    std::map<std::pair<algo_id, distribution_kind>, detail::group_series> groups;
    for (const auto& [key, cell] : cells) {
        const auto [algo, dist, n, k] = key;
        auto& row = table_rows[{algo, dist, n}];
        row.times.insert(row.times.end(), cell.times.begin(), cell.times.end());
        row.words.insert(row.words.end(), cell.words.begin(), cell.words.end());

        auto& group = groups[{algo, dist}];
        auto& at_n = group.by_n[n];
        at_n.times.insert(at_n.times.end(), cell.times.begin(), cell.times.end());
        at_n.words.insert(at_n.words.end(), cell.words.begin(), cell.words.end());
        auto& at_k = group.by_k[k];
        at_k.times.insert(at_k.times.end(), cell.times.begin(), cell.times.end());
        at_k.words.insert(at_k.words.end(), cell.words.begin(), cell.words.end());
        if (n == k) {
            auto& diag = group.by_n_diag[n];
            diag.times.insert(diag.times.end(), cell.times.begin(), cell.times.end());
            diag.words.insert(diag.words.end(), cell.words.begin(), cell.words.end());
        }
    }

    std::string& md = out.markdown;
    md += "# Benchmark report\n\n";
    md += "Source: " + std::to_string(records.size()) + " record(s), " +
          std::to_string(cells.size()) + " cell(s). All summary values are " +
          "medians over the repetitions of a cell.\n";

    // ---- summary tables, one pair of columns per distribution ----
    std::set<std::uint64_t> table_ns;
    for (const auto& [key, row] : table_rows) {
        table_ns.insert(std::get<2>(key));
    }
    for (const std::uint64_t n : table_ns) {
        std::vector<distribution_kind> dists;
        std::vector<algo_id> algos;
        for (const distribution_kind dist : all_distributions) {
            for (const algo_id algo : all_algos) {
                if (table_rows.count({algo, dist, n}) != 0) {
                    if (dists.empty() || dists.back() != dist) {
                        dists.push_back(dist);
                    }
                }
            }
        }
        for (const algo_id algo : all_algos) {
            for (const distribution_kind dist : all_distributions) {
                if (table_rows.count({algo, dist, n}) != 0) {
                    algos.push_back(algo);
                    break;
                }
            }
        }

        md += "\n## Median wall time (s), n = " + std::to_string(n) + "\n\n";
        md += "| algo |";
        for (const distribution_kind dist : dists) {
            md += " " + to_string(dist) + " |";
        }
        md += "\n|---|";
        for (std::size_t i = 0; i < dists.size(); ++i) {
            md += "---|";
        }
        md += "\n";
        for (const algo_id algo : algos) {
            md += "| " + to_string(algo) + " |";
            for (const distribution_kind dist : dists) {
                const auto it = table_rows.find({algo, dist, n});
                md += (it == table_rows.end())
                          ? " - |"
                          : " " + detail::format_fixed(median(it->second.times), 9) + " |";
            }
            md += "\n";
        }

        md += "\n## Median auxiliary words, n = " + std::to_string(n) + "\n\n";
        md += "| algo |";
        for (const distribution_kind dist : dists) {
            md += " " + to_string(dist) + " |";
        }
        md += "\n|---|";
        for (std::size_t i = 0; i < dists.size(); ++i) {
            md += "---|";
        }
        md += "\n";
        for (const algo_id algo : algos) {
            md += "| " + to_string(algo) + " |";
            for (const distribution_kind dist : dists) {
                const auto it = table_rows.find({algo, dist, n});
                md += (it == table_rows.end())
                          ? " - |"
                          : " " + detail::format_words(median(it->second.words)) + " |";
            }
            md += "\n";
        }
    }

    // ---- range-sweep correlations: one n, several ks ----
    std::string sweep_section;
    for (const algo_id algo : all_algos) {
        for (const distribution_kind dist : all_distributions) {
            const auto git = groups.find({algo, dist});
            if (git == groups.end()) {
                continue;
            }
            const detail::group_series& group = git->second;
            if (group.by_n.size() != 1 || group.by_k.size() < 3) {
                continue;
            }
            std::vector<double> k_axis;
            std::vector<double> time_series;
            std::vector<double> word_series;
            for (const auto& [k, point] : group.by_k) {
                k_axis.push_back(static_cast<double>(k));
                time_series.push_back(median(point.times));
                word_series.push_back(median(point.words));
            }
            const std::string label = to_string(algo) + " / " + to_string(dist);
            std::string time_r = "-";
            std::string word_r = "-";
            try {
                time_r = detail::format_fixed(pearson(k_axis, time_series), 6);
            } catch (const degenerate_input& e) {
                out.warnings.push_back(label + " time-vs-k correlation skipped: " + e.what());
            }
            try {
                word_r = detail::format_fixed(pearson(k_axis, word_series), 6);
            } catch (const degenerate_input& e) {
                out.warnings.push_back(label + " memory-vs-k correlation skipped: " +
                                       e.what());
            }
            sweep_section += "| " + to_string(algo) + " | " + to_string(dist) + " | " +
                             std::to_string(group.by_n.begin()->first) + " | " +
                             std::to_string(k_axis.size()) + " | " + time_r + " | " +
                             word_r + " |\n";
        }
    }
    if (!sweep_section.empty()) {
        md += "\n## Range-sweep correlations (fixed n, k swept)\n\n";
        md += "| algo | dist | n | points | pearson r, time vs k | pearson r, words vs k |\n";
        md += "|---|---|---|---|---|---|\n";
        md += sweep_section;
    }

    // ---- scaling fits over n; diagonal (k == n) cells preferred ----
    std::string fit_section;
    for (const algo_id algo : all_algos) {
        for (const distribution_kind dist : all_distributions) {
            const auto git = groups.find({algo, dist});
            if (git == groups.end()) {
                continue;
            }
            const detail::group_series& group = git->second;
            const auto& source =
                (group.by_n_diag.size() >= 3) ? group.by_n_diag : group.by_n;
            if (source.size() < 3) {
                continue;
            }
            std::vector<std::uint64_t> ns;
            std::vector<double> time_series;
            for (const auto& [n, point] : source) {
                ns.push_back(n);
                time_series.push_back(median(point.times));
            }
            const std::string label = to_string(algo) + " / " + to_string(dist);
            try {
                const analysis_result fit = loglog_slope(ns, time_series);
                fit_section += "| " + to_string(algo) + " | " + to_string(dist) + " | " +
                               std::to_string(ns.size()) + " | " +
                               detail::format_fixed(fit.loglog_slope, 6) + " | " +
                               detail::format_fixed(fit.fit_r2, 6) + " |\n";
            } catch (const degenerate_input& e) {
                out.warnings.push_back(label + " scaling fit skipped: " + e.what());
            }
        }
    }
    if (!fit_section.empty()) {
        md += "\n## Scaling fits, log(time) vs log(n)\n\n";
        md += "| algo | dist | points | slope | r^2 |\n";
        md += "|---|---|---|---|---|\n";
        md += fit_section;
    }

    // ---- plot-data files ----
    for (const algo_id algo : all_algos) {
        for (const distribution_kind dist : all_distributions) {
            const auto git = groups.find({algo, dist});
            if (git == groups.end()) {
                continue;
            }
            const detail::group_series& group = git->second;
            const std::string stem = to_string(algo) + "_" + to_string(dist) + "_";
            if (group.by_n.size() >= 2) {
                std::string time_data;
                std::string word_data;
                for (const auto& [n, point] : group.by_n) {
                    time_data += std::to_string(n) + " " +
                                 detail::format_fixed(median(point.times), 9) + "\n";
                    word_data += std::to_string(n) + " " +
                                 detail::format_words(median(point.words)) + "\n";
                }
                out.plot_files.emplace_back(stem + "time_vs_n.dat", std::move(time_data));
                out.plot_files.emplace_back(stem + "mem_vs_n.dat", std::move(word_data));
            }
            if (group.by_n.size() == 1 && group.by_k.size() >= 2) {
                std::string time_data;
                std::string word_data;
                for (const auto& [k, point] : group.by_k) {
                    time_data += std::to_string(k) + " " +
                                 detail::format_fixed(median(point.times), 9) + "\n";
                    word_data += std::to_string(k) + " " +
                                 detail::format_words(median(point.words)) + "\n";
                }
                out.plot_files.emplace_back(stem + "time_vs_k.dat", std::move(time_data));
                out.plot_files.emplace_back(stem + "mem_vs_k.dat", std::move(word_data));
            }
        }
    }

    if (!out.plot_files.empty()) {
        md += "\n## Plot data\n\n";
        for (const auto& [name, contents] : out.plot_files) {
            (void)contents;
            md += "- " + name + "\n";
        }
    }
    if (!out.warnings.empty()) {
        md += "\n## Warnings\n\n";
        for (const std::string& warning : out.warnings) {
            md += "- " + warning + "\n";
        }
    }
    return out;
}

// Writes the markdown to report_path and each plot file into plot_dir,
// creating directories as needed.
inline void write_report_files(const report_output& out,
                               const std::filesystem::path& report_path,
                               const std::filesystem::path& plot_dir) {
    std::error_code ec;
    if (report_path.has_parent_path()) {
        std::filesystem::create_directories(report_path.parent_path(), ec);
    }
    std::ofstream report(report_path, std::ios::binary | std::ios::trunc);
    if (!report) {
        throw io_error("cannot open " + report_path.string() + " for writing");
    }
    report.write(out.markdown.data(), static_cast<std::streamsize>(out.markdown.size()));
    report.flush();
    if (!report) {
        throw io_error("write failed for " + report_path.string());
    }

    if (out.plot_files.empty()) {
        return;
    }
    std::filesystem::create_directories(plot_dir, ec);
    for (const auto& [name, contents] : out.plot_files) {
        const std::filesystem::path path = plot_dir / name;
        std::ofstream data(path, std::ios::binary | std::ios::trunc);
        if (!data) {
            throw io_error("cannot open " + path.string() + " for writing");
        }
        data.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        data.flush();
        if (!data) {
            throw io_error("write failed for " + path.string());
        }
    }
}

} // namespace twinsort
