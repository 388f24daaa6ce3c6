// tas: command-line front end for dataset generation, sorting, benchmarking,
// and report generation.
//
// Exit codes, exhaustive:
//   0  success
//   2  invalid spec, unknown algorithm or distribution, bad grid, malformed
//      CSV, or unparseable flags
//   3  I/O failure
//   4  malformed dataset file
//   5  verification failure

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twinsort/twinsort.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_io = 3;
constexpr int exit_malformed = 4;
constexpr int exit_verify = 5;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = text.find(',', begin);
        if (end == std::string::npos) {
            items.push_back(text.substr(begin));
            break;
        }
        items.push_back(text.substr(begin, end - begin));
        begin = end + 1;
    }
    return items;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
        throw twinsort::spec_invalid(std::string("bad ") + what + ": '" + text + "'");
    }
    return value;
}

struct gen_flags {
    std::string dist;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t seed = 0;
    double displacement = twinsort::default_displacement;
    std::string out;
};

int run_gen(const gen_flags& flags) {
    const auto dist = twinsort::parse_distribution(flags.dist);
    if (!dist) {
        std::fprintf(stderr, "unknown distribution '%s'\n", flags.dist.c_str());
        return exit_invalid;
    }
    twinsort::dataset_spec spec;
    spec.dist = *dist;
    spec.n = flags.n;
    spec.k = flags.k;
    spec.seed = flags.seed;
    spec.displacement = flags.displacement;

    twinsort::dataset data;
    data.k = spec.k;
    data.values = twinsort::generate(spec);
    twinsort::write_dataset(flags.out, data);
    std::printf("n=%llu k=%llu seed=%llu digest=%s\n",
                static_cast<unsigned long long>(spec.n),
                static_cast<unsigned long long>(spec.k),
                static_cast<unsigned long long>(spec.seed),
                twinsort::digest_hex(twinsort::content_digest(data.values)).c_str());
    return exit_ok;
}

struct sort_flags {
    std::string algo;
    std::string in;
    std::string out;
    bool verify = false;
    std::uint64_t range_guard = twinsort::sort_options{}.range_guard;
};

int run_sort(const sort_flags& flags) {
    const auto algo = twinsort::parse_algo(flags.algo);
    if (!algo) {
        std::fprintf(stderr, "unknown algorithm '%s'\n", flags.algo.c_str());
        return exit_invalid;
    }
    const twinsort::dataset input = twinsort::read_dataset(flags.in);
    twinsort::sort_options options;
    options.range_guard = flags.range_guard;

    const auto start = std::chrono::steady_clock::now();
    const twinsort::sort_report report = twinsort::run_sort(*algo, input.values, options);
    const auto stop = std::chrono::steady_clock::now();
    const double wall = std::chrono::duration<double>(stop - start).count();

    bool verified = true;
    if (flags.verify) {
        verified = report.output == twinsort::reference_sort(input.values);
    }

    twinsort::dataset sorted;
    sorted.k = input.k;
    sorted.values = report.output;
    twinsort::write_dataset(flags.out, sorted);

    std::string summary = "algo=" + twinsort::to_string(*algo) +
                          " n=" + std::to_string(input.values.size()) +
                          " k=" + std::to_string(input.k) +
                          " wall_time_s=" + twinsort::detail::format_seconds(wall) +
                          " aux_words=" + std::to_string(report.aux_words);
    if (report.path) {
        summary += std::string(" path=") + twinsort::to_string(*report.path);
    }
    if (flags.verify) {
        summary += verified ? " verify=pass" : " verify=fail";
    }
    std::printf("%s\n", summary.c_str());
    return verified ? exit_ok : exit_verify;
}

struct bench_flags {
    std::string algos;
    std::string dists;
    std::string sizes;
    std::string k_mode = "equal_n";
    std::uint64_t reps = 5;
    std::uint64_t seed = 0;
    std::uint64_t range_guard = twinsort::sort_options{}.range_guard;
    std::string csv;
};

int run_bench(const bench_flags& flags) {
    twinsort::suite_config config;
    config.reps = flags.reps;
    config.options.range_guard = flags.range_guard;
    if (config.reps < 1) {
        throw twinsort::spec_invalid("--reps must be at least 1");
    }

    if (flags.algos.empty()) {
        config.algos.assign(std::begin(twinsort::all_algos), std::end(twinsort::all_algos));
    } else {
        for (const std::string& name : split_list(flags.algos)) {
            const auto algo = twinsort::parse_algo(name);
            if (!algo) {
                throw twinsort::spec_invalid("unknown algorithm '" + name + "'");
            }
            config.algos.push_back(*algo);
        }
    }

    std::vector<twinsort::distribution_kind> dists;
    if (flags.dists.empty()) {
        dists.assign(std::begin(twinsort::all_distributions),
                     std::end(twinsort::all_distributions));
    } else {
        for (const std::string& name : split_list(flags.dists)) {
            const auto dist = twinsort::parse_distribution(name);
            if (!dist) {
                throw twinsort::spec_invalid("unknown distribution '" + name + "'");
            }
            dists.push_back(*dist);
        }
    }

    std::vector<std::uint64_t> sizes;
    for (const std::string& text : split_list(flags.sizes)) {
        sizes.push_back(parse_u64(text, "size"));
    }
    if (sizes.empty()) {
        throw twinsort::spec_invalid("--sizes must name at least one size");
    }

    bool k_equals_n = true;
    std::uint64_t k_fixed = 0;
    if (flags.k_mode != "equal_n") {
        const std::string prefix = "fixed:";
        if (flags.k_mode.rfind(prefix, 0) != 0) {
            throw twinsort::spec_invalid("--k-mode must be equal_n or fixed:<value>");
        }
        k_equals_n = false;
        k_fixed = parse_u64(flags.k_mode.substr(prefix.size()), "k-mode value");
    }

    // Grid order: distributions outer, sizes inner; one dataset per cell,
    // with a per-cell seed derived from the master seed and the cell index.
    std::uint64_t cell_index = 0;
    for (const twinsort::distribution_kind dist : dists) {
        for (const std::uint64_t n : sizes) {
            twinsort::dataset_spec spec;
            spec.dist = dist;
            spec.n = n;
            spec.k = k_equals_n ? n : k_fixed;
            spec.seed = twinsort::derive_cell_seed(flags.seed, cell_index);
            ++cell_index;
            config.specs.push_back(spec);
        }
    }

    const std::vector<twinsort::trial_record> records = twinsort::run_suite(config);
    twinsort::write_csv(flags.csv, records);
    std::printf("rows=%zu csv=%s\n", records.size(), flags.csv.c_str());
    return exit_ok;
}

struct analyze_flags {
    std::string csv;
    std::string report;
    std::string plot_dir = "plots";
};

int run_analyze(const analyze_flags& flags) {
    const std::vector<twinsort::trial_record> records = twinsort::read_csv(flags.csv);
    const twinsort::report_output out = twinsort::analyze_records(records);
    twinsort::write_report_files(out, flags.report, flags.plot_dir);
    std::printf("report=%s plots=%zu warnings=%zu\n", flags.report.c_str(),
                out.plot_files.size(), out.warnings.size());
    return exit_ok;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const twinsort::io_error& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return exit_io;
    } catch (const twinsort::malformed_file& e) {
        std::fprintf(stderr, "malformed dataset: %s\n", e.what());
        return exit_malformed;
    } catch (const twinsort::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_invalid;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_invalid;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twin-array sort benchmark toolkit"};
    app.require_subcommand(1);

    gen_flags gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a dataset file");
    cmd_gen->add_option("--dist", gen.dist, "distribution name")->required();
    cmd_gen->add_option("--n", gen.n, "element count")->required();
    cmd_gen->add_option("--k", gen.k, "inclusive value bound")->required();
    cmd_gen->add_option("--seed", gen.seed, "prng seed");
    cmd_gen->add_option("--displacement", gen.displacement,
                        "fraction displaced for nsorted/u_nsorted");
    cmd_gen->add_option("--out", gen.out, "output dataset path")->required();

    sort_flags srt;
    CLI::App* cmd_sort = app.add_subcommand("sort", "sort a dataset file");
    cmd_sort->add_option("--algo", srt.algo, "algorithm name")->required();
    cmd_sort->add_option("--in", srt.in, "input dataset path")->required();
    cmd_sort->add_option("--out", srt.out, "output dataset path")->required();
    cmd_sort->add_flag("--verify", srt.verify, "check output against the reference sort");
    cmd_sort->add_option("--range-guard", srt.range_guard,
                         "maximum k+1 slots a range-indexed sort may allocate");

    bench_flags bench;
    CLI::App* cmd_bench = app.add_subcommand("bench", "run a benchmark grid");
    cmd_bench->add_option("--algos", bench.algos, "comma-separated algorithms (default all)");
    cmd_bench->add_option("--dists", bench.dists, "comma-separated distributions (default all)");
    cmd_bench->add_option("--sizes", bench.sizes, "comma-separated element counts")->required();
    cmd_bench->add_option("--k-mode", bench.k_mode, "equal_n or fixed:<value>");
    cmd_bench->add_option("--reps", bench.reps, "repetitions per cell");
    cmd_bench->add_option("--seed", bench.seed, "master seed");
    cmd_bench->add_option("--range-guard", bench.range_guard,
                          "maximum k+1 slots a range-indexed sort may allocate");
    cmd_bench->add_option("--csv", bench.csv, "output CSV path")->required();

    analyze_flags analyze;
    CLI::App* cmd_analyze = app.add_subcommand("analyze", "summarize a trial CSV");
    cmd_analyze->add_option("--csv", analyze.csv, "input CSV path")->required();
    cmd_analyze->add_option("--report", analyze.report, "output markdown path")->required();
    cmd_analyze->add_option("--plot-dir", analyze.plot_dir, "plot-data output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    if (cmd_gen->parsed()) {
        return guarded([&] { return run_gen(gen); });
    }
    if (cmd_sort->parsed()) {
        return guarded([&] { return run_sort(srt); });
    }
    if (cmd_bench->parsed()) {
        return guarded([&] { return run_bench(bench); });
    }
    return guarded([&] { return run_analyze(analyze); });
}
