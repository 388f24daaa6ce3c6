#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "twinsort/bench.hpp"
#include "twinsort/dataset_io.hpp"

namespace {

namespace fs = std::filesystem;

struct cli_result {
    int code = -1;
    std::string output; // stdout and stderr combined
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "twinsort_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

cli_result run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path capture = work_dir() / ("capture_" + std::to_string(counter++) + ".txt");
    const std::string command =
        std::string(TAS_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(command.c_str());

    cli_result result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    result.output.assign((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    return result;
}

std::string file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("gen writes the documented format and prints a digest") {
    const fs::path out = work_dir() / "gen_u_random.bin";
    const auto result =
        run_cli("gen --dist u_random --n 100 --k 99 --seed 7 --out " + out.string());
    CAPTURE(result.output);
    REQUIRE(result.code == 0);
    CHECK(fs::file_size(out) == 21 + 8 * 100);
    CHECK(result.output.find("n=100") != std::string::npos);
    CHECK(result.output.find("k=99") != std::string::npos);
    CHECK(result.output.find("seed=7") != std::string::npos);
    CHECK(result.output.find("digest=") != std::string::npos);
}

TEST_CASE("gen is byte-reproducible") {
    const fs::path a = work_dir() / "gen_a.bin";
    const fs::path b = work_dir() / "gen_b.bin";
    const std::string flags = "--dist nsorted --n 500 --k 1000 --seed 11";
    REQUIRE(run_cli("gen " + flags + " --out " + a.string()).code == 0);
    REQUIRE(run_cli("gen " + flags + " --out " + b.string()).code == 0);
    CHECK(file_bytes(a) == file_bytes(b));
}

TEST_CASE("gen rejects invalid specs with exit 2") {
    const fs::path out = work_dir() / "gen_bad.bin";
    CHECK(run_cli("gen --dist u_random --n 100 --k 50 --seed 1 --out " + out.string())
              .code == 2);
    CHECK(run_cli("gen --dist gaussian --n 10 --k 5 --seed 1 --out " + out.string())
              .code == 2);
}

TEST_CASE("gen reports unwritable outputs with exit 3") {
    CHECK(run_cli("gen --dist random --n 10 --k 5 --seed 1 --out /nonexistent/d.bin")
              .code == 3);
}

TEST_CASE("sort round-trips every algorithm under --verify") {
    const fs::path data = work_dir() / "sort_input.bin";
    REQUIRE(run_cli("gen --dist random --n 1000 --k 500 --seed 3 --out " + data.string())
                .code == 0);
    for (const twinsort::algo_id algo : twinsort::all_algos) {
        const fs::path out = work_dir() / ("sorted_" + twinsort::to_string(algo) + ".bin");
        const auto result = run_cli("sort --algo " + twinsort::to_string(algo) + " --in " +
                                    data.string() + " --out " + out.string() + " --verify");
        CAPTURE(twinsort::to_string(algo), result.output);
        CHECK(result.code == 0);
        CHECK(result.output.find("verify=pass") != std::string::npos);

        const twinsort::dataset sorted = twinsort::read_dataset(out);
        CHECK(std::is_sorted(sorted.values.begin(), sorted.values.end()));
        CHECK(sorted.values.size() == 1000);
    }
}

TEST_CASE("twinarray sort reports the path it took") {
    const fs::path data = work_dir() / "sort_unique.bin";
    REQUIRE(run_cli("gen --dist u_random --n 200 --k 999 --seed 5 --out " + data.string())
                .code == 0);
    const fs::path out = work_dir() / "sort_unique_out.bin";
    const auto result = run_cli("sort --algo twinarray --in " + data.string() + " --out " +
                                out.string());
    REQUIRE(result.code == 0);
    CHECK(result.output.find("path=distinct") != std::string::npos);
    CHECK(result.output.find("aux_words=") != std::string::npos);
    CHECK(result.output.find("wall_time_s=") != std::string::npos);
}

TEST_CASE("sort maps failures to the documented exit codes") {
    const fs::path data = work_dir() / "sort_codes.bin";
    REQUIRE(run_cli("gen --dist random --n 50 --k 100 --seed 2 --out " + data.string())
                .code == 0);
    const fs::path out = work_dir() / "sort_codes_out.bin";

    CHECK(run_cli("sort --algo shellsort --in " + data.string() + " --out " + out.string())
              .code == 2);
    CHECK(run_cli("sort --algo twinarray --in " + (work_dir() / "missing.bin").string() +
                  " --out " + out.string())
              .code == 3);

    const fs::path truncated = work_dir() / "truncated.bin";
    const std::string bytes = file_bytes(data);
    std::ofstream(truncated, std::ios::binary).write(bytes.data(), bytes.size() - 5);
    CHECK(run_cli("sort --algo twinarray --in " + truncated.string() + " --out " +
                  out.string())
              .code == 4);
}

TEST_CASE("bench writes a conforming csv over the requested grid") {
    const fs::path csv = work_dir() / "bench.csv";
    const auto result = run_cli(
        "bench --algos twinarray,quicksort --dists random,u_random --sizes 100,1000 "
        "--reps 2 --seed 9 --csv " +
        csv.string());
    CAPTURE(result.output);
    REQUIRE(result.code == 0);

    const std::string text = file_bytes(csv);
    CHECK(text.rfind("algo,dist,n,k,seed,rep,wall_time_s,aux_words,path,status\n", 0) == 0);

    const auto records = twinsort::read_csv(csv);
    REQUIRE(records.size() == 2 * 2 * 2 * 2); // algos x dists x sizes x reps
    for (const auto& record : records) {
        CHECK(record.ok);
        CHECK((record.n == 100 || record.n == 1000));
        if (record.algo == twinsort::algo_id::twinarray) {
            REQUIRE(record.path.has_value());
            if (record.dist == twinsort::distribution_kind::u_random) {
                CHECK(*record.path == twinsort::sort_path::distinct);
            }
        } else {
            CHECK_FALSE(record.path.has_value());
        }
    }
}

TEST_CASE("bench reruns reproduce the accounting exactly") {
    const fs::path a = work_dir() / "bench_a.csv";
    const fs::path b = work_dir() / "bench_b.csv";
    const std::string flags =
        "bench --algos twinarray,counting --dists random --sizes 200 --reps 2 --seed 4 --csv ";
    REQUIRE(run_cli(flags + a.string()).code == 0);
    REQUIRE(run_cli(flags + b.string()).code == 0);
    const auto ra = twinsort::read_csv(a);
    const auto rb = twinsort::read_csv(b);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i].aux_words == rb[i].aux_words);
        CHECK(ra[i].k == rb[i].k);
        CHECK(ra[i].seed == rb[i].seed);
    }
}

TEST_CASE("bench rejects bad grids with exit 2") {
    const fs::path csv = work_dir() / "bench_bad.csv";
    CHECK(run_cli("bench --algos timsort --sizes 10 --csv " + csv.string()).code == 2);
    CHECK(run_cli("bench --dists gauss --sizes 10 --csv " + csv.string()).code == 2);
    CHECK(run_cli("bench --sizes ten --csv " + csv.string()).code == 2);
    CHECK(run_cli("bench --sizes 10 --k-mode sometimes --csv " + csv.string()).code == 2);
    CHECK(run_cli("bench --sizes 10 --reps 0 --csv " + csv.string()).code == 2);
}

TEST_CASE("fixed k-mode pins the range bound") {
    const fs::path csv = work_dir() / "bench_fixed_k.csv";
    REQUIRE(run_cli("bench --algos quicksort --dists random --sizes 50 "
                    "--k-mode fixed:5000 --reps 1 --seed 1 --csv " +
                    csv.string())
                .code == 0);
    const auto records = twinsort::read_csv(csv);
    REQUIRE(records.size() == 1);
    // realized maximum of 50 draws bounded by 5000, far above n
    CHECK(records[0].k > 50);
    CHECK(records[0].k <= 5000);
}

TEST_CASE("analyze produces a report and plot data") {
    const fs::path csv = work_dir() / "analyze_input.csv";
    REQUIRE(run_cli("bench --algos twinarray --dists random --sizes 100,1000,10000 "
                    "--reps 3 --seed 6 --csv " +
                    csv.string())
                .code == 0);
    const fs::path report = work_dir() / "analyze" / "report.md";
    const fs::path plots = work_dir() / "analyze" / "plots";
    const auto result = run_cli("analyze --csv " + csv.string() + " --report " +
                                report.string() + " --plot-dir " + plots.string());
    CAPTURE(result.output);
    REQUIRE(result.code == 0);
    REQUIRE(fs::exists(report));
    CHECK(fs::exists(plots / "twinarray_random_time_vs_n.dat"));
    CHECK(fs::exists(plots / "twinarray_random_mem_vs_n.dat"));
    const std::string text = file_bytes(report);
    CHECK(text.find("## Scaling fits") != std::string::npos);
}

TEST_CASE("analyze handles degenerate csvs gracefully") {
    const fs::path single = work_dir() / "single.csv";
    std::ofstream(single) << "algo,dist,n,k,seed,rep,wall_time_s,aux_words,path,status\n"
                          << "twinarray,random,10,9,1,1,0.000010000,20,frequency,ok\n";
    const fs::path report = work_dir() / "single_report.md";
    const auto result = run_cli("analyze --csv " + single.string() + " --report " +
                                report.string() + " --plot-dir " +
                                (work_dir() / "single_plots").string());
    CAPTURE(result.output);
    CHECK(result.code == 0);
    CHECK(fs::exists(report));
    CHECK(result.output.find("warnings=") != std::string::npos);
}

TEST_CASE("analyze rejects malformed csvs with exit 2 and missing files with 3") {
    const fs::path bad = work_dir() / "bad.csv";
    std::ofstream(bad) << "this,is,not,the,header\n";
    const fs::path report = work_dir() / "bad_report.md";
    CHECK(run_cli("analyze --csv " + bad.string() + " --report " + report.string()).code ==
          2);
    CHECK(run_cli("analyze --csv " + (work_dir() / "absent.csv").string() + " --report " +
                  report.string())
              .code == 3);
}

TEST_CASE("flag parsing errors exit 2, help exits 0") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("gen --n 10").code == 2); // missing required flags
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("gen --help").code == 0);
}
