#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "algoprob/distribution.hpp"
#include "algoprob/runner.hpp"
#include "algoprob/turing.hpp"

using namespace algoprob;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;

    TempDir() {
        std::mt19937_64 rng(std::random_device{}());
        path = fs::temp_directory_path() /
               ("algoprob-test-" + std::to_string(rng()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::vector<std::string> csvs(const std::vector<EmpiricalDistribution>& dists) {
    std::vector<std::string> out;
    for (const auto& d : dists) out.push_back(to_csv(d));
    return out;
}

}  // namespace

TEST_CASE("chunk grid covers the space exactly once") {
    CHECK(chunk_count(100, 64) == 2);
    CHECK(chunk_count(128, 64) == 2);
    CHECK(chunk_count(1, 64) == 1);
    CHECK(chunk_bounds(100, 64, 0) == ChunkRange{0, 64});
    CHECK(chunk_bounds(100, 64, 1) == ChunkRange{64, 100});
    CHECK_THROWS_AS(chunk_bounds(100, 64, 2), std::out_of_range);
    CHECK_THROWS_AS(chunk_count(0, 64), std::invalid_argument);
    CHECK_THROWS_AS(chunk_count(100, 0), std::invalid_argument);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t space = rng() % 100000 + 1;
        const std::uint64_t size = rng() % 1000 + 1;
        const std::uint64_t k = chunk_count(space, size);
        std::uint64_t expect_lo = 0;
        for (std::uint64_t i = 0; i < k; ++i) {
            const auto r = chunk_bounds(space, size, i);
            CHECK(r.lo == expect_lo);
            CHECK(r.hi - r.lo <= size);
            CHECK(r.hi > r.lo);
            expect_lo = r.hi;
        }
        CHECK(expect_lo == space);
    }
}

TEST_CASE("combine_tm_sweeps equals the single uninterrupted run") {
    const std::uint64_t space = tm_space_size(2);
    std::vector<TmSweep> parts;
    parts.push_back(tm_sweep_range(2, {6, 107}, 0, 0, 4000));
    parts.push_back(tm_sweep_range(2, {6, 107}, 0, 4000, space));
    parts.push_back(tm_sweep_range(2, {6, 107}, 1, 0, 7777));
    parts.push_back(tm_sweep_range(2, {6, 107}, 1, 7777, space));

    auto combined = combine_tm_sweeps(2, {6, 107}, {0, 1}, parts);
    auto direct = ctm_distributions(2, {6, 107}, {0, 1});
    REQUIRE(combined.size() == 2);
    CHECK(csvs(combined) == csvs(direct));

    // Incomplete or duplicated coverage is refused.
    std::vector<TmSweep> missing(parts.begin(), parts.end() - 1);
    CHECK_THROWS_AS(combine_tm_sweeps(2, {6, 107}, {0, 1}, missing), std::invalid_argument);
    parts.push_back(tm_sweep_range(2, {6, 107}, 1, 0, 5));
    CHECK_THROWS_AS(combine_tm_sweeps(2, {6, 107}, {0, 1}, parts), std::invalid_argument);
}

TEST_CASE("worker count never changes the artifact") {
    TmRunConfig cfg;
    cfg.states = 2;
    cfg.cutoffs = {6, 107};
    cfg.blanks = {0, 1};
    cfg.chunk_size = 1000;  // 10 chunks per blank at space 10000

    cfg.jobs = 1;
    auto one = run_tm_sweep(cfg);
    cfg.jobs = 8;
    auto eight = run_tm_sweep(cfg);
    CHECK(csvs(one) == csvs(eight));
    CHECK(csvs(one) == csvs(ctm_distributions(2, {6, 107}, {0, 1})));
}

TEST_CASE("checkpoints resume without recomputing or double counting") {
    TempDir tmp;
    TmRunConfig cfg;
    cfg.states = 2;
    cfg.cutoffs = {107};
    cfg.blanks = {0, 1};
    cfg.chunk_size = 1250;  // 8 chunks per blank
    cfg.checkpoint_dir = tmp.path.string();

    auto first = run_tm_sweep(cfg);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(tmp.path)) {
        ++files;
        CHECK(e.path().extension() == ".json");
    }
    CHECK(files == 16);

    // Full resume: everything loads, nothing recomputes.
    auto resumed = run_tm_sweep(cfg);
    CHECK(csvs(first) == csvs(resumed));

    // Partial resume after losing half the chunks, as after a kill.
    std::size_t removed = 0;
    for (const auto& e : fs::directory_iterator(tmp.path))
        if (removed < 8 && fs::is_regular_file(e.path())) {
            fs::remove(e.path());
            ++removed;
        }
    auto partial = run_tm_sweep(cfg);
    CHECK(csvs(first) == csvs(partial));

    // More workers over the same checkpoint directory change nothing.
    cfg.jobs = 4;
    auto threaded = run_tm_sweep(cfg);
    CHECK(csvs(first) == csvs(threaded));
}

TEST_CASE("checkpoints that disagree with the run are refused") {
    TempDir tmp;
    TmRunConfig cfg;
    cfg.states = 2;
    cfg.cutoffs = {107};
    cfg.blanks = {0};
    cfg.chunk_size = 2500;  // 4 chunks
    cfg.checkpoint_dir = tmp.path.string();
    run_tm_sweep(cfg);

    SUBCASE("different cutoffs reuse the same file names") {
        cfg.cutoffs = {6, 107};
        CHECK_THROWS_AS(run_tm_sweep(cfg), std::runtime_error);
    }
    SUBCASE("different chunk grid changes the recorded ranges") {
        cfg.chunk_size = 2000;
        CHECK_THROWS_AS(run_tm_sweep(cfg), std::runtime_error);
    }
    SUBCASE("garbage in a chunk file") {
        std::ofstream os(tmp.path / "b0-000002.json", std::ios::trunc);
        os << "{ not json";
        os.close();
        CHECK_THROWS_AS(run_tm_sweep(cfg), std::runtime_error);
    }
    SUBCASE("leftover temp files are ignored") {
        std::ofstream os(tmp.path / "b0-000002.json.tmp");
        os << "half-written";
        os.close();
        auto again = run_tm_sweep(cfg);
        CHECK(again.front().meta().params.at("max_halt_steps") == "6");
    }
}

TEST_CASE("runner validates its configuration") {
    TmRunConfig cfg;
    cfg.jobs = 0;
    CHECK_THROWS_AS(run_tm_sweep(cfg), std::invalid_argument);
    cfg.jobs = 1;
    cfg.blanks = {};
    CHECK_THROWS_AS(run_tm_sweep(cfg), std::invalid_argument);
    cfg.blanks = {0};
    cfg.chunk_size = 0;
    CHECK_THROWS_AS(run_tm_sweep(cfg), std::invalid_argument);
}
