#include "algoprob/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

namespace fs = std::filesystem;

namespace algoprob {

std::uint64_t chunk_count(std::uint64_t space, std::uint64_t chunk_size) {
    if (space == 0) throw std::invalid_argument("chunk_count: empty space");
    if (chunk_size == 0) throw std::invalid_argument("chunk_count: zero chunk size");
    return (space + chunk_size - 1) / chunk_size;
}

ChunkRange chunk_bounds(std::uint64_t space, std::uint64_t chunk_size, std::uint64_t index) {
    const std::uint64_t k = chunk_count(space, chunk_size);
    if (index >= k) throw std::out_of_range("chunk_bounds: chunk index out of range");
    const std::uint64_t lo = index * chunk_size;
    const std::uint64_t hi = std::min(space, lo + chunk_size);
    return {lo, hi};
}

namespace {

constexpr const char* kChunkFormat = "tm-sweep-chunk-v1";

std::string chunk_file_name(int blank, std::uint64_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "b%d-%06llu.json", blank,
                  static_cast<unsigned long long>(index));
    return buf;
}

[[noreturn]] void refuse(const fs::path& path, const std::string& why) {
    throw std::runtime_error("checkpoint " + path.string() + ": " + why +
                             "; delete the checkpoint directory or point it at a fresh "
                             "location to recompute");
}

void write_chunk(const fs::path& path, const TmRunConfig& cfg, int blank,
                 const ChunkRange& range, const TmSweep& sweep) {
    nlohmann::json j;
    j["format"] = kChunkFormat;
    j["states"] = cfg.states;
    j["blank"] = blank;
    j["lo"] = range.lo;
    j["hi"] = range.hi;
    j["cutoffs"] = cfg.cutoffs;
    nlohmann::json per = nlohmann::json::array();
    for (std::size_t i = 0; i < cfg.cutoffs.size(); ++i) {
        nlohmann::json entry;
        entry["halting"] = sweep.per_cutoff[i].meta().halting_count;
        entry["max_halt"] = sweep.max_halt_by_cutoff[i];
        nlohmann::json counts = nlohmann::json::array();
        for (const auto& row : rows(sweep.per_cutoff[i]))
            counts.push_back({row.s.text(), static_cast<std::uint64_t>(row.count)});
        entry["counts"] = std::move(counts);
        per.push_back(std::move(entry));
    }
    j["per_cutoff"] = std::move(per);

    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write checkpoint " + tmp.string());
        os << j.dump() << '\n';
        if (!os.flush()) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    }
    fs::rename(tmp, path);
}

TmSweep load_chunk(const fs::path& path, const TmRunConfig& cfg, int blank,
                   const ChunkRange& range) {
    nlohmann::json j;
    try {
        std::ifstream is(path, std::ios::binary);
        if (!is) refuse(path, "cannot open");
        j = nlohmann::json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        refuse(path, std::string("unparseable (") + e.what() + ")");
    }
    try {
        if (j.at("format").get<std::string>() != kChunkFormat) refuse(path, "unknown format");
        if (j.at("states").get<int>() != cfg.states ||
            j.at("blank").get<int>() != blank ||
            j.at("lo").get<std::uint64_t>() != range.lo ||
            j.at("hi").get<std::uint64_t>() != range.hi ||
            j.at("cutoffs").get<std::vector<std::uint64_t>>() != cfg.cutoffs)
            refuse(path, "parameters disagree with this run's configuration");

        const auto& per = j.at("per_cutoff");
        if (per.size() != cfg.cutoffs.size()) refuse(path, "wrong cutoff count");
        TmSweep sweep;
        for (std::size_t i = 0; i < cfg.cutoffs.size(); ++i) {
            DistributionMeta meta;
            meta.model = "tm";
            meta.params["states"] = std::to_string(cfg.states);
            meta.params["cutoff"] = std::to_string(cfg.cutoffs[i]);
            meta.params["blank"] = std::string(1, char('0' + blank));
            meta.total_programs = range.hi - range.lo;
            meta.halting_count = per[i].at("halting").get<std::uint64_t>();
            EmpiricalDistribution d{std::move(meta)};
            for (const auto& row : per[i].at("counts")) {
                const auto text = row.at(0).get<std::string>();
                d.add(BinaryString::from_text(text),
                      static_cast<double>(row.at(1).get<std::uint64_t>()));
            }
            sweep.per_cutoff.push_back(std::move(d));
            sweep.max_halt_by_cutoff.push_back(per[i].at("max_halt").get<std::uint64_t>());
        }
        sweep.max_halt_steps = sweep.max_halt_by_cutoff.back();
        return sweep;
    } catch (const nlohmann::json::exception& e) {
        refuse(path, std::string("malformed fields (") + e.what() + ")");
    }
}

}  // namespace

std::vector<EmpiricalDistribution> run_tm_sweep(const TmRunConfig& config) {
    if (config.jobs < 1) throw std::invalid_argument("run_tm_sweep: jobs must be >= 1");
    if (config.blanks.empty())
        throw std::invalid_argument("run_tm_sweep: blanks must be non-empty");
    const std::uint64_t space = tm_space_size(config.states);
    const std::uint64_t chunks = chunk_count(space, config.chunk_size);
    const std::vector<int> blanks = [&] {
        // Normalize exactly as the sweep itself will.
        std::vector<int> b = config.blanks;
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        return b;
    }();
    const std::uint64_t total_tasks = chunks * blanks.size();

    const bool checkpointing = !config.checkpoint_dir.empty();
    const fs::path dir = config.checkpoint_dir;
    if (checkpointing) fs::create_directories(dir);

    std::vector<std::optional<TmSweep>> results(total_tasks);
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto do_task = [&](std::uint64_t t) {
        const int blank = blanks[t / chunks];
        const std::uint64_t ci = t % chunks;
        const ChunkRange range = chunk_bounds(space, config.chunk_size, ci);
        if (checkpointing) {
            const fs::path path = dir / chunk_file_name(blank, ci);
            if (fs::exists(path)) {
                results[t] = load_chunk(path, config, blank, range);
                return;
            }
            TmSweep sweep =
                tm_sweep_range(config.states, config.cutoffs, blank, range.lo, range.hi);
            write_chunk(path, config, blank, range, sweep);
            results[t] = std::move(sweep);
            return;
        }
        results[t] =
            tm_sweep_range(config.states, config.cutoffs, blank, range.lo, range.hi);
    };

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::uint64_t t = next.fetch_add(1);
            if (t >= total_tasks) return;
            try {
                do_task(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    const std::uint64_t nthreads =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(config.jobs), total_tasks);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::uint64_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    // Fold in task order; counts are exact integers, so any order would give
    // the same result, but a fixed order keeps the code free of that proof.
    std::vector<TmSweep> parts;
    parts.reserve(total_tasks);
    for (auto& r : results) parts.push_back(std::move(*r));
    return combine_tm_sweeps(config.states, config.cutoffs, blanks, parts);
}

}  // namespace algoprob
