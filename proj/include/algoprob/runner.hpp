#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algoprob/distribution.hpp"
#include "algoprob/turing.hpp"

namespace algoprob {

// Fixed partition of an enumeration index space into chunks of `chunk_size`
// (the last chunk may be short). The grid is a function of the space and
// chunk size alone, never of the worker count, so checkpoint layout and
// fold order stay reproducible.
std::uint64_t chunk_count(std::uint64_t space, std::uint64_t chunk_size);

struct ChunkRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;  // closed-open

    friend bool operator==(const ChunkRange&, const ChunkRange&) = default;
};

ChunkRange chunk_bounds(std::uint64_t space, std::uint64_t chunk_size, std::uint64_t index);

struct TmRunConfig {
    int states = 2;
    std::vector<std::uint64_t> cutoffs{107};
    std::vector<int> blanks{0};
    int jobs = 1;
    // Directory for per-chunk JSON checkpoints; empty runs without them.
    std::string checkpoint_dir;
    std::uint64_t chunk_size = std::uint64_t(1) << 26;
};

// Exhaustive chunked sweep over the whole machine space. The result equals
// ctm_distributions(states, cutoffs, blanks) bit for bit, whatever the jobs
// or chunk_size values. Chunks already present in checkpoint_dir are loaded
// instead of recomputed; each finished chunk is written there atomically
// (temp file + rename), so a killed run resumes without double counting.
// A checkpoint whose content disagrees with the config is refused.
std::vector<EmpiricalDistribution> run_tm_sweep(const TmRunConfig& config);

}  // namespace algoprob
