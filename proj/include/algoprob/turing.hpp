#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "algoprob/binary_string.hpp"
#include "algoprob/distribution.hpp"

namespace algoprob {

// One rule entry. halt: write `write` and stop, the head does not move.
// Otherwise write, move (0 = left, 1 = right) and continue in state `next`.
struct TmEntry {
    bool halt = true;
    int write = 0;
    int move = 0;
    int next = 1;

    friend bool operator==(const TmEntry&, const TmEntry&) = default;
};

// Busy-beaver-style machine: states 1..n, symbols {0,1}, one entry per
// (state, symbol). The entry for (state i, symbol r) sits at slot (i-1)*2+r.
struct TuringMachine {
    int n = 1;
    std::vector<TmEntry> entries;

    const TmEntry& at(int state, int symbol) const {
        return entries[std::size_t(state - 1) * 2 + unsigned(symbol)];
    }

    friend bool operator==(const TuringMachine&, const TuringMachine&) = default;
};

// Machine index: each slot is a digit in [0, 4n+2), little-endian mixed
// radix over the 2n slots (slot 0 varies fastest). Digits 0 and 1 are the
// two halt entries; digit 2+e is Step(write=e&1, move=e>>1&1, next=(e>>2)+1),
// so the space size is (4n+2)^(2n).
std::uint64_t tm_space_size(int n);
TuringMachine machine_from_index(int n, std::uint64_t idx);
std::uint64_t machine_to_index(const TuringMachine& tm);

enum class SimStatus { Halted, Cutoff };

struct SimOutcome {
    SimStatus status = SimStatus::Cutoff;
    std::uint64_t steps = 0;   // halting step, or `cutoff` when cut off
    BinaryString output;       // meaningful only when Halted
};

// Runs from state 1, head at the origin of a bi-infinite tape of `blank`.
// A halt entry writes and stops, and that counts as a step. The output is
// the contiguous segment of every cell the head occupied, left to right.
// Machines provably running off the tape end are classified Cutoff early;
// the reported outcome is identical to running out the full budget.
SimOutcome simulate(const TuringMachine& tm, int blank, std::uint64_t cutoff);

// Uniform machine-index sample (with replacement, mt19937_64). The same
// index list is reused for every blank so relabeling symmetries survive
// sampling. count >= space size means full enumeration.
struct Sampler {
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
};

// Output histograms over all machines (or a sample) for each blank in
// `blanks`, one distribution per cutoff, simulating each machine once
// against the largest cutoff. cutoffs must be strictly increasing. Meta
// carries states, cutoff, blanks and the maximum halting step seen.
std::vector<EmpiricalDistribution> ctm_distributions(
    int n, const std::vector<std::uint64_t>& cutoffs, const std::vector<int>& blanks = {0},
    const std::optional<Sampler>& sampler = std::nullopt);

EmpiricalDistribution ctm_distribution(int n, std::uint64_t cutoff,
                                       const std::vector<int>& blanks = {0},
                                       const std::optional<Sampler>& sampler = std::nullopt);

// Partial full-enumeration sweep over machine indices [lo, hi) under one
// blank; the building block for partitioned and checkpointed runs. Partials
// over disjoint ranges of the same (n, cutoffs, blank) merge() into exactly
// the single-range result.
struct TmSweep {
    std::vector<EmpiricalDistribution> per_cutoff;
    // max halting step among machines halting within cutoff i
    std::vector<std::uint64_t> max_halt_by_cutoff;
    std::uint64_t max_halt_steps = 0;
};

TmSweep tm_sweep_range(int n, const std::vector<std::uint64_t>& cutoffs, int blank,
                       std::uint64_t lo, std::uint64_t hi);

// Folds partial sweeps back into what one uninterrupted run would produce:
// the result is identical to ctm_distributions(n, cutoffs, blanks). The
// parts must jointly cover every (machine index, blank) pair exactly once;
// a count or blank mismatch is refused.
std::vector<EmpiricalDistribution> combine_tm_sweeps(int n,
                                                     const std::vector<std::uint64_t>& cutoffs,
                                                     const std::vector<int>& blanks,
                                                     const std::vector<TmSweep>& parts);

// Machines with no halt entries: digits in [0, 4n), all Step form, space
// (4n)^(2n). They run exactly `steps` steps and the output is the visited
// segment at that moment.
std::uint64_t nonhalting_tm_space_size(int n);
TuringMachine nonhalting_machine_from_index(int n, std::uint64_t idx);
std::uint64_t nonhalting_machine_to_index(const TuringMachine& tm);

BinaryString nonhalting_snapshot(const TuringMachine& tm, int blank, std::uint64_t steps);

EmpiricalDistribution nonhalting_tm_distribution(
    int n, std::uint64_t steps, const std::vector<int>& blanks = {0},
    const std::optional<Sampler>& sampler = std::nullopt);

}  // namespace algoprob
