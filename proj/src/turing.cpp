#include "algoprob/turing.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace algoprob {

namespace {

void check_states(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("turing: state count must be in 1..6");
}

void check_blank(int blank) {
    if (blank != 0 && blank != 1) throw std::invalid_argument("turing: blank must be 0 or 1");
}

std::vector<int> checked_blanks(const std::vector<int>& blanks) {
    if (blanks.empty()) throw std::invalid_argument("turing: blanks must be non-empty");
    std::vector<int> b = blanks;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (int x : b) check_blank(x);
    return b;
}

std::string blanks_text(const std::vector<int>& blanks) {
    std::string t;
    for (int b : blanks) t += char('0' + b);
    return t;
}

void check_cutoffs(const std::vector<std::uint64_t>& cutoffs) {
    if (cutoffs.empty()) throw std::invalid_argument("turing: cutoffs must be non-empty");
    if (cutoffs.front() < 1) throw std::invalid_argument("turing: cutoff must be >= 1");
    for (std::size_t i = 1; i < cutoffs.size(); ++i)
        if (cutoffs[i] <= cutoffs[i - 1])
            throw std::invalid_argument("turing: cutoffs must be strictly increasing");
}

TmEntry decode_halting_digit(int d) {
    TmEntry e;
    if (d < 2) {
        e.halt = true;
        e.write = d;
    } else {
        int x = d - 2;
        e.halt = false;
        e.write = x & 1;
        e.move = (x >> 1) & 1;
        e.next = (x >> 2) + 1;
    }
    return e;
}

TmEntry decode_step_digit(int d) {
    TmEntry e;
    e.halt = false;
    e.write = d & 1;
    e.move = (d >> 1) & 1;
    e.next = (d >> 2) + 1;
    return e;
}

int encode_entry(int n, const TmEntry& e) {
    if (e.write != 0 && e.write != 1) throw std::invalid_argument("turing: bad write symbol");
    if (e.halt) return e.write;
    if (e.move != 0 && e.move != 1) throw std::invalid_argument("turing: bad move");
    if (e.next < 1 || e.next > n) throw std::invalid_argument("turing: bad next state");
    return 2 + (e.write | (e.move << 1) | ((e.next - 1) << 2));
}

struct RunResult {
    bool halted = false;
    std::uint64_t steps = 0;
    std::int64_t lo = 0, hi = 0;  // visited segment, tape coordinates
};

// The caller provides a tape prefilled with the blank symbol and wide enough
// for `cutoff` moves either way from `origin`; on return it restores the
// visited segment itself. With detect_runners set, a machine arriving at a
// fresh frontier cell twice in the same state with only fresh cells between
// is repeating a rigid rightward (or leftward) motif over blank tape and can
// never halt, so it is classified Cutoff without running out the budget.
RunResult run_core(const TmEntry* entries, std::uint64_t cutoff, std::uint8_t* tape,
                   std::int64_t origin, bool detect_runners) {
    std::int64_t pos = origin, lo = origin, hi = origin;
    int state = 1;
    std::uint64_t left_mask = 0, right_mask = 0;
    for (std::uint64_t t = 1; t <= cutoff; ++t) {
        const TmEntry& e = entries[std::size_t(state - 1) * 2 + tape[pos]];
        tape[pos] = std::uint8_t(e.write);
        if (e.halt) return {true, t, lo, hi};
        if (e.move) {
            if (++pos > hi) {
                hi = pos;
                if (detect_runners) {
                    std::uint64_t bit = std::uint64_t(1) << (e.next - 1);
                    if (right_mask & bit) return {false, cutoff, lo, hi};
                    right_mask |= bit;
                }
            } else {
                left_mask = right_mask = 0;
            }
        } else {
            if (--pos < lo) {
                lo = pos;
                if (detect_runners) {
                    std::uint64_t bit = std::uint64_t(1) << (e.next - 1);
                    if (left_mask & bit) return {false, cutoff, lo, hi};
                    left_mask |= bit;
                }
            } else {
                left_mask = right_mask = 0;
            }
        }
        state = e.next;
    }
    return {false, cutoff, lo, hi};
}

constexpr int kFlatMaxLen = 12;

// Tally keyed (1 << len) | value for outputs of at most kFlatMaxLen bits,
// spilling longer ones to a map. Flat keys make the hot path one increment.
struct RawHist {
    std::vector<std::uint64_t> flat;
    std::unordered_map<std::string, std::uint64_t> big;
    std::uint64_t produced = 0;

    RawHist() : flat(std::size_t(1) << (kFlatMaxLen + 1), 0) {}

    void add_segment(const std::uint8_t* tape, std::int64_t lo, std::int64_t hi) {
        std::int64_t len = hi - lo + 1;
        if (len <= kFlatMaxLen) {
            std::uint64_t v = 0;
            for (std::int64_t p = lo; p <= hi; ++p) v = v << 1 | tape[p];
            ++flat[(std::uint64_t(1) << len) | v];
        } else {
            std::string s(std::size_t(len), '0');
            for (std::int64_t p = lo; p <= hi; ++p) s[std::size_t(p - lo)] = char('0' + tape[p]);
            ++big[s];
        }
        ++produced;
    }

    void add_all(const RawHist& other) {
        for (std::size_t k = 0; k < flat.size(); ++k) flat[k] += other.flat[k];
        for (const auto& [s, c] : other.big) big[s] += c;
        produced += other.produced;
    }
};

void fill_distribution(EmpiricalDistribution& d, const RawHist& h) {
    for (std::size_t k = 2; k < h.flat.size(); ++k) {
        if (!h.flat[k]) continue;
        int len = std::bit_width(k) - 1;
        std::uint64_t value = k - (std::uint64_t(1) << len);
        d.add(BinaryString::from_packed(value, std::size_t(len)), double(h.flat[k]));
    }
    for (const auto& [s, c] : h.big) d.add(BinaryString(s), double(c));
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

std::uint64_t tm_space_size(int n) {
    check_states(n);
    return pow_u64(std::uint64_t(4 * n + 2), 2 * n);
}

TuringMachine machine_from_index(int n, std::uint64_t idx) {
    if (idx >= tm_space_size(n)) throw std::out_of_range("machine_from_index: index out of range");
    const std::uint64_t radix = std::uint64_t(4 * n + 2);
    TuringMachine tm;
    tm.n = n;
    tm.entries.resize(std::size_t(2 * n));
    for (int k = 0; k < 2 * n; ++k) {
        tm.entries[std::size_t(k)] = decode_halting_digit(int(idx % radix));
        idx /= radix;
    }
    return tm;
}

std::uint64_t machine_to_index(const TuringMachine& tm) {
    check_states(tm.n);
    if (tm.entries.size() != std::size_t(2 * tm.n))
        throw std::invalid_argument("machine_to_index: wrong entry count");
    const std::uint64_t radix = std::uint64_t(4 * tm.n + 2);
    std::uint64_t idx = 0;
    for (int k = 2 * tm.n - 1; k >= 0; --k)
        idx = idx * radix + std::uint64_t(encode_entry(tm.n, tm.entries[std::size_t(k)]));
    return idx;
}

SimOutcome simulate(const TuringMachine& tm, int blank, std::uint64_t cutoff) {
    check_states(tm.n);
    check_blank(blank);
    if (cutoff < 1) throw std::invalid_argument("simulate: cutoff must be >= 1");
    if (tm.entries.size() != std::size_t(2 * tm.n))
        throw std::invalid_argument("simulate: wrong entry count");
    for (const auto& e : tm.entries) (void)encode_entry(tm.n, e);

    std::vector<std::uint8_t> tape(std::size_t(2 * cutoff + 3), std::uint8_t(blank));
    const std::int64_t origin = std::int64_t(cutoff) + 1;
    RunResult r = run_core(tm.entries.data(), cutoff, tape.data(), origin, true);
    SimOutcome out;
    out.status = r.halted ? SimStatus::Halted : SimStatus::Cutoff;
    out.steps = r.steps;
    if (r.halted) {
        std::string s(std::size_t(r.hi - r.lo + 1), '0');
        for (std::int64_t p = r.lo; p <= r.hi; ++p)
            s[std::size_t(p - r.lo)] = char('0' + tape[std::size_t(p)]);
        out.output = BinaryString(std::move(s));
    }
    return out;
}

TmSweep tm_sweep_range(int n, const std::vector<std::uint64_t>& cutoffs, int blank,
                       std::uint64_t lo_idx, std::uint64_t hi_idx) {
    check_states(n);
    check_blank(blank);
    check_cutoffs(cutoffs);
    const std::uint64_t space = tm_space_size(n);
    if (lo_idx > hi_idx || hi_idx > space)
        throw std::out_of_range("tm_sweep_range: bad index range");

    const std::uint64_t cmax = cutoffs.back();
    const int radix = 4 * n + 2;
    const int slots = 2 * n;

    std::vector<std::uint8_t> tape(std::size_t(2 * cmax + 3), std::uint8_t(blank));
    const std::int64_t origin = std::int64_t(cmax) + 1;

    std::vector<int> digits(static_cast<std::size_t>(slots));
    std::vector<TmEntry> entries(static_cast<std::size_t>(slots));
    int halt_digits = 0;
    {
        std::uint64_t x = lo_idx;
        for (int k = 0; k < slots; ++k) {
            digits[std::size_t(k)] = int(x % std::uint64_t(radix));
            x /= std::uint64_t(radix);
            entries[std::size_t(k)] = decode_halting_digit(digits[std::size_t(k)]);
            if (digits[std::size_t(k)] < 2) ++halt_digits;
        }
    }

    std::vector<RawHist> buckets(cutoffs.size());
    std::vector<std::uint64_t> bucket_max(cutoffs.size(), 0);

    for (std::uint64_t idx = lo_idx; idx < hi_idx; ++idx) {
        if (idx != lo_idx) {
            // odometer advance; digits 0 and 1 are the halt entries, so the
            // halt-digit counter changes only on a 1->2 step or a wrap to 0
            int k = 0;
            for (;;) {
                int d = digits[std::size_t(k)];
                if (d + 1 == radix) {
                    digits[std::size_t(k)] = 0;
                    entries[std::size_t(k)] = decode_halting_digit(0);
                    ++halt_digits;
                    ++k;
                } else {
                    digits[std::size_t(k)] = d + 1;
                    entries[std::size_t(k)] = decode_halting_digit(d + 1);
                    if (d == 1) --halt_digits;
                    break;
                }
            }
        }
        // no halt entry anywhere means no possible contribution
        if (halt_digits == 0) continue;
        RunResult r = run_core(entries.data(), cmax, tape.data(), origin, true);
        if (r.halted) {
            std::size_t bi = std::size_t(
                std::lower_bound(cutoffs.begin(), cutoffs.end(), r.steps) - cutoffs.begin());
            if (r.steps > bucket_max[bi]) bucket_max[bi] = r.steps;
            buckets[bi].add_segment(tape.data(), r.lo, r.hi);
        }
        for (std::int64_t p = r.lo; p <= r.hi; ++p) tape[std::size_t(p)] = std::uint8_t(blank);
    }

    TmSweep sweep;
    RawHist acc;
    std::uint64_t run_max = 0;
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        run_max = std::max(run_max, bucket_max[i]);
        sweep.max_halt_by_cutoff.push_back(run_max);
        acc.add_all(buckets[i]);
        DistributionMeta meta;
        meta.model = "tm";
        meta.params["states"] = std::to_string(n);
        meta.params["cutoff"] = std::to_string(cutoffs[i]);
        meta.params["blank"] = std::string(1, char('0' + blank));
        meta.total_programs = hi_idx - lo_idx;
        meta.halting_count = acc.produced;
        EmpiricalDistribution d{std::move(meta)};
        fill_distribution(d, acc);
        sweep.per_cutoff.push_back(std::move(d));
    }
    sweep.max_halt_steps = sweep.max_halt_by_cutoff.back();
    return sweep;
}

std::vector<EmpiricalDistribution> combine_tm_sweeps(int n,
                                                     const std::vector<std::uint64_t>& cutoffs,
                                                     const std::vector<int>& blanks,
                                                     const std::vector<TmSweep>& parts) {
    check_states(n);
    check_cutoffs(cutoffs);
    const std::vector<int> b = checked_blanks(blanks);
    if (parts.empty()) throw std::invalid_argument("combine_tm_sweeps: no parts");

    const std::uint64_t space = tm_space_size(n);
    std::vector<RawHist> acc(cutoffs.size());
    std::vector<std::uint64_t> max_by_cutoff(cutoffs.size(), 0);
    std::map<std::string, std::uint64_t> covered_by_blank;

    for (const auto& s : parts) {
        if (s.per_cutoff.size() != cutoffs.size() ||
            s.max_halt_by_cutoff.size() != cutoffs.size())
            throw std::invalid_argument("combine_tm_sweeps: part shape mismatch");
        covered_by_blank[s.per_cutoff[0].meta().params.at("blank")] +=
            s.per_cutoff[0].meta().total_programs;
        for (std::size_t i = 0; i < cutoffs.size(); ++i) {
            const DistributionMeta& meta = s.per_cutoff[i].meta();
            if (meta.params.at("states") != std::to_string(n) ||
                meta.params.at("cutoff") != std::to_string(cutoffs[i]))
                throw std::invalid_argument("combine_tm_sweeps: part parameter mismatch");
            max_by_cutoff[i] = std::max(max_by_cutoff[i], s.max_halt_by_cutoff[i]);
            for (const auto& [str, c] : s.per_cutoff[i].counts()) {
                std::int64_t len = std::int64_t(str.size());
                if (len <= kFlatMaxLen) {
                    std::uint64_t v = 0;
                    for (std::size_t bi = 0; bi < str.size(); ++bi)
                        v = v << 1 | unsigned(str.bit(bi));
                    acc[i].flat[(std::uint64_t(1) << len) | v] += std::uint64_t(c);
                } else {
                    acc[i].big[str.bits()] += std::uint64_t(c);
                }
            }
            acc[i].produced += meta.halting_count;
        }
    }

    // Every (machine, blank) pair exactly once: per-blank coverage must be
    // the whole index space, and no stray blanks may appear.
    if (covered_by_blank.size() != b.size())
        throw std::invalid_argument("combine_tm_sweeps: parts cover the wrong blank set");
    for (int blank : b) {
        auto it = covered_by_blank.find(std::string(1, char('0' + blank)));
        if (it == covered_by_blank.end() || it->second != space)
            throw std::invalid_argument(
                "combine_tm_sweeps: parts do not cover each blank's space exactly once");
    }

    std::vector<EmpiricalDistribution> out;
    out.reserve(cutoffs.size());
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        DistributionMeta meta;
        meta.model = "tm";
        meta.params["states"] = std::to_string(n);
        meta.params["cutoff"] = std::to_string(cutoffs[i]);
        meta.params["blanks"] = blanks_text(b);
        meta.params["max_halt_steps"] = std::to_string(max_by_cutoff[i]);
        meta.total_programs = space * b.size();
        meta.halting_count = acc[i].produced;
        EmpiricalDistribution d{std::move(meta)};
        fill_distribution(d, acc[i]);
        out.push_back(std::move(d));
    }
    return out;
}

namespace {

// Shared full/sampled assembly for the public distribution builders.
std::vector<EmpiricalDistribution> assemble(
    int n, const std::vector<std::uint64_t>& cutoffs, const std::vector<int>& blanks,
    const std::optional<Sampler>& sampler, std::uint64_t space, bool halting_form,
    const char* model, const char* budget_key) {
    std::vector<std::uint64_t> sample_idxs;
    bool sampled = sampler.has_value() && sampler->count < space;
    if (sampled) {
        if (sampler->count == 0) throw std::invalid_argument("turing: sample count must be >= 1");
        std::mt19937_64 rng(sampler->seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, space - 1);
        sample_idxs.resize(sampler->count);
        for (auto& v : sample_idxs) v = pick(rng);
    }

    const std::uint64_t cmax = cutoffs.back();
    const std::uint64_t per_blank = sampled ? sample_idxs.size() : space;
    std::vector<RawHist> acc(cutoffs.size());
    std::vector<std::uint64_t> max_by_cutoff(cutoffs.size(), 0);

    for (int blank : blanks) {
        std::vector<std::uint8_t> tape(std::size_t(2 * cmax + 3), std::uint8_t(blank));
        const std::int64_t origin = std::int64_t(cmax) + 1;
        std::vector<RawHist> buckets(cutoffs.size());
        std::vector<std::uint64_t> bucket_max(cutoffs.size(), 0);
        auto run_one = [&](std::uint64_t idx) {
            TuringMachine tm =
                halting_form ? machine_from_index(n, idx) : nonhalting_machine_from_index(n, idx);
            RunResult r = run_core(tm.entries.data(), cmax, tape.data(), origin, halting_form);
            if (halting_form) {
                if (r.halted) {
                    std::size_t bi = std::size_t(
                        std::lower_bound(cutoffs.begin(), cutoffs.end(), r.steps) - cutoffs.begin());
                    if (r.steps > bucket_max[bi]) bucket_max[bi] = r.steps;
                    buckets[bi].add_segment(tape.data(), r.lo, r.hi);
                }
            } else {
                buckets[0].add_segment(tape.data(), r.lo, r.hi);
            }
            for (std::int64_t p = r.lo; p <= r.hi; ++p) tape[std::size_t(p)] = std::uint8_t(blank);
        };
        if (sampled) {
            for (std::uint64_t idx : sample_idxs) run_one(idx);
        } else {
            for (std::uint64_t idx = 0; idx < space; ++idx) run_one(idx);
        }
        std::uint64_t run_max = 0;
        for (std::size_t i = 0; i < cutoffs.size(); ++i) {
            run_max = std::max(run_max, bucket_max[i]);
            max_by_cutoff[i] = std::max(max_by_cutoff[i], run_max);
            if (i > 0) buckets[i].add_all(buckets[i - 1]);
            acc[i].add_all(buckets[i]);
        }
    }

    std::vector<EmpiricalDistribution> out;
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        DistributionMeta meta;
        meta.model = model;
        meta.params["states"] = std::to_string(n);
        meta.params[budget_key] = std::to_string(cutoffs[i]);
        meta.params["blanks"] = blanks_text(blanks);
        if (halting_form) meta.params["max_halt_steps"] = std::to_string(max_by_cutoff[i]);
        if (sampled) {
            meta.params["sample"] = std::to_string(per_blank);
            meta.params["seed"] = std::to_string(sampler->seed);
        }
        meta.total_programs = per_blank * blanks.size();
        meta.halting_count = halting_form ? acc[i].produced : per_blank * blanks.size();
        EmpiricalDistribution d{std::move(meta)};
        fill_distribution(d, acc[i]);
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

std::vector<EmpiricalDistribution> ctm_distributions(int n,
                                                     const std::vector<std::uint64_t>& cutoffs,
                                                     const std::vector<int>& blanks,
                                                     const std::optional<Sampler>& sampler) {
    check_states(n);
    check_cutoffs(cutoffs);
    auto b = checked_blanks(blanks);
    const std::uint64_t space = tm_space_size(n);
    if (!sampler.has_value() || sampler->count >= space) {
        std::vector<TmSweep> parts;
        parts.reserve(b.size());
        for (int blank : b) parts.push_back(tm_sweep_range(n, cutoffs, blank, 0, space));
        return combine_tm_sweeps(n, cutoffs, b, parts);
    }
    return assemble(n, cutoffs, b, sampler, space, true, "tm", "cutoff");
}

EmpiricalDistribution ctm_distribution(int n, std::uint64_t cutoff, const std::vector<int>& blanks,
                                       const std::optional<Sampler>& sampler) {
    return ctm_distributions(n, {cutoff}, blanks, sampler).front();
}

std::uint64_t nonhalting_tm_space_size(int n) {
    check_states(n);
    return pow_u64(std::uint64_t(4 * n), 2 * n);
}

TuringMachine nonhalting_machine_from_index(int n, std::uint64_t idx) {
    if (idx >= nonhalting_tm_space_size(n))
        throw std::out_of_range("nonhalting_machine_from_index: index out of range");
    const std::uint64_t radix = std::uint64_t(4 * n);
    TuringMachine tm;
    tm.n = n;
    tm.entries.resize(std::size_t(2 * n));
    for (int k = 0; k < 2 * n; ++k) {
        tm.entries[std::size_t(k)] = decode_step_digit(int(idx % radix));
        idx /= radix;
    }
    return tm;
}

std::uint64_t nonhalting_machine_to_index(const TuringMachine& tm) {
    check_states(tm.n);
    if (tm.entries.size() != std::size_t(2 * tm.n))
        throw std::invalid_argument("nonhalting_machine_to_index: wrong entry count");
    const std::uint64_t radix = std::uint64_t(4 * tm.n);
    std::uint64_t idx = 0;
    for (int k = 2 * tm.n - 1; k >= 0; --k) {
        const TmEntry& e = tm.entries[std::size_t(k)];
        if (e.halt) throw std::invalid_argument("nonhalting_machine_to_index: halt entry");
        idx = idx * radix + std::uint64_t(encode_entry(tm.n, e) - 2);
    }
    return idx;
}

BinaryString nonhalting_snapshot(const TuringMachine& tm, int blank, std::uint64_t steps) {
    check_states(tm.n);
    check_blank(blank);
    if (steps < 1) throw std::invalid_argument("nonhalting_snapshot: steps must be >= 1");
    for (const auto& e : tm.entries)
        if (e.halt) throw std::invalid_argument("nonhalting_snapshot: halt entry");
    std::vector<std::uint8_t> tape(std::size_t(2 * steps + 3), std::uint8_t(blank));
    const std::int64_t origin = std::int64_t(steps) + 1;
    RunResult r = run_core(tm.entries.data(), steps, tape.data(), origin, false);
    std::string s(std::size_t(r.hi - r.lo + 1), '0');
    for (std::int64_t p = r.lo; p <= r.hi; ++p)
        s[std::size_t(p - r.lo)] = char('0' + tape[std::size_t(p)]);
    return BinaryString(std::move(s));
}

EmpiricalDistribution nonhalting_tm_distribution(int n, std::uint64_t steps,
                                                 const std::vector<int>& blanks,
                                                 const std::optional<Sampler>& sampler) {
    check_states(n);
    if (steps < 1) throw std::invalid_argument("nonhalting_tm_distribution: steps must be >= 1");
    auto b = checked_blanks(blanks);
    return assemble(n, {steps}, b, sampler, nonhalting_tm_space_size(n), false, "tm-nonhalting",
                    "steps")
        .front();
}

}  // namespace algoprob
