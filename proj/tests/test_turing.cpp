#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "algoprob/turing.hpp"

using namespace algoprob;

namespace {

BinaryString bs(const std::string& t) { return BinaryString::from_text(t); }

// Reference simulator: map tape, plain step loop, no shortcuts of any kind.
SimOutcome naive_simulate(const TuringMachine& tm, int blank, std::uint64_t cutoff) {
    std::map<long long, int> tape;
    auto read = [&](long long p) {
        auto it = tape.find(p);
        return it == tape.end() ? blank : it->second;
    };
    long long pos = 0, lo = 0, hi = 0;
    int state = 1;
    for (std::uint64_t t = 1; t <= cutoff; ++t) {
        const TmEntry& e = tm.at(state, read(pos));
        tape[pos] = e.write;
        if (e.halt) {
            std::string s;
            for (long long p = lo; p <= hi; ++p) s += char('0' + read(p));
            return {SimStatus::Halted, t, BinaryString(s)};
        }
        pos += e.move ? 1 : -1;
        lo = std::min(lo, pos);
        hi = std::max(hi, pos);
        state = e.next;
    }
    return {SimStatus::Cutoff, cutoff, BinaryString{}};
}

TuringMachine mirrored(const TuringMachine& m) {
    TuringMachine out = m;
    for (auto& e : out.entries)
        if (!e.halt) e.move ^= 1;
    return out;
}

TuringMachine relabeled(const TuringMachine& m) {
    TuringMachine out = m;
    for (int i = 1; i <= m.n; ++i) {
        TmEntry a = m.at(i, 0), b = m.at(i, 1);
        a.write ^= 1;
        b.write ^= 1;
        out.entries[std::size_t(i - 1) * 2 + 0] = b;
        out.entries[std::size_t(i - 1) * 2 + 1] = a;
    }
    return out;
}

}  // namespace

TEST_CASE("machine space sizes") {
    CHECK(tm_space_size(1) == 36);
    CHECK(tm_space_size(2) == 10000);
    CHECK(tm_space_size(3) == 7529536);
    CHECK(tm_space_size(4) == 11019960576ULL);
    CHECK(nonhalting_tm_space_size(2) == 4096);
    CHECK(nonhalting_tm_space_size(3) == 2985984);
    CHECK_THROWS_AS(tm_space_size(0), std::invalid_argument);
    CHECK_THROWS_AS(tm_space_size(7), std::invalid_argument);
}

TEST_CASE("machine index round trip") {
    for (std::uint64_t i = 0; i < tm_space_size(1); ++i)
        REQUIRE(machine_to_index(machine_from_index(1, i)) == i);
    for (std::uint64_t i = 0; i < tm_space_size(2); ++i)
        REQUIRE(machine_to_index(machine_from_index(2, i)) == i);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        std::uint64_t i = rng() % tm_space_size(4);
        REQUIRE(machine_to_index(machine_from_index(4, i)) == i);
    }
    CHECK_THROWS_AS(machine_from_index(2, tm_space_size(2)), std::out_of_range);

    for (std::uint64_t i = 0; i < nonhalting_tm_space_size(2); ++i) {
        TuringMachine m = nonhalting_machine_from_index(2, i);
        for (const auto& e : m.entries) REQUIRE_FALSE(e.halt);
        REQUIRE(nonhalting_machine_to_index(m) == i);
    }
}

TEST_CASE("immediate halt machines") {
    auto m0 = machine_from_index(2, 0);
    auto r = simulate(m0, 0, 107);
    CHECK(r.status == SimStatus::Halted);
    CHECK(r.steps == 1);
    CHECK(r.output == bs("0"));

    // index 1: entry (1, symbol 0) is Halt(write 1), entry (1, symbol 1) is Halt(write 0)
    auto m1 = machine_from_index(2, 1);
    auto r0 = simulate(m1, 0, 107);
    CHECK(r0.output == bs("1"));
    auto r1 = simulate(m1, 1, 107);
    CHECK(r1.steps == 1);
    CHECK(r1.output == bs("0"));
}

TEST_CASE("busy beaver (2,2) champion") {
    // digits (1,0)->1RB, (1,1)->1LB, (2,0)->1LA, (2,1)->Halt(1): index 1379
    auto m = machine_from_index(2, 1379);
    auto r = simulate(m, 0, 107);
    CHECK(r.status == SimStatus::Halted);
    CHECK(r.steps == 6);
    CHECK(r.output == bs("1111"));
    auto n = naive_simulate(m, 0, 107);
    CHECK(n.steps == 6);
    CHECK(n.output == bs("1111"));
}

TEST_CASE("two-cycle machine never halts") {
    // (1,0): write 0 right to state 2; (2,0): write 0 left to state 1
    TuringMachine m;
    m.n = 2;
    m.entries = {TmEntry{false, 0, 1, 2}, TmEntry{true, 0, 0, 1}, TmEntry{false, 0, 0, 1},
                 TmEntry{true, 0, 0, 1}};
    for (std::uint64_t cutoff : {std::uint64_t(5), std::uint64_t(500)}) {
        auto r = simulate(m, 0, cutoff);
        CHECK(r.status == SimStatus::Cutoff);
        CHECK(r.steps == cutoff);
    }
}

TEST_CASE("simulate agrees with the reference simulator") {
    std::map<std::string, std::uint64_t> naive_hist;
    std::uint64_t naive_halting = 0, naive_max_steps = 0;
    for (int blank : {0, 1}) {
        for (std::uint64_t idx = 0; idx < tm_space_size(2); ++idx) {
            auto m = machine_from_index(2, idx);
            auto fast = simulate(m, blank, 107);
            auto slow = naive_simulate(m, blank, 107);
            REQUIRE(fast.status == slow.status);
            REQUIRE(fast.steps == slow.steps);
            if (fast.status == SimStatus::Halted) {
                REQUIRE(fast.output == slow.output);
                REQUIRE(fast.steps >= 1);
                ++naive_hist[slow.output.bits()];
                ++naive_halting;
                naive_max_steps = std::max(naive_max_steps, slow.steps);
            }
        }
    }
    CHECK(naive_max_steps == 6);

    // the full-space distribution must reproduce the reference tally exactly
    auto d = ctm_distribution(2, 107, {0, 1});
    CHECK(d.meta().total_programs == 20000);
    CHECK(d.meta().halting_count == naive_halting);
    CHECK(d.meta().params.at("states") == "2");
    CHECK(d.meta().params.at("cutoff") == "107");
    CHECK(d.meta().params.at("blanks") == "01");
    CHECK(d.meta().params.at("max_halt_steps") == "6");
    CHECK(d.support_size() == naive_hist.size());
    for (const auto& [s, c] : naive_hist) REQUIRE(d.count(BinaryString(s)) == double(c));
    CHECK(d.total() == double(naive_halting));
}

TEST_CASE("simulate agrees with the reference simulator on sampled (3,2) machines") {
    std::mt19937_64 rng(20260816);
    for (int t = 0; t < 2000; ++t) {
        std::uint64_t idx = rng() % tm_space_size(3);
        auto m = machine_from_index(3, idx);
        for (int blank : {0, 1}) {
            auto fast = simulate(m, blank, 107);
            auto slow = naive_simulate(m, blank, 107);
            REQUIRE(fast.status == slow.status);
            REQUIRE(fast.steps == slow.steps);
            if (fast.status == SimStatus::Halted) REQUIRE(fast.output == slow.output);
        }
    }
}

TEST_CASE("full (2,2) histogram symmetries") {
    auto d = ctm_distribution(2, 107, {0, 1});
    CHECK(d.count(bs("0")) == d.count(bs("1")));
    CHECK(d.count(bs("0")) > 0.0);
    for (const auto& s : d.support()) {
        REQUIRE(d.count(s) == d.count(reverse(s)));
        REQUIRE(d.count(s) == d.count(complement(s)));
    }
}

TEST_CASE("multi-cutoff sweep matches independent single-cutoff runs") {
    auto multi = ctm_distributions(2, {2, 6, 107}, {0, 1});
    REQUIRE(multi.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        auto single = ctm_distribution(2, std::vector<std::uint64_t>{2, 6, 107}[i], {0, 1});
        REQUIRE(multi[i].meta() == single.meta());
        REQUIRE(multi[i].counts() == single.counts());
    }
    // every (2,2) halter stops by step 6, so cutoffs 6 and 107 coincide
    CHECK(multi[1].counts() == multi[2].counts());
    CHECK(multi[1].meta().halting_count == multi[2].meta().halting_count);
    CHECK(multi[0].meta().halting_count < multi[1].meta().halting_count);
    for (const auto& [s, c] : multi[0].counts()) REQUIRE(c <= multi[2].count(s));
}

TEST_CASE("range sweeps merge to the full sweep") {
    auto full = tm_sweep_range(2, {107}, 0, 0, 10000);
    auto a = tm_sweep_range(2, {107}, 0, 0, 3333);
    auto b = tm_sweep_range(2, {107}, 0, 3333, 10000);
    auto joined = merge(a.per_cutoff[0], b.per_cutoff[0]);
    CHECK(joined.counts() == full.per_cutoff[0].counts());
    CHECK(joined.meta() == full.per_cutoff[0].meta());
    CHECK(std::max(a.max_halt_steps, b.max_halt_steps) == full.max_halt_steps);
}

TEST_CASE("mirror and relabel bijections act on single runs") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 400; ++t) {
        int n = (t % 2) ? 2 : 3;
        std::uint64_t idx = rng() % tm_space_size(n);
        auto m = machine_from_index(n, idx);
        int blank = int(rng() % 2);

        auto base = simulate(m, blank, 107);
        auto mir = simulate(mirrored(m), blank, 107);
        REQUIRE(base.status == mir.status);
        REQUIRE(base.steps == mir.steps);
        if (base.status == SimStatus::Halted) REQUIRE(mir.output == reverse(base.output));

        auto rel = simulate(relabeled(m), 1 - blank, 107);
        REQUIRE(base.status == rel.status);
        REQUIRE(base.steps == rel.steps);
        if (base.status == SimStatus::Halted) REQUIRE(rel.output == complement(base.output));
    }
}

TEST_CASE("sampled runs are seeded and clamp to full enumeration") {
    Sampler s{7, 500};
    auto d1 = ctm_distribution(3, 21, {0}, s);
    auto d2 = ctm_distribution(3, 21, {0}, s);
    CHECK(d1.meta() == d2.meta());
    CHECK(d1.counts() == d2.counts());
    CHECK(d1.meta().total_programs == 500);
    CHECK(d1.meta().params.at("sample") == "500");
    CHECK(d1.meta().params.at("seed") == "7");

    auto clamped = ctm_distribution(2, 6, {0}, Sampler{1, 20000});
    auto full = ctm_distribution(2, 6, {0});
    CHECK(clamped.meta() == full.meta());
    CHECK(clamped.counts() == full.counts());
}

TEST_CASE("machines without halt entries") {
    // index 0: every entry writes 0 and moves left into state 1
    auto m = nonhalting_machine_from_index(2, 0);
    CHECK(nonhalting_snapshot(m, 0, 8) == bs("000000000"));
    CHECK(nonhalting_snapshot(m, 1, 8) == bs("100000000"));

    auto d = nonhalting_tm_distribution(2, 8, {0, 1});
    CHECK(d.meta().model == "tm-nonhalting");
    CHECK(d.meta().total_programs == 8192);
    CHECK(d.meta().halting_count == 8192);
    CHECK(d.total() == 8192.0);
    CHECK(d.meta().params.at("steps") == "8");
    for (const auto& s : d.support()) {
        REQUIRE(d.count(s) == d.count(complement(s)));
        REQUIRE(d.count(s) == d.count(reverse(s)));
    }

    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        auto g = nonhalting_machine_from_index(2, rng() % nonhalting_tm_space_size(2));
        int blank = int(rng() % 2);
        CHECK(nonhalting_snapshot(mirrored(g), blank, 13) ==
              reverse(nonhalting_snapshot(g, blank, 13)));
        CHECK(nonhalting_snapshot(relabeled(g), 1 - blank, 13) ==
              complement(nonhalting_snapshot(g, blank, 13)));
    }
}
