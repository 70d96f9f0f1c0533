#include "doctest.h"

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algoprob/cellular.hpp"
#include "algoprob/distribution.hpp"

using namespace algoprob;

namespace {

// Reference evolution on a fixed-width array wide enough that the light cone
// never reaches the edges; out-of-range neighbors read the tracked background.
std::vector<std::string> naive_rows(const CaRule& rule, int steps, CaStart start) {
    const int left = rule.family == CaFamily::Elementary ? 1 : 2;
    const int nsize = left + 2;
    const int width = 6 * steps + 9;
    const int origin = 3 * steps + 4;
    int bg = start == CaStart::OneOnZeros ? 0 : 1;

    std::vector<int> a(static_cast<std::size_t>(width), bg);
    a[static_cast<std::size_t>(origin)] = bg ^ 1;

    std::vector<std::string> out;
    std::vector<int> b(static_cast<std::size_t>(width), 0);
    for (int t = 1; t <= steps; ++t) {
        for (int i = 0; i < width; ++i) {
            int k = 0;
            for (int m = -left; m <= 1; ++m) {
                int idx = i + m;
                int v = (idx >= 0 && idx < width) ? a[static_cast<std::size_t>(idx)] : bg;
                k = (k << 1) | v;
            }
            b[static_cast<std::size_t>(i)] = (rule.rule_number >> k) & 1;
        }
        a.swap(b);
        bg = (rule.rule_number >> (bg ? (1 << nsize) - 1 : 0)) & 1;

        const int lo = origin - t;
        const int hi = origin + (rule.family == CaFamily::Elementary ? t : 2 * t);
        std::string row;
        for (int i = lo; i <= hi; ++i)
            row.push_back(a[static_cast<std::size_t>(i)] ? '1' : '0');
        out.push_back(std::move(row));
    }
    return out;
}

int mirror_rule(CaFamily family, int rule) {
    int out = 0;
    if (family == CaFamily::Elementary) {
        for (int k = 0; k < 8; ++k)
            if ((rule >> k) & 1) {
                int l = (k >> 2) & 1, c = (k >> 1) & 1, r = k & 1;
                out |= 1 << (4 * r + 2 * c + l);
            }
    } else {
        for (int k = 0; k < 16; ++k)
            if ((rule >> k) & 1) {
                int a = (k >> 3) & 1, b = (k >> 2) & 1, c = (k >> 1) & 1, d = k & 1;
                out |= 1 << (8 * d + 4 * c + 2 * b + a);
            }
    }
    return out;
}

int conjugate_rule(CaFamily family, int rule) {
    const int bits = family == CaFamily::Elementary ? 8 : 16;
    const int mask = bits - 1;
    int out = 0;
    for (int k = 0; k < bits; ++k)
        if (((rule >> (mask - k)) & 1) == 0) out |= 1 << k;
    return out;
}

std::string text_rows(const std::vector<BinaryString>& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += r.bits();
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("CA family constants and argument checking") {
    CHECK(ca_neighborhood_size(CaFamily::Elementary) == 3);
    CHECK(ca_neighborhood_size(CaFamily::General) == 4);
    CHECK(ca_rule_count(CaFamily::Elementary) == 256);
    CHECK(ca_rule_count(CaFamily::General) == 65536);

    CHECK_THROWS_AS(ca_evolve({CaFamily::Elementary, 256}, 1), std::invalid_argument);
    CHECK_THROWS_AS(ca_evolve({CaFamily::Elementary, -1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(ca_evolve({CaFamily::General, 65536}, 1), std::invalid_argument);
    CHECK_THROWS_AS(ca_evolve({CaFamily::Elementary, 90}, 0), std::invalid_argument);
    CHECK_THROWS_AS(ca_distribution(CaFamily::Elementary, 0), std::invalid_argument);
    CHECK_NOTHROW(ca_evolve({CaFamily::General, 65535}, 1));
}

TEST_CASE("rule 0 rows are all zeros, rule 254 rows are all ones") {
    auto zeros = ca_evolve({CaFamily::Elementary, 0}, 13);
    auto ones = ca_evolve({CaFamily::Elementary, 254}, 13);
    REQUIRE(zeros.size() == 13);
    REQUIRE(ones.size() == 13);
    for (int t = 1; t <= 13; ++t) {
        const std::size_t len = static_cast<std::size_t>(2 * t + 1);
        CHECK(zeros[static_cast<std::size_t>(t - 1)].bits() == std::string(len, '0'));
        CHECK(ones[static_cast<std::size_t>(t - 1)].bits() == std::string(len, '1'));
    }
    CHECK(ca_row_window(zeros[12], 12).bits() == std::string(12, '0'));
    CHECK(ca_row_window(ones[12], 12).bits() == std::string(12, '1'));
}

TEST_CASE("rule 90 reproduces the parity triangle") {
    auto rows = ca_evolve({CaFamily::Elementary, 90}, 12);
    CHECK(rows[0].bits() == "101");
    CHECK(rows[1].bits() == "10001");
    CHECK(rows[2].bits() == "1010101");
    CHECK(rows[3].bits() == "100000001");
    CHECK(rows[5].bits() == "1000100010001");
    CHECK(ca_row_window(rows[5], 12).bits() == "100010001000");

    // Cell at offset i of row t is C(t, i/2) mod 2 when i is even, else 0.
    for (int t = 1; t <= 12; ++t) {
        const auto& row = rows[static_cast<std::size_t>(t - 1)];
        REQUIRE(row.size() == static_cast<std::size_t>(2 * t + 1));
        for (int i = 0; i <= 2 * t; ++i) {
            int expect = 0;
            if (i % 2 == 0) {
                int k = i / 2;
                expect = ((k & (t - k)) == 0) ? 1 : 0;
            }
            CHECK(row.bit(static_cast<std::size_t>(i)) == expect);
        }
    }
}

TEST_CASE("odd rules flip the background and stay exact") {
    // Rule 1 maps only the all-zero neighborhood to 1, so the background
    // blinks: 0 → 1 → 0 → 1. At t = 2 the window edges border the flipped
    // background, so only the center cell (whose whole neighborhood was 0)
    // turns on; at t = 3 the pattern inverts near the edges.
    auto rows = ca_evolve({CaFamily::Elementary, 1}, 3);
    CHECK(rows[0].bits() == "000");
    CHECK(rows[1].bits() == "00100");
    CHECK(rows[2].bits() == "1100011");
}

TEST_CASE("general rule light cone reaches two cells right per step") {
    // Rule 65280 copies the cell two to the left, pushing the seed rightward.
    auto rows = ca_evolve({CaFamily::General, 65280}, 4);
    for (int t = 1; t <= 4; ++t) {
        std::string expect(static_cast<std::size_t>(3 * t + 1), '0');
        expect.back() = '1';
        CHECK(rows[static_cast<std::size_t>(t - 1)].bits() == expect);
    }
}

TEST_CASE("row window keeps the centered cells") {
    BinaryString short_row{"10101"};
    CHECK(ca_row_window(short_row, 12) == short_row);
    CHECK(ca_row_window(BinaryString{"1100110011001"}, 12).bits() == "110011001100");
    CHECK(ca_row_window(BinaryString{"110011001100110"}, 12).bits() == "100110011001");
    CHECK(ca_row_window(BinaryString{}, 12).empty());
}

TEST_CASE("evolution matches the fixed-width reference") {
    std::size_t mismatches = 0;
    for (int r = 0; r < 256; ++r)
        for (CaStart start : {CaStart::OneOnZeros, CaStart::ZeroOnOnes}) {
            auto got = ca_evolve({CaFamily::Elementary, r}, 9, start);
            auto ref = naive_rows({CaFamily::Elementary, r}, 9, start);
            for (std::size_t t = 0; t < got.size(); ++t)
                if (got[t].bits() != ref[t]) ++mismatches;
        }
    REQUIRE(mismatches == 0);

    for (int r = 0; r < 65536; ++r) {
        auto got = ca_evolve({CaFamily::General, r}, 5);
        auto ref = naive_rows({CaFamily::General, r}, 5, CaStart::OneOnZeros);
        for (std::size_t t = 0; t < got.size(); ++t)
            if (got[t].bits() != ref[t]) ++mismatches;
    }
    REQUIRE(mismatches == 0);

    std::mt19937 rng(20260816);
    std::uniform_int_distribution<int> pick(0, 65535);
    for (int trial = 0; trial < 300; ++trial) {
        int r = pick(rng);
        for (CaStart start : {CaStart::OneOnZeros, CaStart::ZeroOnOnes}) {
            auto got = ca_evolve({CaFamily::General, r}, 8, start);
            auto ref = naive_rows({CaFamily::General, r}, 8, start);
            for (std::size_t t = 0; t < got.size(); ++t)
                if (got[t].bits() != ref[t]) ++mismatches;
        }
    }
    REQUIRE(mismatches == 0);
}

TEST_CASE("mirror rules reverse rows, conjugate rules complement them") {
    std::size_t bad_mirror = 0, bad_conj = 0;

    auto check_rule = [&](CaFamily family, int r) {
        CaRule rule{family, r};
        CaRule mir{family, mirror_rule(family, r)};
        CaRule con{family, conjugate_rule(family, r)};
        const int steps = family == CaFamily::Elementary ? 9 : 7;
        auto rows = ca_evolve(rule, steps);
        auto mrows = ca_evolve(mir, steps);
        auto crows = ca_evolve(con, steps, CaStart::ZeroOnOnes);
        for (std::size_t t = 0; t < rows.size(); ++t) {
            if (mrows[t] != reverse(rows[t])) ++bad_mirror;
            if (crows[t] != complement(rows[t])) ++bad_conj;
        }
    };

    for (int r = 0; r < 256; ++r) check_rule(CaFamily::Elementary, r);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 65535);
    for (int trial = 0; trial < 300; ++trial) check_rule(CaFamily::General, pick(rng));

    REQUIRE(bad_mirror == 0);
    REQUIRE(bad_conj == 0);
}

TEST_CASE("single-step elementary distribution is uniform over 3-bit strings") {
    // Row 1 is (bit1, bit2, bit4) of the rule number; each pattern has 2^5
    // rule preimages.
    auto d = ca_distribution(CaFamily::Elementary, 1);
    CHECK(d.support_size() == 8);
    CHECK(d.total() == doctest::Approx(256.0));
    for (int v = 0; v < 8; ++v)
        CHECK(d.count(BinaryString::from_packed(static_cast<std::uint64_t>(v), 3)) ==
              doctest::Approx(32.0));
}

TEST_CASE("elementary distribution counts rows and windows long ones") {
    auto d = ca_distribution(CaFamily::Elementary, 12);
    CHECK(d.meta().model == "ca");
    CHECK(d.meta().params.at("family") == "elementary");
    CHECK(d.meta().params.at("steps") == "12");
    CHECK(d.meta().params.at("window") == "12");
    CHECK(d.meta().params.at("initial") == "one");
    CHECK(d.meta().total_programs == 3072);
    CHECK(d.meta().halting_count == 3072);
    CHECK(d.total() == doctest::Approx(3072.0));

    for (const auto& s : d.support()) {
        std::size_t n = s.size();
        bool cone_len = n == 3 || n == 5 || n == 7 || n == 9 || n == 11 || n == 12;
        CHECK(cone_len);
    }
}

TEST_CASE("conjugation symmetry holds with both starts") {
    auto elem = ca_distribution(CaFamily::Elementary, 12, true);
    CHECK(elem.meta().params.at("initial") == "both");
    CHECK(elem.meta().total_programs == 6144);
    CHECK(elem.total() == doctest::Approx(6144.0));
    for (const auto& s : elem.support())
        CHECK(elem.count(s) == doctest::Approx(elem.count(complement(s))));

    auto gen = ca_distribution(CaFamily::General, 12, true);
    CHECK(gen.total() == doctest::Approx(2.0 * 65536 * 12));
    for (const auto& s : gen.support())
        CHECK(gen.count(s) == doctest::Approx(gen.count(complement(s))));
}

TEST_CASE("reflection symmetry holds while rows stay inside the window") {
    // Rows longer than 12 cells lose one extra cell on the right, which
    // breaks the mirror pairing; window-free step counts keep it exact.
    auto elem = ca_distribution(CaFamily::Elementary, 5);
    for (const auto& s : elem.support())
        CHECK(elem.count(s) == doctest::Approx(elem.count(reverse(s))));

    auto gen = ca_distribution(CaFamily::General, 3);
    for (const auto& s : gen.support())
        CHECK(gen.count(s) == doctest::Approx(gen.count(reverse(s))));

    auto both = ca_distribution(CaFamily::General, 3, true);
    for (const auto& s : both.support()) {
        CHECK(both.count(s) == doctest::Approx(both.count(reverse(s))));
        CHECK(both.count(s) == doctest::Approx(both.count(complement(s))));
    }
}

TEST_CASE("CA distributions are deterministic and round-trip through CSV") {
    auto a = ca_distribution(CaFamily::Elementary, 6);
    auto b = ca_distribution(CaFamily::Elementary, 6);
    CHECK(a.meta() == b.meta());
    CHECK(to_csv(a) == to_csv(b));
    CHECK(text_rows(ca_evolve({CaFamily::Elementary, 110}, 8)) ==
          text_rows(ca_evolve({CaFamily::Elementary, 110}, 8)));

    std::istringstream in(to_csv(a));
    auto back = read_csv(in);
    CHECK(back.meta() == a.meta());
    REQUIRE(back.support_size() == a.support_size());
    for (const auto& s : a.support())
        CHECK(back.count(s) == doctest::Approx(a.count(s)));
}
