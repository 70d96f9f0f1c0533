#include "doctest.h"

#include "algoprob/binary_string.hpp"
#include "algoprob/strings.hpp"

using namespace algoprob;

namespace {

// All 2^0 + ... + 2^maxlen strings up to maxlen bits, shortlex order.
std::vector<BinaryString> all_strings(std::size_t maxlen) {
    std::vector<BinaryString> out{BinaryString{}};
    for (std::size_t len = 1; len <= maxlen; ++len)
        for (std::uint64_t v = 0; v < (1ull << len); ++v)
            out.push_back(BinaryString::from_packed(v, len));
    return out;
}

}  // namespace

TEST_CASE("binary string construction and text form") {
    CHECK(BinaryString{}.empty());
    CHECK(BinaryString{}.text() == "eps");
    CHECK(BinaryString::from_text("eps") == BinaryString{});
    CHECK(BinaryString::from_text("0101").bits() == "0101");
    CHECK(BinaryString{"0101"}.text() == "0101");
    CHECK(BinaryString::from_packed(0b0101, 4).bits() == "0101");
    CHECK(BinaryString::from_packed(1, 3).bits() == "001");
    CHECK_THROWS(BinaryString{"01a"});
}

TEST_CASE("reverse and complement") {
    CHECK(reverse(BinaryString{"0011"}).bits() == "1100");
    CHECK(complement(BinaryString{"0011"}).bits() == "1100");
    CHECK(reverse(BinaryString{"001"}).bits() == "100");
    CHECK(complement(BinaryString{"001"}).bits() == "110");
    CHECK(reverse(BinaryString{}) == BinaryString{});
    CHECK(complement(BinaryString{}) == BinaryString{});

    for (const auto& s : all_strings(9)) {
        CHECK(reverse(reverse(s)) == s);
        CHECK(complement(complement(s)) == s);
        CHECK(reverse(complement(s)) == complement(reverse(s)));
    }
}

TEST_CASE("orbit membership and size") {
    auto o_eps = orbit(BinaryString{});
    CHECK(o_eps.size() == 1);

    auto o01 = orbit(BinaryString{"01"});
    REQUIRE(o01.size() == 2);
    CHECK(o01[0].bits() == "01");
    CHECK(o01[1].bits() == "10");

    auto o001 = orbit(BinaryString{"001"});
    CHECK(o001.size() == 4);

    for (const auto& s : all_strings(8)) {
        auto o = orbit(s);
        bool g = o.size() == 1 || o.size() == 2 || o.size() == 4;
        CHECK(g);
        CHECK((o.size() == 1) == s.empty());
        // s belongs to its own orbit and the orbit is transform-closed.
        CHECK(std::find(o.begin(), o.end(), s) != o.end());
        for (const auto& t : o) {
            CHECK(orbit(t) == o);
            CHECK(std::find(o.begin(), o.end(), reverse(t)) != o.end());
            CHECK(std::find(o.begin(), o.end(), complement(t)) != o.end());
        }
    }
}

TEST_CASE("shannon entropy") {
    // One 1 in four symbols: -(1/4)log2(1/4) - (3/4)log2(3/4) = 0.811278...
    auto e = shannon_entropy(BinaryString{"0001"});
    CHECK(!e.degenerate);
    CHECK(e.value == doctest::Approx(0.8113).epsilon(1e-4));
    CHECK(e.value == doctest::Approx(0.8112781244591328).epsilon(1e-12));

    CHECK(shannon_entropy(BinaryString{"01"}).value == doctest::Approx(1.0));
    CHECK(shannon_entropy(BinaryString{"0000"}).value == 0.0);
    CHECK(shannon_entropy(BinaryString{"1"}).value == 0.0);

    auto eps = shannon_entropy(BinaryString{});
    CHECK(eps.value == 0.0);
    CHECK(eps.degenerate);

    for (const auto& s : all_strings(9)) {
        auto base = shannon_entropy(s).value;
        CHECK(shannon_entropy(reverse(s)).value == doctest::Approx(base).epsilon(1e-15));
        CHECK(shannon_entropy(complement(s)).value == doctest::Approx(base).epsilon(1e-15));
    }
}

TEST_CASE("lzw code stream length") {
    CHECK(lzw_compressed_length(BinaryString{}) == 0);

    // "0": the single phrase "0" is emitted once. Dictionary size is 2, so
    // the code is ceil(log2(3)) = 2 bits wide.
    CHECK(lzw_compressed_length(BinaryString{"0"}) == 2);
    CHECK(lzw_compressed_length(BinaryString{"1"}) == 2);

    // Hand trace of 16 zeros: phrases 0|00|000|0000|00000|0 emitted at
    // widths 2,2,3,3,3,3 = 16 bits.
    CHECK(lzw_compressed_length(BinaryString{"0000000000000000"}) == 16);

    // Hand trace of a mixed 16-bit string: ten phrases at widths
    // 2,2,3,3,3,3,4,4,4,4 = 32 bits.
    CHECK(lzw_compressed_length(BinaryString{"0011010110111100"}) == 32);

    // A uniform run compresses strictly better than the mixed string.
    CHECK(lzw_compressed_length(BinaryString{"0000000000000000"}) <
          lzw_compressed_length(BinaryString{"0011010110111100"}));

    // The dictionary seed {0,1} is symmetric, so complementing the input
    // relabels phrases without changing code widths.
    for (const auto& s : all_strings(10))
        CHECK(lzw_compressed_length(s) == lzw_compressed_length(complement(s)));
}
