#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace algoprob {

// A finite string over the alphabet {0,1}. The empty string is a first-class
// value; in text form (CSV columns, CLI output) it renders as "eps" so that
// empty fields stay unambiguous.
class BinaryString {
public:
    BinaryString() = default;

    explicit BinaryString(std::string bits) : bits_(std::move(bits)) {
        for (char c : bits_)
            if (c != '0' && c != '1')
                throw std::invalid_argument("BinaryString: symbol outside {0,1}");
    }

    // Parses the text form: "eps" means the empty string.
    static BinaryString from_text(std::string_view t) {
        if (t == "eps") return BinaryString{};
        return BinaryString{std::string(t)};
    }

    // Unpacks the low `len` bits of `packed`, most significant bit first.
    static BinaryString from_packed(std::uint64_t packed, std::size_t len) {
        std::string s(len, '0');
        for (std::size_t i = 0; i < len; ++i)
            s[i] = ((packed >> (len - 1 - i)) & 1) ? '1' : '0';
        return BinaryString{std::move(s)};
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    // i-th symbol as an integer, 0-indexed from the left.
    int bit(std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }

    const std::string& bits() const { return bits_; }

    std::string text() const { return bits_.empty() ? std::string("eps") : bits_; }

    void push_back(int b) { bits_.push_back(b ? '1' : '0'); }

    BinaryString& operator+=(const BinaryString& o) {
        bits_ += o.bits_;
        return *this;
    }

    friend BinaryString operator+(BinaryString a, const BinaryString& b) {
        a += b;
        return a;
    }

    friend bool operator==(const BinaryString&, const BinaryString&) = default;
    friend auto operator<=>(const BinaryString&, const BinaryString&) = default;

private:
    std::string bits_;
};

BinaryString reverse(const BinaryString& s);
BinaryString complement(const BinaryString& s);

// {s, reverse(s), complement(s), reverse(complement(s))} deduplicated, in
// lexicographic order. Size is 1 (empty string only), 2 or 4.
std::vector<BinaryString> orbit(const BinaryString& s);

}  // namespace algoprob

template <>
struct std::hash<algoprob::BinaryString> {
    std::size_t operator()(const algoprob::BinaryString& s) const noexcept {
        return std::hash<std::string>{}(s.bits());
    }
};
