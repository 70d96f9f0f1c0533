#include "algoprob/binary_string.hpp"

#include <algorithm>

namespace algoprob {

BinaryString reverse(const BinaryString& s) {
    std::string b = s.bits();
    std::reverse(b.begin(), b.end());
    return BinaryString{std::move(b)};
}

BinaryString complement(const BinaryString& s) {
    std::string b = s.bits();
    for (char& c : b) c = (c == '0') ? '1' : '0';
    return BinaryString{std::move(b)};
}

std::vector<BinaryString> orbit(const BinaryString& s) {
    std::vector<BinaryString> v{s, reverse(s), complement(s), reverse(complement(s))};
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace algoprob
