#include "algoprob/strings.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

namespace algoprob {

Entropy shannon_entropy(const BinaryString& s) {
    if (s.empty()) return {0.0, true};
    std::size_t ones = 0;
    for (std::size_t i = 0; i < s.size(); ++i) ones += s.bit(i);
    if (ones == 0 || ones == s.size()) return {0.0, false};
    double p = double(ones) / double(s.size());
    return {-p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p), false};
}

namespace {

std::size_t code_width(std::size_t dict_size) {
    std::size_t w = 0, span = 1;
    while (span < dict_size + 1) {
        span <<= 1;
        ++w;
    }
    return w;
}

}  // namespace

std::size_t lzw_compressed_length(const BinaryString& s) {
    if (s.empty()) return 0;
    std::unordered_map<std::string, std::size_t> dict{{"0", 0}, {"1", 1}};
    std::size_t bits_out = 0;
    std::string w(1, s.bits()[0]);
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::string wc = w + s.bits()[i];
        if (dict.count(wc)) {
            w = std::move(wc);
        } else {
            bits_out += code_width(dict.size());
            dict.emplace(std::move(wc), dict.size());
            w.assign(1, s.bits()[i]);
        }
    }
    bits_out += code_width(dict.size());
    return bits_out;
}

}  // namespace algoprob
