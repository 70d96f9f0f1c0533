#include "algoprob/transducer.hpp"

#include <algorithm>
#include <cstdint>

namespace algoprob {

BinaryString run_transducer(const Transducer& t, const BinaryString& p) {
    int state = 1;
    BinaryString out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Transition& tr = t.at(state, p.bit(i));
        out += tr.out;
        state = tr.next;
    }
    return out;
}

namespace {

constexpr std::uint64_t kSuccessorCap = 1u << 20;  // states beyond any valid budget

struct ParsedBlock {
    std::uint64_t next = 1;   // successor state, saturated at kSuccessorCap
    std::string out;          // output block bits
    std::size_t end = 0;      // bit position one past this block
};

// Deterministic left-to-right block parse. Stops at the first malformed
// field ("10" pair, leading-zero successor, or bits running out mid-field);
// nothing past that point can begin a new valid prefix, because blocks are
// self-delimiting.
std::vector<ParsedBlock> parse_blocks(const std::string& bits) {
    std::vector<ParsedBlock> blocks;
    std::size_t i = 0;
    const std::size_t n = bits.size();
    while (i + 4 <= n) {
        ParsedBlock blk;
        // Successor field: doubled bits until the 01 delimiter.
        std::uint64_t val = 0;
        bool first = true, bad = false, delimited = false, empty_field = true;
        std::size_t j = i;
        while (j + 2 <= n) {
            char a = bits[j], b = bits[j + 1];
            j += 2;
            if (a == '0' && b == '1') { delimited = true; break; }
            if (a != b) { bad = true; break; }
            if (first && a == '0') { bad = true; break; }  // leading zero
            first = false;
            empty_field = false;
            val = std::min<std::uint64_t>(val * 2 + (a - '0'), kSuccessorCap);
        }
        if (bad || !delimited) break;
        blk.next = empty_field ? 1 : std::min<std::uint64_t>(val + 1, kSuccessorCap);
        // Output field: doubled bits until the 01 delimiter.
        delimited = false;
        while (j + 2 <= n) {
            char a = bits[j], b = bits[j + 1];
            j += 2;
            if (a == '0' && b == '1') { delimited = true; break; }
            if (a != b) { bad = true; break; }
            blk.out.push_back(a);
        }
        if (bad || !delimited) break;
        blk.end = j;
        blocks.push_back(std::move(blk));
        i = j;
    }
    return blocks;
}

Transducer transducer_from_blocks(const std::vector<ParsedBlock>& blocks, std::size_t count) {
    Transducer t;
    t.states = int(count / 2);
    t.delta.resize(count / 2);
    for (std::size_t k = 0; k < count; ++k) {
        Transition& tr = t.delta[k / 2][k % 2];
        tr.next = int(blocks[k].next);
        tr.out = BinaryString{blocks[k].out};
    }
    return t;
}

std::string bin_no_leading_zeros(std::uint64_t k) {
    if (k == 0) return {};
    std::string s;
    while (k) {
        s.push_back(char('0' + (k & 1)));
        k >>= 1;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string doubled(const std::string& s) {
    std::string d;
    d.reserve(2 * s.size());
    for (char c : s) {
        d.push_back(c);
        d.push_back(c);
    }
    return d;
}

class BlockScheme final : public EncodingScheme {
public:
    std::string id() const override { return "block-v1"; }

    BinaryString encode(const Transducer& t) const override {
        std::string sigma;
        for (int s = 1; s <= t.states; ++s) {
            for (int b = 0; b < 2; ++b) {
                const Transition& tr = t.at(s, b);
                sigma += doubled(bin_no_leading_zeros(std::uint64_t(tr.next) - 1));
                sigma += "01";
                sigma += doubled(tr.out.bits());
                sigma += "01";
            }
        }
        return BinaryString{std::move(sigma)};
    }

    std::optional<Transducer> decode(const BinaryString& sigma) const override {
        auto blocks = parse_blocks(sigma.bits());
        if (blocks.empty() || blocks.back().end != sigma.size()) return std::nullopt;
        std::size_t count = blocks.size();
        if (count % 2 != 0) return std::nullopt;
        std::uint64_t states = count / 2;
        for (const auto& b : blocks)
            if (b.next > states) return std::nullopt;
        return transducer_from_blocks(blocks, count);
    }

    std::vector<std::size_t> valid_prefixes(const BinaryString& tau) const override {
        auto blocks = parse_blocks(tau.bits());
        std::vector<std::size_t> out;
        std::uint64_t max_next = 0;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            max_next = std::max(max_next, blocks[k].next);
            if ((k + 1) % 2 == 0 && max_next <= (k + 1) / 2) out.push_back(blocks[k].end);
        }
        return out;
    }

    std::vector<BinaryString> enumerate(std::size_t m) const override {
        std::vector<BinaryString> out;
        if (m % 2 != 0) return out;
        for (std::size_t states = 1; 8 * states <= m; ++states) {
            std::size_t budget = (m - 8 * states) / 2;  // spare symbol slots
            Transducer t;
            t.states = int(states);
            t.delta.resize(states);
            fill(t, 0, budget, out);
        }
        return out;
    }

private:
    // Chooses transition k..2n-1 spending exactly `budget` symbol slots; a
    // successor j costs |bin(j-1)| slots and an output block its length.
    void fill(Transducer& t, std::size_t k, std::size_t budget,
              std::vector<BinaryString>& out) const {
        std::size_t total = 2 * std::size_t(t.states);
        if (k == total) {
            if (budget == 0) out.push_back(encode(t));
            return;
        }
        for (int j = 1; j <= t.states; ++j) {
            std::size_t jcost = bin_no_leading_zeros(std::uint64_t(j) - 1).size();
            if (jcost > budget) continue;
            for (std::size_t len = 0; len + jcost <= budget; ++len) {
                for (std::uint64_t v = 0; v < (1ull << len); ++v) {
                    t.delta[k / 2][k % 2] =
                        Transition{j, BinaryString::from_packed(v, len)};
                    fill(t, k + 1, budget - jcost - len, out);
                }
            }
        }
    }
};

const BlockScheme kBlockScheme;

}  // namespace

const EncodingScheme& default_scheme() { return kBlockScheme; }

const EncodingScheme* find_scheme(const std::string& id) {
    if (id == kBlockScheme.id()) return &kBlockScheme;
    return nullptr;
}

std::vector<std::string> scheme_ids() { return {kBlockScheme.id()}; }

std::vector<Split> decode_splits(const BinaryString& tau, const EncodingScheme& scheme) {
    std::vector<Split> splits;
    for (std::size_t m : scheme.valid_prefixes(tau)) {
        auto t = scheme.decode(BinaryString{tau.bits().substr(0, m)});
        if (t) splits.push_back(Split{m, std::move(*t)});
    }
    return splits;
}

}  // namespace algoprob
