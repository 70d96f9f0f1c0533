#include "algoprob/fsa.hpp"
#include <algorithm>

#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace algoprob {

namespace {

// Calls fn(tau) for every bit string of length n, ascending numeric order.
template <typename Fn>
void scan_strings(std::size_t n, Fn&& fn) {
    if (n > 40) throw std::invalid_argument("scan_strings: length too large to enumerate");
    std::string buf(n, '0');
    const std::uint64_t top = 1ull << n;
    for (std::uint64_t v = 0; v < top; ++v) {
        for (std::size_t i = 0; i < n; ++i)
            buf[i] = ((v >> (n - 1 - i)) & 1) ? '1' : '0';
        fn(BinaryString{buf});
    }
}

void accumulate_length(std::size_t n, const EncodingScheme& scheme, EmpiricalDistribution& d,
                       std::uint64_t& pairs, double weight) {
    scan_strings(n, [&](const BinaryString& tau) {
        for (const Split& sp : decode_splits(tau, scheme)) {
            BinaryString p{tau.bits().substr(sp.sigma_len)};
            d.add(run_transducer(sp.t, p), weight);
            ++pairs;
        }
    });
}

}  // namespace

EmpiricalDistribution fsa_distribution(std::size_t n, const EncodingScheme& scheme) {
    DistributionMeta meta;
    meta.model = "fsa";
    meta.params["n"] = std::to_string(n);
    meta.scheme_id = scheme.id();
    EmpiricalDistribution d{meta};
    std::uint64_t pairs = 0;
    accumulate_length(n, scheme, d, pairs, 1.0);
    d.meta().total_programs = pairs;
    return d;
}

EmpiricalDistribution fsa_distribution_range(std::size_t n_min, std::size_t n_max,
                                             const EncodingScheme& scheme) {
    DistributionMeta meta;
    meta.model = "fsa";
    meta.params["n_min"] = std::to_string(n_min);
    meta.params["n_max"] = std::to_string(n_max);
    meta.scheme_id = scheme.id();
    EmpiricalDistribution d{meta};
    std::uint64_t pairs = 0;
    for (std::size_t n = n_min; n <= n_max; ++n) accumulate_length(n, scheme, d, pairs, 1.0);
    d.meta().total_programs = pairs;
    return d;
}

std::uint64_t fsa_pair_count(std::size_t n, const EncodingScheme& scheme) {
    std::uint64_t pairs = 0;
    scan_strings(n, [&](const BinaryString& tau) { pairs += scheme.valid_prefixes(tau).size(); });
    return pairs;
}

EmpiricalDistribution fsa_ap_distribution(std::size_t max_len, const EncodingScheme& scheme) {
    DistributionMeta meta;
    meta.model = "fsa-ap";
    meta.params["max_len"] = std::to_string(max_len);
    meta.scheme_id = scheme.id();
    EmpiricalDistribution d{meta};
    d.mark_real();
    std::uint64_t pairs = 0;
    for (std::size_t n = 8; n <= max_len; ++n)
        accumulate_length(n, scheme, d, pairs, std::ldexp(1.0, -int(n)));
    d.meta().total_programs = pairs;
    return d;
}

double fsa_ap(const BinaryString& s, std::size_t max_len, const EncodingScheme& scheme) {
    return fsa_ap_distribution(max_len, scheme).count(s);
}

std::optional<double> fsa_ap_complexity(const BinaryString& s, std::size_t max_len,
                                        const EncodingScheme& scheme) {
    double ap = fsa_ap(s, max_len, scheme);
    if (ap <= 0.0) return std::nullopt;
    return -std::log2(ap);
}

namespace {

// Shortest input that makes t output exactly s, as a path search over
// (state, matched prefix length). Each input bit is one edge; a transition
// is usable at position i only if its block matches s there. Returns the
// input bits, or nullopt when no input of any length works.
std::optional<BinaryString> shortest_producing_input(const Transducer& t, const BinaryString& s) {
    const std::size_t cols = s.size() + 1;
    const std::size_t nodes = std::size_t(t.states) * cols;
    std::vector<int> prev(nodes, -1);    // previous node, -2 marks the source
    std::vector<char> prev_bit(nodes, 0);
    std::vector<std::size_t> queue;
    auto node = [&](int state, std::size_t i) { return std::size_t(state - 1) * cols + i; };
    std::size_t source = node(1, 0);
    prev[source] = -2;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t cur = queue[head];
        int state = int(cur / cols) + 1;
        std::size_t i = cur % cols;
        if (i == s.size()) {
            std::string bits;
            for (std::size_t at = cur; prev[at] != -2; at = std::size_t(prev[at]))
                bits.push_back(prev_bit[at]);
            std::reverse(bits.begin(), bits.end());
            return BinaryString{std::move(bits)};
        }
        for (int b = 0; b < 2; ++b) {
            const Transition& tr = t.at(state, b);
            const std::string& v = tr.out.bits();
            if (i + v.size() > s.size() || s.bits().compare(i, v.size(), v) != 0) continue;
            std::size_t nxt = node(tr.next, i + v.size());
            if (prev[nxt] != -1) continue;
            prev[nxt] = int(cur);
            prev_bit[nxt] = char('0' + b);
            queue.push_back(nxt);
        }
    }
    // Check goal states reached exactly at full match but with empty queue:
    // handled above; nothing reaches the full match.
    return std::nullopt;
}

Transducer identity_transducer() {
    Transducer t;
    t.states = 1;
    t.delta.resize(1);
    t.delta[0][0] = Transition{1, BinaryString{"0"}};
    t.delta[0][1] = Transition{1, BinaryString{"1"}};
    return t;
}

}  // namespace

ComplexityWitness fsa_complexity(const BinaryString& s, const EncodingScheme& scheme) {
    const std::size_t bound = s.size() + scheme.encode(identity_transducer()).size();
    ComplexityWitness best;
    best.complexity = SIZE_MAX;
    for (std::size_t m = 8; m <= bound; m += 2) {
        if (m >= best.complexity) break;
        for (const BinaryString& sigma : scheme.enumerate(m)) {
            auto t = scheme.decode(sigma);
            if (!t) continue;
            auto p = shortest_producing_input(*t, s);
            if (!p) continue;
            if (m + p->size() < best.complexity) {
                best.complexity = m + p->size();
                best.sigma = sigma;
                best.p = *p;
            }
        }
    }
    return best;
}

namespace {

class ComplexityCache {
public:
    explicit ComplexityCache(const EncodingScheme& scheme) : scheme_(scheme) {}
    std::size_t get(const BinaryString& s) {
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
        std::size_t c = fsa_complexity(s, scheme_).complexity;
        cache_.emplace(s, c);
        return c;
    }

private:
    const EncodingScheme& scheme_;
    std::map<BinaryString, std::size_t> cache_;
};

}  // namespace

void write_experiment_csv(std::size_t n_min, std::size_t n_max, std::ostream& os,
                          const EncodingScheme& scheme) {
    os << "# model: fsa-experiment\n";
    os << "# scheme: " << scheme.id() << "\n";
    os << "# param.n_min: " << n_min << "\n";
    os << "# param.n_max: " << n_max << "\n";
    os << "string,valid-encoding,sigma,string-p,num-states,output,output-complexity\n";
    ComplexityCache cache(scheme);
    for (std::size_t n = n_min; n <= n_max; ++n) {
        scan_strings(n, [&](const BinaryString& tau) {
            auto splits = decode_splits(tau, scheme);
            if (splits.empty()) {
                os << tau.text() << ",0,,,,,\n";
                return;
            }
            for (const Split& sp : splits) {
                BinaryString sigma{tau.bits().substr(0, sp.sigma_len)};
                BinaryString p{tau.bits().substr(sp.sigma_len)};
                BinaryString out = run_transducer(sp.t, p);
                os << tau.text() << ",1," << sigma.text() << ',' << p.text() << ','
                   << sp.t.states << ',' << out.text() << ',' << cache.get(out) << "\n";
            }
        });
    }
}

void write_complexity_csv(std::size_t max_string_len, std::ostream& os,
                          const EncodingScheme& scheme) {
    os << "# model: fsa-complexity\n";
    os << "# scheme: " << scheme.id() << "\n";
    os << "# param.max_string_len: " << max_string_len << "\n";
    os << "s,complexity,sigma,string-p\n";
    for (std::size_t len = 0; len <= max_string_len; ++len) {
        scan_strings(len, [&](const BinaryString& s) {
            auto w = fsa_complexity(s, scheme);
            os << s.text() << ',' << w.complexity << ',' << w.sigma.text() << ','
               << w.p.text() << "\n";
        });
    }
}

}  // namespace algoprob
