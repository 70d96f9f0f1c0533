#include "algoprob/grammar.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace algoprob {

int rhs_count(int n) {
    if (n < 1) throw std::invalid_argument("rhs_count: n must be positive");
    return 2 + n * n;
}

Rhs rhs_of_index(int n, int index) {
    if (index < 0 || index >= rhs_count(n)) throw std::out_of_range("rhs_of_index: bad index");
    Rhs r;
    if (index < 2) {
        r.terminal = true;
        r.bit = index;
        return r;
    }
    int k = index - 2;
    r.left = k / n + 1;
    r.right = k % n + 1;
    return r;
}

std::string rhs_text(int n, int index) {
    Rhs r = rhs_of_index(n, index);
    if (r.terminal) return r.bit ? "1" : "0";
    return "X" + std::to_string(r.left) + "X" + std::to_string(r.right);
}

long long pairing(long long n, long long p) {
    if (n < 1 || p < 1) throw std::invalid_argument("pairing: arguments must be positive");
    return (p + n - 1) * (p + n - 2) / 2 + n;
}

std::pair<long long, long long> pairing_inverse(long long c) {
    if (c < 1) throw std::invalid_argument("pairing_inverse: c must be positive");
    long long t = (long long)((std::sqrt(8.0 * double(c) + 1.0) - 1.0) / 2.0);
    if (t < 0) t = 0;
    while (t > 0 && t * (t + 1) / 2 >= c) --t;
    while ((t + 1) * (t + 2) / 2 < c) ++t;
    long long n = c - t * (t + 1) / 2;
    long long p = t + 2 - n;
    return {n, p};
}

long long grammar_class(const CnfGrammar& g) {
    return pairing(g.n, (long long)g.rules.size());
}

std::vector<std::vector<int>> structures(int n, int p) {
    std::vector<std::vector<int>> out;
    if (n < 1 || p < n) return out;
    std::vector<int> cur(n);
    // parts chosen smallest-first, so the output order is lexicographic
    auto rec = [&](auto&& self, int i, int rest) -> void {
        if (i == n - 1) {
            cur[i] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= rest - (n - 1 - i); ++v) {
            cur[i] = v;
            self(self, i + 1, rest - v);
        }
    };
    rec(rec, 0, p);
    return out;
}

namespace {

// Advances a sorted index k-subset of {0..limit-1} to its lexicographic
// successor; false at the last subset.
bool next_combination(std::vector<int>& comb, int limit) {
    int k = int(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < limit - (k - i)) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<CnfGrammar> enumerate_grammars(long long limit) {
    if (limit < 1) throw std::invalid_argument("enumerate_grammars: limit must be positive");
    std::vector<CnfGrammar> out;
    out.reserve(std::size_t(limit));
    for (long long c = 1; (long long)out.size() < limit; ++c) {
        auto [n, p] = pairing_inverse(c);
        const int R = rhs_count(int(n));
        for (const auto& S : structures(int(n), int(p))) {
            if (*std::max_element(S.begin(), S.end()) > R) continue;
            std::vector<std::vector<int>> comb(S.size());
            for (std::size_t i = 0; i < S.size(); ++i) {
                comb[i].resize(S[i]);
                std::iota(comb[i].begin(), comb[i].end(), 0);
            }
            for (;;) {
                CnfGrammar g;
                g.n = int(n);
                for (std::size_t i = 0; i < comb.size(); ++i)
                    for (int ri : comb[i]) g.rules.emplace_back(int(i) + 1, ri);
                out.push_back(std::move(g));
                if ((long long)out.size() == limit) return out;
                int row = int(comb.size()) - 1;
                while (row >= 0 && !next_combination(comb[row], R)) {
                    std::iota(comb[row].begin(), comb[row].end(), 0);
                    --row;
                }
                if (row < 0) break;
            }
        }
    }
    return out;
}

bool cyk_member(const CnfGrammar& g, const BinaryString& s, bool* degenerate) {
    if (degenerate) *degenerate = s.empty();
    if (s.empty()) return false;
    if (g.n > 62) throw std::invalid_argument("cyk_member: too many nonterminals");
    const int L = int(s.size());
    std::uint64_t term[2] = {0, 0};
    std::vector<std::array<int, 3>> pairs;
    for (auto [lhs, ri] : g.rules) {
        Rhs r = rhs_of_index(g.n, ri);
        if (r.terminal) term[r.bit] |= std::uint64_t(1) << (lhs - 1);
        else pairs.push_back({lhs - 1, r.left - 1, r.right - 1});
    }
    // cell[i][len]: nonterminals deriving s[i..i+len)
    std::vector<std::vector<std::uint64_t>> cell(L, std::vector<std::uint64_t>(std::size_t(L) + 1, 0));
    for (int i = 0; i < L; ++i) cell[i][1] = term[s.bit(i)];
    for (int len = 2; len <= L; ++len) {
        for (int i = 0; i + len <= L; ++i) {
            std::uint64_t m = 0;
            for (int k = 1; k < len; ++k) {
                std::uint64_t a = cell[i][k];
                std::uint64_t b = cell[i + k][len - k];
                if (!a || !b) continue;
                for (const auto& pr : pairs)
                    if ((a >> pr[1] & 1) && (b >> pr[2] & 1)) m |= std::uint64_t(1) << pr[0];
            }
            cell[i][std::size_t(len)] = m;
        }
    }
    return cell[0][std::size_t(L)] & 1;
}

bool LanguageSet::contains(const BinaryString& s) const {
    int len = int(s.size());
    if (len < 1 || len > max_len) return false;
    std::uint64_t v = 0;
    for (int i = 0; i < len; ++i) v = v << 1 | unsigned(s.bit(i));
    return words[std::size_t(len)][v >> 6] >> (v & 63) & 1;
}

LanguageSet language_set(const CnfGrammar& g, int max_len) {
    if (max_len < 0 || max_len > 20)
        throw std::invalid_argument("language_set: max_len out of range");
    const int n = g.n;
    auto words_for = [](int len) { return std::size_t(1) << (len > 6 ? len - 6 : 0); };
    // per nonterminal, per length, one bitset indexed by packed string value
    std::vector<std::vector<std::vector<std::uint64_t>>> t(n);
    for (int a = 0; a < n; ++a) {
        t[a].resize(std::size_t(max_len) + 1);
        for (int len = 1; len <= max_len; ++len) t[a][std::size_t(len)].assign(words_for(len), 0);
    }
    std::vector<std::array<int, 3>> pairs;
    for (auto [lhs, ri] : g.rules) {
        Rhs r = rhs_of_index(n, ri);
        if (r.terminal) {
            if (max_len >= 1) t[lhs - 1][1][0] |= std::uint64_t(1) << r.bit;
        } else {
            pairs.push_back({lhs - 1, r.left - 1, r.right - 1});
        }
    }
    // Both halves of a pair rule are strictly shorter, so lengths resolve
    // bottom-up with no fixpoint iteration.
    for (int len = 2; len <= max_len; ++len) {
        for (const auto& pr : pairs) {
            auto& dst = t[pr[0]][std::size_t(len)];
            for (int k = 1; k < len; ++k) {
                const auto& left = t[pr[1]][std::size_t(k)];
                const auto& right = t[pr[2]][std::size_t(len - k)];
                int rl = len - k;
                bool right_empty = true;
                for (auto w : right)
                    if (w) {
                        right_empty = false;
                        break;
                    }
                if (right_empty) continue;
                for (std::size_t wi = 0; wi < left.size(); ++wi) {
                    std::uint64_t w = left[wi];
                    while (w) {
                        std::uint64_t u = (std::uint64_t(wi) << 6) | unsigned(std::countr_zero(w));
                        w &= w - 1;
                        // value of the concatenation u.v is u * 2^rl + v, so
                        // the whole right bitset lands at bit offset u << rl
                        if (rl >= 6) {
                            std::size_t tw = std::size_t(u) << (rl - 6);
                            for (std::size_t j = 0; j < right.size(); ++j) dst[tw + j] |= right[j];
                        } else {
                            std::uint64_t off = u << rl;
                            dst[off >> 6] |= right[0] << (off & 63);
                        }
                    }
                }
            }
        }
    }
    LanguageSet out;
    out.max_len = max_len;
    out.words = std::move(t[0]);
    return out;
}

EmpiricalDistribution cfg_distribution(const std::vector<CnfGrammar>& grammars,
                                       const std::vector<BinaryString>& strings) {
    if (grammars.empty() || strings.empty())
        throw std::invalid_argument("cfg_distribution: empty input");
    std::vector<BinaryString> qs;
    std::unordered_set<BinaryString> seen;
    int max_len = 0;
    for (const auto& s : strings)
        if (seen.insert(s).second) {
            qs.push_back(s);
            max_len = std::max(max_len, int(s.size()));
        }
    std::vector<std::uint64_t> hits(qs.size(), 0);
    if (max_len <= 16) {
        for (const auto& g : grammars) {
            LanguageSet ls = language_set(g, max_len);
            for (std::size_t i = 0; i < qs.size(); ++i)
                if (ls.contains(qs[i])) ++hits[i];
        }
    } else {
        for (const auto& g : grammars)
            for (std::size_t i = 0; i < qs.size(); ++i)
                if (cyk_member(g, qs[i])) ++hits[i];
    }
    DistributionMeta meta;
    meta.model = "cfg";
    meta.params["grammars"] = std::to_string(grammars.size());
    meta.total_programs = grammars.size();
    meta.halting_count = grammars.size();
    meta.per_program = true;
    EmpiricalDistribution d{std::move(meta)};
    for (std::size_t i = 0; i < qs.size(); ++i) {
        d.ensure(qs[i]);
        if (hits[i]) d.add(qs[i], double(hits[i]));
    }
    return d;
}

namespace {

int rhs_index_of_text(int n, const std::string& text) {
    if (text == "0") return 0;
    if (text == "1") return 1;
    if (text.size() >= 4 && text[0] == 'X') {
        auto x2 = text.find('X', 1);
        if (x2 != std::string::npos && x2 > 1 && x2 + 1 < text.size()) {
            int b = std::stoi(text.substr(1, x2 - 1));
            int c = std::stoi(text.substr(x2 + 1));
            if (b >= 1 && b <= n && c >= 1 && c <= n) return 2 + (b - 1) * n + (c - 1);
        }
    }
    throw std::invalid_argument("grammar csv: bad rhs: " + text);
}

}  // namespace

void write_grammar_csv(const std::vector<CnfGrammar>& grammars, std::ostream& os) {
    os << "grammar_id,c,lhs,rhs\n";
    for (std::size_t gi = 0; gi < grammars.size(); ++gi) {
        const auto& g = grammars[gi];
        long long c = grammar_class(g);
        for (auto [lhs, ri] : g.rules)
            os << gi + 1 << ',' << c << ',' << lhs << ',' << rhs_text(g.n, ri) << "\n";
    }
}

std::vector<CnfGrammar> read_grammar_csv(std::istream& is) {
    std::string line;
    // Leading comment lines carry tool provenance; they are not grammar rows.
    while (std::getline(is, line) && !line.empty() && line[0] == '#') {
    }
    if (line != "grammar_id,c,lhs,rhs")
        throw std::invalid_argument("grammar csv: missing header");
    std::vector<CnfGrammar> out;
    long long cur_id = 0, cur_c = 0;
    CnfGrammar cur;
    auto flush = [&]() {
        if (cur_id == 0) return;
        auto [n, p] = pairing_inverse(cur_c);
        (void)n;
        if ((long long)cur.rules.size() != p)
            throw std::invalid_argument("grammar csv: rule count does not match class " +
                                        std::to_string(cur_c));
        out.push_back(std::move(cur));
        cur = CnfGrammar{};
    };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        auto c3 = line.find(',', c2 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos || c3 == std::string::npos)
            throw std::invalid_argument("grammar csv: bad row: " + line);
        long long id = std::stoll(line.substr(0, c1));
        long long c = std::stoll(line.substr(c1 + 1, c2 - c1 - 1));
        int lhs = std::stoi(line.substr(c2 + 1, c3 - c2 - 1));
        std::string rhs = line.substr(c3 + 1);
        if (id != cur_id) {
            if (id < cur_id) throw std::invalid_argument("grammar csv: ids must increase");
            flush();
            cur_id = id;
            cur_c = c;
            cur.n = int(pairing_inverse(c).first);
        } else if (c != cur_c) {
            throw std::invalid_argument("grammar csv: class changed inside a grammar");
        }
        if (lhs < 1 || lhs > cur.n)
            throw std::invalid_argument("grammar csv: lhs out of range: " + line);
        std::pair<int, int> rule{lhs, rhs_index_of_text(cur.n, rhs)};
        if (!cur.rules.empty() && !(cur.rules.back() < rule))
            throw std::invalid_argument("grammar csv: rules must be sorted and unique");
        cur.rules.push_back(rule);
    }
    flush();
    return out;
}

}  // namespace algoprob
