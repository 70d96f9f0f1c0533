#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "algoprob/binary_string.hpp"
#include "algoprob/distribution.hpp"

namespace algoprob {

// Right-hand sides available to a grammar over n nonterminals form one fixed
// sequence R of length 2 + n*n: index 0 is the terminal 0, index 1 is the
// terminal 1, and index 2 + (b-1)*n + (c-1) is the pair X_b X_c, so pairs run
// lexicographically by (first, second).
struct Rhs {
    bool terminal = false;
    int bit = 0;        // terminal value when terminal
    int left = 0;       // 1-based nonterminal indices when a pair
    int right = 0;
};

int rhs_count(int n);
Rhs rhs_of_index(int n, int index);
std::string rhs_text(int n, int index);

// A grammar in Chomsky normal form: rules are (lhs, rhs index) pairs with
// 1-based lhs, kept sorted and duplicate-free. Nonterminal 1 is the start
// symbol. rules.size() is the production count p, so the class index is
// recoverable as pairing(n, p).
struct CnfGrammar {
    int n = 1;
    std::vector<std::pair<int, int>> rules;

    friend bool operator==(const CnfGrammar&, const CnfGrammar&) = default;
};

// (n, p) -> c = (p+n-1)(p+n-2)/2 + n, a bijection between positive integer
// pairs and positive integers; pairing_inverse is its inverse.
long long pairing(long long n, long long p);
std::pair<long long, long long> pairing_inverse(long long c);

long long grammar_class(const CnfGrammar& g);

// All compositions of p into n positive parts, lexicographic ascending.
// Empty when p < n.
std::vector<std::vector<int>> structures(int n, int p);

// The first `limit` grammars in canonical order: class index c ascending;
// within a class, structure classes in `structures` order; within a
// structure class, one size-S_i subset of R per nonterminal, subsets
// advancing through lexicographic column-index order with the last row
// moving fastest.
std::vector<CnfGrammar> enumerate_grammars(long long limit);

// True iff s is derivable from the start symbol. CYK over nonterminal
// bitmasks, O(|s|^3 * |rules|). The empty string is never a member (no
// epsilon rules exist); when `degenerate` is given it reports that case.
bool cyk_member(const CnfGrammar& g, const BinaryString& s, bool* degenerate = nullptr);

// L(g) restricted to lengths 1..max_len, stored as one bitset per length
// indexed by the packed string value. Lets a grammar answer many membership
// queries after one dynamic program over lengths.
struct LanguageSet {
    int max_len = 0;
    std::vector<std::vector<std::uint64_t>> words;

    bool contains(const BinaryString& s) const;
};

LanguageSet language_set(const CnfGrammar& g, int max_len);

// For each query string, how many grammars generate it. Counts stay raw;
// probabilities divide by the grammar count (per_program meta). Duplicate
// query strings are collapsed. Strings no grammar generates keep an explicit
// zero row.
EmpiricalDistribution cfg_distribution(const std::vector<CnfGrammar>& grammars,
                                       const std::vector<BinaryString>& strings);

// One row per rule: grammar_id,c,lhs,rhs with grammar_id 1-based in
// enumeration order and rhs rendered as 0, 1, or XbXc.
void write_grammar_csv(const std::vector<CnfGrammar>& grammars, std::ostream& os);
std::vector<CnfGrammar> read_grammar_csv(std::istream& is);

}  // namespace algoprob
