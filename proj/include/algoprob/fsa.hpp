#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "algoprob/distribution.hpp"
#include "algoprob/transducer.hpp"

namespace algoprob {

// D_S(n): output histogram over every pair (sigma, p) with sigma a valid
// encoding, |sigma| + |p| = n and T_sigma(p) the output. The probability
// view divides by the number of such pairs.
EmpiricalDistribution fsa_distribution(std::size_t n,
                                       const EncodingScheme& scheme = default_scheme());

// Aggregate histogram over all total lengths in [n_min, n_max].
EmpiricalDistribution fsa_distribution_range(std::size_t n_min, std::size_t n_max,
                                             const EncodingScheme& scheme = default_scheme());

// Number of valid (sigma, p) pairs with total length n, by scanning all
// 2^n strings. Equals sum over m of T(m) * 2^(n-m) where T(m) counts valid
// encodings of length m; tests verify the two routes against each other.
std::uint64_t fsa_pair_count(std::size_t n, const EncodingScheme& scheme = default_scheme());

// Algorithmic-probability mass per output: sum of 2^-(|sigma|+|p|) over all
// descriptions with total length in [8, max_len]. Counts are real.
EmpiricalDistribution fsa_ap_distribution(std::size_t max_len,
                                          const EncodingScheme& scheme = default_scheme());

// Mass for one string; 0 when nothing of total length <= max_len produces it.
double fsa_ap(const BinaryString& s, std::size_t max_len,
              const EncodingScheme& scheme = default_scheme());

// -log2 of fsa_ap; absent (not 0, not inf) when the mass is zero.
std::optional<double> fsa_ap_complexity(const BinaryString& s, std::size_t max_len,
                                        const EncodingScheme& scheme = default_scheme());

struct ComplexityWitness {
    std::size_t complexity = 0;
    BinaryString sigma;
    BinaryString p;
};

// Minimal |sigma| + |p| over descriptions of s, with one witnessing pair
// (first in enumeration order). Bounded above by |s| + |encode(identity)|,
// which is |s| + 12 under block-v1, so the search always terminates.
ComplexityWitness fsa_complexity(const BinaryString& s,
                                 const EncodingScheme& scheme = default_scheme());

// Per-string experiment log, one row per valid split (plus one row per
// string with no split). Columns:
//   string,valid-encoding,sigma,string-p,num-states,output,output-complexity
void write_experiment_csv(std::size_t n_min, std::size_t n_max, std::ostream& os,
                          const EncodingScheme& scheme = default_scheme());

// Minimal-description table for every string of at most max_string_len bits.
// Columns: s,complexity,sigma,string-p
void write_complexity_csv(std::size_t max_string_len, std::ostream& os,
                          const EncodingScheme& scheme = default_scheme());

}  // namespace algoprob
