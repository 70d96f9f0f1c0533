#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algoprob/binary_string.hpp"
#include "algoprob/distribution.hpp"

namespace algoprob {

enum class RankMethod { Kendall, Spearman, Pearson };

// Correlation between two histograms over their shared support (strings in
// both supports, zero-count entries included). Ranks go by descending
// probability with average ranks on ties; Kendall is the tie-adjusted tau-b
// and Pearson works on the raw values, which makes it independent of each
// side's normalization. No value when the shared support has fewer than two
// strings or either side is constant on it.
std::optional<double> rank_correlation(const EmpiricalDistribution& a,
                                       const EmpiricalDistribution& b,
                                       RankMethod method);

struct RankComparison {
    std::string model_a;
    std::string model_b;
    std::vector<BinaryString> shared_support;  // raw bit order
    std::optional<double> kendall;
    std::optional<double> spearman;
    std::optional<double> pearson;
};

RankComparison compare(const std::string& name_a, const EmpiricalDistribution& a,
                       const std::string& name_b, const EmpiricalDistribution& b);

struct NamedDistribution {
    std::string name;
    const EmpiricalDistribution* dist = nullptr;
};

// Pairwise grid over [reference, dists...]: cell [i][j] compares item i with
// item j, so row and column 0 hold the reference comparisons.
std::vector<std::vector<RankComparison>> compare_matrix(
    const std::vector<NamedDistribution>& dists, const NamedDistribution& reference);

// The k highest-complexity strings the strong model produced (positive count)
// that the weak model never did (absent from its support, or present with
// count zero), most complex first, ties by raw bits ascending. Fewer than k
// such strings returns them all.
std::vector<BinaryString> missed_strings(const EmpiricalDistribution& weak,
                                         const EmpiricalDistribution& strong,
                                         std::size_t k);

// Rank-only pseudo-histograms over the given strings: count 2^-H(s) under
// the entropy baseline, 2^-L(s) under the LZW one, so lower entropy or a
// shorter code stream means a higher pseudo-probability. Absolute values
// carry no meaning; use through rank_correlation.
struct BaselineRankings {
    EmpiricalDistribution entropy;
    EmpiricalDistribution lzw;
};
BaselineRankings baseline_rankings(const std::vector<BinaryString>& strings);

}  // namespace algoprob
