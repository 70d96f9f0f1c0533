#include "algoprob/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "algoprob/strings.hpp"

namespace algoprob {

namespace {

std::vector<BinaryString> shared_support_of(const EmpiricalDistribution& a,
                                            const EmpiricalDistribution& b) {
    std::vector<BinaryString> shared;
    for (const auto& [s, c] : a.counts())
        if (b.contains(s)) shared.push_back(s);
    std::sort(shared.begin(), shared.end());
    return shared;
}

// Average ranks for descending values: the largest value gets rank 1 and a
// tie group shares the mean of the ranks it spans.
std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

// No value when either side is constant: zero variance leaves the
// correlation undefined, and near-zero rounding residue must not sneak in.
std::optional<double> pearson_of(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    const auto [xmin, xmax] = std::minmax_element(x.begin(), x.end());
    const auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
    if (*xmin == *xmax || *ymin == *ymax) return std::nullopt;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

std::optional<double> kendall_tau_b(const std::vector<double>& x,
                                    const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::int64_t concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            if (dx == 0.0) ++ties_x;
            if (dy == 0.0) ++ties_y;
            if (dx != 0.0 && dy != 0.0) {
                if ((dx > 0.0) == (dy > 0.0))
                    ++concordant;
                else
                    ++discordant;
            }
        }
    const std::int64_t n0 =
        static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) - 1) / 2;
    if (ties_x == n0 || ties_y == n0) return std::nullopt;
    return static_cast<double>(concordant - discordant) /
           std::sqrt(static_cast<double>(n0 - ties_x) * static_cast<double>(n0 - ties_y));
}

}  // namespace

std::optional<double> rank_correlation(const EmpiricalDistribution& a,
                                       const EmpiricalDistribution& b,
                                       RankMethod method) {
    const auto shared = shared_support_of(a, b);
    if (shared.size() < 2) return std::nullopt;
    std::vector<double> va, vb;
    va.reserve(shared.size());
    vb.reserve(shared.size());
    // Counts stand in for probabilities: every method here is invariant
    // under scaling one side by a positive constant.
    for (const auto& s : shared) {
        va.push_back(a.count(s));
        vb.push_back(b.count(s));
    }
    switch (method) {
        case RankMethod::Kendall:
            return kendall_tau_b(va, vb);
        case RankMethod::Spearman:
            return pearson_of(average_ranks(va), average_ranks(vb));
        case RankMethod::Pearson:
            return pearson_of(va, vb);
    }
    throw std::invalid_argument("rank_correlation: unknown method");
}

RankComparison compare(const std::string& name_a, const EmpiricalDistribution& a,
                       const std::string& name_b, const EmpiricalDistribution& b) {
    RankComparison rc;
    rc.model_a = name_a;
    rc.model_b = name_b;
    rc.shared_support = shared_support_of(a, b);
    rc.kendall = rank_correlation(a, b, RankMethod::Kendall);
    rc.spearman = rank_correlation(a, b, RankMethod::Spearman);
    rc.pearson = rank_correlation(a, b, RankMethod::Pearson);
    return rc;
}

std::vector<std::vector<RankComparison>> compare_matrix(
    const std::vector<NamedDistribution>& dists, const NamedDistribution& reference) {
    if (dists.empty())
        throw std::invalid_argument("compare_matrix: need at least one distribution");
    std::vector<NamedDistribution> items;
    items.reserve(dists.size() + 1);
    items.push_back(reference);
    items.insert(items.end(), dists.begin(), dists.end());
    for (const auto& it : items)
        if (it.dist == nullptr)
            throw std::invalid_argument("compare_matrix: null distribution");

    std::vector<std::vector<RankComparison>> grid(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        grid[i].reserve(items.size());
        for (std::size_t j = 0; j < items.size(); ++j)
            grid[i].push_back(
                compare(items[i].name, *items[i].dist, items[j].name, *items[j].dist));
    }
    return grid;
}

std::vector<BinaryString> missed_strings(const EmpiricalDistribution& weak,
                                         const EmpiricalDistribution& strong,
                                         std::size_t k) {
    if (k < 1) throw std::invalid_argument("missed_strings: k must be >= 1");
    std::vector<std::pair<double, BinaryString>> missing;
    for (const auto& [s, c] : strong.counts()) {
        if (c <= 0.0) continue;
        if (weak.count(s) > 0.0) continue;
        missing.emplace_back(c, s);
    }
    // Lowest strong-count first: that is the highest complexity estimate.
    std::sort(missing.begin(), missing.end(), [](const auto& l, const auto& r) {
        if (l.first != r.first) return l.first < r.first;
        return l.second < r.second;
    });
    if (missing.size() > k) missing.resize(k);
    std::vector<BinaryString> out;
    out.reserve(missing.size());
    for (auto& m : missing) out.push_back(std::move(m.second));
    return out;
}

BaselineRankings baseline_rankings(const std::vector<BinaryString>& strings) {
    if (strings.empty())
        throw std::invalid_argument("baseline_rankings: empty string list");
    std::vector<BinaryString> unique = strings;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    DistributionMeta me;
    me.model = "baseline-entropy";
    DistributionMeta ml;
    ml.model = "baseline-lzw";
    BaselineRankings out{EmpiricalDistribution(std::move(me)),
                         EmpiricalDistribution(std::move(ml))};
    out.entropy.mark_real();
    out.lzw.mark_real();
    for (const auto& s : unique) {
        out.entropy.add(s, std::exp2(-shannon_entropy(s).value));
        out.lzw.add(s, std::exp2(-static_cast<double>(lzw_compressed_length(s))));
    }
    return out;
}

}  // namespace algoprob
