#include "algoprob/cellular.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace algoprob {

int ca_neighborhood_size(CaFamily family) {
    return family == CaFamily::Elementary ? 3 : 4;
}

int ca_rule_count(CaFamily family) {
    return family == CaFamily::Elementary ? 256 : 65536;
}

namespace {

void check_rule(const CaRule& rule) {
    if (rule.rule_number < 0 || rule.rule_number >= ca_rule_count(rule.family))
        throw std::invalid_argument("CA rule number out of range: " +
                                    std::to_string(rule.rule_number));
}

}  // namespace

std::vector<BinaryString> ca_evolve(const CaRule& rule, int steps, CaStart start) {
    check_rule(rule);
    if (steps < 1)
        throw std::invalid_argument("ca_evolve: steps must be >= 1");

    const int left = rule.family == CaFamily::Elementary ? 1 : 2;
    const int nsize = left + 2;
    const int all_ones = (1 << nsize) - 1;

    int bg = start == CaStart::OneOnZeros ? 0 : 1;
    // cells[j] is the value at position lo + j; the span [lo, hi] is exactly
    // the current light cone, everything outside it equals bg.
    std::vector<int> cells{bg ^ 1};
    std::vector<int> next;

    std::vector<BinaryString> rows;
    rows.reserve(static_cast<std::size_t>(steps));

    for (int t = 1; t <= steps; ++t) {
        // The cone gains one cell on the left (rules look right one cell) and
        // `left` cells on the right per step.
        next.assign(cells.size() + 1 + static_cast<std::size_t>(left), 0);
        for (std::size_t j = 0; j < next.size(); ++j) {
            int k = 0;
            for (int m = 0; m < nsize; ++m) {
                long long idx = static_cast<long long>(j) - 1 - left + m;
                int v = (idx >= 0 && idx < static_cast<long long>(cells.size()))
                            ? cells[static_cast<std::size_t>(idx)]
                            : bg;
                k = (k << 1) | v;
            }
            next[j] = (rule.rule_number >> k) & 1;
        }
        cells.swap(next);
        bg = (rule.rule_number >> (bg ? all_ones : 0)) & 1;

        std::string row(cells.size(), '0');
        for (std::size_t j = 0; j < cells.size(); ++j)
            if (cells[j]) row[j] = '1';
        rows.emplace_back(std::move(row));
    }
    return rows;
}

BinaryString ca_row_window(const BinaryString& row, std::size_t max_len) {
    if (row.size() <= max_len) return row;
    std::size_t offset = (row.size() - max_len) / 2;
    return BinaryString{row.bits().substr(offset, max_len)};
}

EmpiricalDistribution ca_distribution(CaFamily family, int steps, bool both_starts) {
    if (steps < 1)
        throw std::invalid_argument("ca_distribution: steps must be >= 1");
    constexpr std::size_t kWindow = 12;

    DistributionMeta meta;
    meta.model = "ca";
    meta.params["family"] = family == CaFamily::Elementary ? "elementary" : "general";
    meta.params["steps"] = std::to_string(steps);
    meta.params["window"] = std::to_string(kWindow);
    meta.params["initial"] = both_starts ? "both" : "one";
    const std::uint64_t rules = static_cast<std::uint64_t>(ca_rule_count(family));
    const std::uint64_t starts = both_starts ? 2 : 1;
    meta.total_programs = rules * static_cast<std::uint64_t>(steps) * starts;
    meta.halting_count = meta.total_programs;

    EmpiricalDistribution dist(std::move(meta));
    for (int r = 0; r < ca_rule_count(family); ++r) {
        CaRule rule{family, r};
        for (std::uint64_t s = 0; s < starts; ++s) {
            auto rows = ca_evolve(rule, steps,
                                  s == 0 ? CaStart::OneOnZeros : CaStart::ZeroOnOnes);
            for (const auto& row : rows)
                dist.add(ca_row_window(row, kWindow), 1.0);
        }
    }
    return dist;
}

}  // namespace algoprob
