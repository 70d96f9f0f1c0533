#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "algoprob/binary_string.hpp"

namespace algoprob {

// Provenance carried by every histogram. `params` keys are free-form but a
// distribution can only be merged with one whose model, params, scheme and
// consolidated flag all agree.
struct DistributionMeta {
    std::string model;
    std::map<std::string, std::string> params;
    std::uint64_t total_programs = 0;
    std::uint64_t halting_count = 0;
    std::string scheme_id;
    bool consolidated = false;
    // When set, probabilities divide by total_programs instead of the count
    // sum. Grammar sampling needs this: one grammar contributes to every
    // string it generates, so the count sum exceeds the sample size.
    bool per_program = false;

    friend bool operator==(const DistributionMeta&, const DistributionMeta&) = default;
};

// Output-frequency histogram of one enumeration or sample. Counts stay exact
// integers until something real-valued (consolidation, baseline weights)
// enters; the mode is tracked so artifacts can render integers as integers.
class EmpiricalDistribution {
public:
    EmpiricalDistribution() = default;
    explicit EmpiricalDistribution(DistributionMeta meta) : meta_(std::move(meta)) {}

    const DistributionMeta& meta() const { return meta_; }
    DistributionMeta& meta() { return meta_; }

    // Adds `count` observations of s. Zero is a no-op; a string enters the
    // support either through a positive count or through ensure().
    void add(const BinaryString& s, double count = 1.0);

    // Puts s in the support with count 0 if absent. Lets a distribution
    // record "queried, never produced" explicitly.
    void ensure(const BinaryString& s);

    double count(const BinaryString& s) const;
    bool contains(const BinaryString& s) const { return counts_.count(s) != 0; }
    std::size_t support_size() const { return counts_.size(); }
    bool empty() const { return counts_.empty(); }
    double total() const;
    // What probabilities divide by: total_programs under per_program meta,
    // otherwise the count sum.
    double denominator() const;
    bool integer_counts() const { return integer_counts_; }
    void mark_real() { integer_counts_ = false; }

    const std::unordered_map<BinaryString, double>& counts() const { return counts_; }

    std::vector<BinaryString> support() const;

private:
    DistributionMeta meta_;
    std::unordered_map<BinaryString, double> counts_;
    bool integer_counts_ = true;
};

// One artifact row. `probability` is count/denominator; `ctm` is
// -log2(probability), +inf on a zero-count row.
struct DistributionRow {
    BinaryString s;
    double count = 0.0;
    double probability = 0.0;
    double ctm = 0.0;
};

// Canonical row order: count descending, then raw bit string ascending (the
// empty string first). Every export and checkpoint uses this order, which is
// what makes artifacts independent of worker count.
std::vector<DistributionRow> rows(const EmpiricalDistribution& d);

// Probability view: count/total per string. Errors on an empty distribution.
std::unordered_map<BinaryString, double> to_probability(const EmpiricalDistribution& d);

// -log2(count/total), the coding-theorem complexity estimate. A string
// outside the support has no estimate: explicitly absent, never 0 or inf.
std::optional<double> ctm_complexity(const EmpiricalDistribution& d, const BinaryString& s);

// Symmetrizes the histogram over the reverse/complement orbit:
//   value(s) = (f(s) + f(rev s) + f(comp s) + f(rev comp s)) / |orbit(s)|.
// The support becomes orbit-closed. A consolidated distribution is returned
// unchanged, so the operation is idempotent.
EmpiricalDistribution consolidate(const EmpiricalDistribution& d);

// Pointwise sum. Refuses (std::invalid_argument) when meta disagrees.
EmpiricalDistribution merge(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

// Shortest decimal rendering that parses back to the same double.
std::string render_double(double x);

// CSV artifact: "# key: value" meta lines, a header row, then
// string,count,probability,ctm_complexity in canonical order.
void write_csv(const EmpiricalDistribution& d, std::ostream& os);
std::string to_csv(const EmpiricalDistribution& d);
EmpiricalDistribution read_csv(std::istream& is);

// JSON artifact mirroring the CSV plus the meta block.
void write_json(const EmpiricalDistribution& d, std::ostream& os);
std::string to_json(const EmpiricalDistribution& d);
EmpiricalDistribution read_json(std::istream& is);

}  // namespace algoprob
