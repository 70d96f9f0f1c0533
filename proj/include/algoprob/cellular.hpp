#pragma once

#include <cstddef>
#include <vector>

#include "algoprob/binary_string.hpp"
#include "algoprob/distribution.hpp"

namespace algoprob {

// Two rule families over {0,1}:
//   Elementary: next cell from (left, center, right), 256 rules.
//   General:    next cell from (left2, left1, center, right), 65536 rules.
enum class CaFamily { Elementary, General };

// Wolfram numbering: bit k of rule_number is the next cell value for the
// neighborhood whose cells, read left to right, spell k in binary.
//   Elementary: k = 4*left + 2*center + right.
//   General:    k = 8*left2 + 4*left1 + 2*center + right.
struct CaRule {
    CaFamily family = CaFamily::Elementary;
    int rule_number = 0;
};

int ca_neighborhood_size(CaFamily family);  // 3 or 4
int ca_rule_count(CaFamily family);         // 256 or 65536

// Start configurations. A conjugate rule pair maps OneOnZeros runs to
// ZeroOnOnes runs cell for cell, so complement symmetry of a family histogram
// holds only when both starts are included.
enum class CaStart { OneOnZeros, ZeroOnOnes };

// Rows t = 1..steps of the automaton started from a single flipped cell on a
// uniform background. Row t covers exactly the cells the start cell can have
// influenced: positions [-t, t] for elementary rules and [-t, 2t] for general
// rules (their neighborhood reaches two cells left, so influence travels
// right at two cells per step). Cells outside that span hold the uniform
// background value, which is itself stepped through the rule, so rules that
// turn an all-zero neighborhood into 1 evolve exactly.
std::vector<BinaryString> ca_evolve(const CaRule& rule, int steps,
                                    CaStart start = CaStart::OneOnZeros);

// Rows longer than max_len keep their middle max_len cells, at offset
// (len - max_len) / 2; an odd overhang drops one extra cell on the right.
BinaryString ca_row_window(const BinaryString& row, std::size_t max_len);

// One row sample per rule, start and t = 1..steps, each cut to its centered
// 12-cell window. Model id "ca".
EmpiricalDistribution ca_distribution(CaFamily family, int steps = 12,
                                      bool both_starts = false);

}  // namespace algoprob
