#pragma once

#include <cstddef>

#include "algoprob/binary_string.hpp"

namespace algoprob {

// Per-symbol Shannon entropy of the bit frequencies, in bits. The empty
// string has no frequencies; its entropy is defined as zero and flagged.
struct Entropy {
    double value = 0.0;
    bool degenerate = false;
};

Entropy shannon_entropy(const BinaryString& s);

// Bit length of the LZW code stream for s under a fixed variant:
//   - dictionary starts as {"0", "1"} and never resets,
//   - no header or terminator codes,
//   - each code is emitted at width ceil(log2(D + 1)) where D is the
//     dictionary size at emission time. The +1 accounts for the entry a
//     decoder is about to add; it makes the first code 2 bits wide.
// Returns 0 for the empty string (nothing is emitted).
std::size_t lzw_compressed_length(const BinaryString& s);

}  // namespace algoprob
