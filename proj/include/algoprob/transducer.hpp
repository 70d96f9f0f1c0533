#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algoprob/binary_string.hpp"

namespace algoprob {

// One transition of a deterministic finite-state transducer: the successor
// state (1-based) and the block appended to the output when the transition
// fires. The output block may be empty.
struct Transition {
    int next = 1;
    BinaryString out;

    friend bool operator==(const Transition&, const Transition&) = default;
};

// Complete transducer over the input alphabet {0,1}. State 1 is the start
// state; every state has exactly two outgoing transitions. There are no
// accept states: any fully consumed input is a valid run.
struct Transducer {
    int states = 1;
    std::vector<std::array<Transition, 2>> delta;  // delta[state-1][input bit]

    const Transition& at(int state, int bit) const { return delta[state - 1][bit]; }

    friend bool operator==(const Transducer&, const Transducer&) = default;
};

// Feeds p through t from state 1 and concatenates the emitted blocks.
BinaryString run_transducer(const Transducer& t, const BinaryString& p);

// Bit-level transducer encoding. Implementations must be injective on valid
// encodings (encode(decode(sigma)) == sigma) and are identified by a stable
// id that artifacts embed.
class EncodingScheme {
public:
    virtual ~EncodingScheme() = default;

    virtual std::string id() const = 0;

    virtual BinaryString encode(const Transducer& t) const = 0;

    // nullopt when sigma is not a valid encoding.
    virtual std::optional<Transducer> decode(const BinaryString& sigma) const = 0;

    // All prefix lengths m (ascending) such that tau[0..m) is valid. The
    // whole length |tau| is included when tau itself is valid.
    virtual std::vector<std::size_t> valid_prefixes(const BinaryString& tau) const = 0;

    // Every valid encoding of exact length m, by direct construction rather
    // than by scanning bit strings. Order is deterministic.
    virtual std::vector<BinaryString> enumerate(std::size_t m) const = 0;
};

// The built-in scheme, id "block-v1". A transducer with n states is encoded
// as 2n blocks, one per (state, input) pair in the order
// (1,0),(1,1),...,(n,0),(n,1). The block for a transition to state j with
// output v is
//     dbl(bin(j-1)) ++ "01" ++ dbl(v) ++ "01"
// where dbl doubles every bit and bin(0) is empty, bin(k>0) is k in binary
// with no leading zeros. A decoder reads doubled pairs 00/11 until the 01
// delimiter; the pair 10 in a field position invalidates the string, as does
// a leading-zero state field. A string is valid iff it parses into exactly
// 2n complete blocks with every successor state <= n.
const EncodingScheme& default_scheme();

// Registry lookup by id; nullptr when unknown.
const EncodingScheme* find_scheme(const std::string& id);
std::vector<std::string> scheme_ids();

// One way of reading tau as (encoding, input): tau = sigma ++ p with
// |sigma| = sigma_len and t = decode(sigma).
struct Split {
    std::size_t sigma_len = 0;
    Transducer t;
};

// Every split of tau whose prefix is a valid encoding. The encoding set is
// not prefix-free, so several splits can coexist; all are returned.
std::vector<Split> decode_splits(const BinaryString& tau,
                                 const EncodingScheme& scheme = default_scheme());

}  // namespace algoprob
