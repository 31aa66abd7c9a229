#pragma once

/// @file encodings.hpp
/// @brief Antichain codebooks for shift values and the monomial-system
///        circuits that detect them.
///
/// A codebook is an antichain so that a monotone monomial can single out one
/// codeword: on Y = code[l], the monomial of code[k] evaluates to 1 iff l == k.

#include "monocirc/circuit.hpp"
#include "monocirc/common.hpp"

namespace monocirc {

struct Antichain {
    std::size_t n = 0; // cardinality
    std::size_t m = 0; // code length in bits
    std::vector<BitVec> codes;
    std::string family = "custom"; // "a0" | "a1" | "custom"
};

/// Doubled binary encoding: code k = (bits of k LSB-first, their complements),
/// m = 2 * (floor(log2 n) + 1).
Antichain antichain_a0(std::size_t n);

/// One-hot encoding: code k = unit vector e_k, m = n.
Antichain antichain_a1(std::size_t n);

/// Wraps explicit codes; throws unless they form an antichain.
Antichain antichain_from_codes(std::vector<BitVec> codes, std::string family = "custom");

/// Pairwise incomparability check, O(n^2 m). Throws on ragged word lengths.
bool is_antichain(std::span<const BitVec> codes);

/// v -> (v, complement of v). Output weight always equals len(v).
BitVec doubling(const BitVec& v);

/// Codeword for shift value k (throws std::out_of_range for k >= n).
const BitVec& encode_shift(const Antichain& a, std::size_t k);

/// Circuit over inputs y0..y_{m-1} whose output k computes the monomial of
/// code k, i.e. [Y >= code_k componentwise].
struct MonomialSystem {
    Circuit circuit;
};

/// Emits the n monomials into an existing builder over the given y wires and
/// returns their refs. Weight-1 codes cost no gates; a0 uses a shared
/// half-split scheme with at most 2n gates; other codes get one balanced
/// AND-tree each.
std::vector<NodeRef> emit_monomials(CircuitBuilder& b, const Antichain& a,
                                    std::span<const NodeRef> y);

MonomialSystem monomial_circuit(const Antichain& a);

} // namespace monocirc
