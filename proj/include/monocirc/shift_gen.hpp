#pragma once

/// @file shift_gen.hpp
/// @brief Generator for monotone cyclic-shift circuits: a monomial detector
///        per codeword, dyadic bit indicators, then ceil(log2 n) layers of
///        monotone two-way muxes shifting by 0 or 2^i positions.

#include "monocirc/circuit.hpp"
#include "monocirc/encodings.hpp"

#include <array>

namespace monocirc {

/// Bit-value indicators derived from the n codeword monomials.
///
/// bit[i][beta] evaluates to 1 on Y = code_k iff bit i of k equals beta.
/// They are ORs over the nodes of one dyadic OR-tree built over the monomials
/// (dyadic[lvl][t] covers codeword indices [t*2^lvl, (t+1)*2^lvl)), which
/// keeps the whole bank linear in n.
struct IndicatorBank {
    std::size_t levels = 0;
    std::vector<std::array<NodeRef, 2>> bit; // bit[i][beta]
    std::vector<std::vector<NodeRef>> dyadic;
    std::size_t gates_added = 0;
};

/// Builds the bank over `monomials` (one ref per codeword, in index order).
IndicatorBank emit_dyadic_indicators(CircuitBuilder& b, std::span<const NodeRef> monomials);

struct GenOptions {
    bool dedup = false;
};

/// Monotone circuit for the cyclic shift with codebook `a` (a.n == n).
/// Inputs: x0..x_{n-1} (q components each, position-major), then y0..y_{m-1}.
/// Outputs: n positions of q components; for Y = code_k, output position
/// (i + k) mod n carries x_i.
Circuit gen_shift(std::size_t n, std::size_t q, const Antichain& a, const GenOptions& opts = {});

} // namespace monocirc
