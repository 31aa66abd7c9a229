#pragma once

/// @file perm_gen.hpp
/// @brief Monotone permutation circuits derived from a comparator network:
///        one generator keyed by per-comparator swap bits, one by permutation
///        matrices (recoded to doubled binary keys and sorted).

#include "monocirc/circuit.hpp"
#include "monocirc/encodings.hpp"
#include "monocirc/shift_gen.hpp"
#include "monocirc/sorting_network.hpp"

namespace monocirc {

struct PermutationCode {
    Permutation perm;
    BitVec code;
};

/// Swap-bit code of a permutation under `net`: simulate the network on ranks
/// (lane perm[t] starts with rank t), record 1 per comparator that swaps,
/// and double the resulting vector. Codes are injective over permutations and
/// pairwise incomparable (doubling forces constant weight).
PermutationCode comparator_encode(const ComparatorNetwork& net, const Permutation& perm);

/// Permutation circuit for the swap-bit encoding.
/// Inputs: x (position-major, q per position), then the E swap bits followed
/// by their E complements. Outputs: position-major; for the code of pi,
/// output t carries x_{pi(t)}.
Circuit gen_perm_sortnet(std::size_t n, std::size_t q, const ComparatorNetwork& net,
                         const GenOptions& opts = {});

/// Permutation circuit for the permutation-matrix encoding.
/// Inputs: x (position-major), then Y row-major (y_{j,k} at j*n + k).
/// Each row of Y is recoded to a doubled binary key (position of its 1) via
/// dyadic OR-trees, then (key, payload) records are sorted by `net` with
/// keyed comparator subcircuits. On permutation matrices the outputs agree
/// with the boolean matrix product: output t = OR_j x_j y_{j,t}.
Circuit gen_perm_matrix(std::size_t n, std::size_t q, const ComparatorNetwork& net,
                        const GenOptions& opts = {});

/// Standalone keyed comparator fragment for tests.
/// Inputs: a_key (width), a_bar (width), b_key (width), b_bar (width),
/// pa (q), pb (q). Outputs: min record (key, bar, payload), max record,
/// then the selector pair (lt, geq) = ([a < b], [a >= b]).
Circuit doubled_word_comparator(std::size_t width, std::size_t q);

/// Documented size-bound constants for gen_perm_matrix at q == 1:
/// gate_count <= kPermMatrixRecodeCoeff * n^2
///            + kPermMatrixComparatorCoeff * |comparators| * (1 + ceil(log2 n)).
inline constexpr std::size_t kPermMatrixRecodeCoeff = 4;
inline constexpr std::size_t kPermMatrixComparatorCoeff = 24;

} // namespace monocirc
