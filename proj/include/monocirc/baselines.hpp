#pragma once

/// @file baselines.hpp
/// @brief Total reference operators built the naive way: cyclic boolean
///        convolution and boolean matrix multiplication with its exact
///        optimal gate count.

#include "monocirc/circuit.hpp"
#include "monocirc/shift_gen.hpp"

namespace monocirc {

/// Cyclic boolean convolution, output i = OR_j x_j AND y_{(i-j) mod n}.
/// Inputs x0..x_{n-1} then y0..y_{n-1}; with dedup off: exactly n^2 ANDs and
/// n(n-1) ORs (OR-chains kept left-to-right so counts are audit-friendly).
Circuit gen_convolution(std::size_t n, const GenOptions& opts = {});

/// Boolean matrix product z_{i,k} = OR_j x_{i,j} AND y_{j,k}.
/// Inputs: X row-major (x_{i,j} at i*n+j, q rows), then Y row-major
/// (y_{j,k} at j*n+k); outputs row-major. With dedup off the count is
/// exactly qn(2n-1).
Circuit gen_matmul(std::size_t q, std::size_t n, const GenOptions& opts = {});

} // namespace monocirc
