#pragma once

/// @file common.hpp
/// @brief Shared scalar types, bit-vector helpers and permutation utilities

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monocirc {

using Bit = std::uint8_t;
using BitVec = std::vector<Bit>;
using Permutation = std::vector<std::uint32_t>;

/// Smallest r with n <= 2^r (0 for n == 1).
inline std::size_t ceil_log2(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ceil_log2: n must be >= 1");
    }
    return static_cast<std::size_t>(std::bit_width(n - 1));
}

/// Number of bits in the binary representation of n, i.e. floor(log2 n) + 1.
inline std::size_t bit_length(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("bit_length: n must be >= 1");
    }
    return static_cast<std::size_t>(std::bit_width(n));
}

inline std::string to_bitstring(const BitVec& v) {
    std::string s;
    s.reserve(v.size());
    for (Bit b : v) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

inline BitVec bitvec_from_string(std::string_view s) {
    BitVec v;
    v.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitvec_from_string: expected only '0'/'1'");
        }
        v.push_back(c == '1' ? 1 : 0);
    }
    return v;
}

/// LSB-first bits of `value`, padded/truncated to `width`.
inline BitVec bits_of(std::uint64_t value, std::size_t width) {
    BitVec v(width);
    for (std::size_t i = 0; i < width; ++i) {
        v[i] = static_cast<Bit>((value >> i) & 1u);
    }
    return v;
}

inline std::size_t weight(const BitVec& v) {
    std::size_t w = 0;
    for (Bit b : v) {
        w += b;
    }
    return w;
}

/// Componentwise a <= b (requires equal lengths).
inline bool bitvec_leq(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("bitvec_leq: length mismatch");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

inline Permutation identity_perm(std::size_t n) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = static_cast<std::uint32_t>(i);
    }
    return p;
}

inline bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (std::uint32_t v : p) {
        if (v >= p.size() || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

inline Permutation inverse_perm(const Permutation& p) {
    Permutation inv(p.size());
    for (std::size_t t = 0; t < p.size(); ++t) {
        inv[p[t]] = static_cast<std::uint32_t>(t);
    }
    return inv;
}

/// Permutation view of the cyclic right shift by k: pi(t) = (t - k) mod n,
/// so that output t = x_{pi(t)} places x_i at position (i + k) mod n.
inline Permutation cyclic_shift_perm(std::size_t n, std::size_t k) {
    Permutation p(n);
    for (std::size_t t = 0; t < n; ++t) {
        p[t] = static_cast<std::uint32_t>((t + n - (k % n)) % n);
    }
    return p;
}

/// idx-th permutation of {0..n-1} in lexicographic order (factorial number system).
Permutation nth_permutation(std::size_t n, std::uint64_t idx);

/// Uniform random permutation; uses rng() % bound so the sequence does not
/// depend on the standard library's distribution implementation.
Permutation random_perm(std::size_t n, std::mt19937_64& rng);

/// n! saturated at 2^63 (enough to compare against evaluation caps).
std::uint64_t saturating_factorial(std::size_t n);

} // namespace monocirc
