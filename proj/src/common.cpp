#include "monocirc/common.hpp"

namespace monocirc {

Permutation nth_permutation(std::size_t n, std::uint64_t idx) {
    if (n > 20) {
        throw std::invalid_argument("nth_permutation: n too large for 64-bit factorials");
    }
    std::vector<std::uint64_t> fact(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) {
        fact[i] = fact[i - 1] * i;
    }
    if (idx >= fact[n]) {
        throw std::out_of_range("nth_permutation: index out of range");
    }
    std::vector<std::uint32_t> avail;
    avail.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        avail.push_back(static_cast<std::uint32_t>(i));
    }
    Permutation p;
    p.reserve(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::uint64_t f = fact[n - 1 - pos];
        const std::size_t d = static_cast<std::size_t>(idx / f);
        idx %= f;
        p.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return p;
}

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
    Permutation p = identity_perm(n);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

std::uint64_t saturating_factorial(std::size_t n) {
    const std::uint64_t cap = 1ull << 63;
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        if (f > cap / i) {
            return cap;
        }
        f *= i;
    }
    return f;
}

} // namespace monocirc
