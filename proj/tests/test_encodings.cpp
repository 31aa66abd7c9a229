#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monocirc/encodings.hpp"

#include <random>

using namespace monocirc;

TEST_CASE("a0: doubled binary encoding shapes and codewords") {
    CHECK(antichain_a0(8).m == 8); // m = 2(floor(log2 n) + 1)

    const Antichain a4 = antichain_a0(4);
    CHECK(a4.m == 6);
    CHECK(a4.codes[0] == BitVec{0, 0, 0, 1, 1, 1});
    // k=2 LSB-first: bits (0,1,0), complements (1,0,1)
    CHECK(a4.codes[2] == BitVec{0, 1, 0, 1, 0, 1});
}

TEST_CASE("a1: one-hot codewords") {
    const Antichain a = antichain_a1(3);
    CHECK(a.m == 3);
    CHECK(a.codes[0] == BitVec{1, 0, 0});
    CHECK(a.codes[1] == BitVec{0, 1, 0});
    CHECK(a.codes[2] == BitVec{0, 0, 1});

    CHECK(antichain_a1(1).codes == std::vector<BitVec>{{1}});
    CHECK(is_antichain(antichain_a1(5).codes));
}

TEST_CASE("is_antichain: basic pairs and ragged input") {
    CHECK(is_antichain(std::vector<BitVec>{{1, 0}, {0, 1}}));
    CHECK_FALSE(is_antichain(std::vector<BitVec>{{1, 0}, {1, 1}}));
    CHECK_FALSE(is_antichain(std::vector<BitVec>{{1, 0}, {1, 0}}));
    CHECK_THROWS_AS(is_antichain(std::vector<BitVec>{{1, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("doubling any two distinct words yields an antichain (all 4-bit pairs)") {
    for (std::uint32_t v = 0; v < 16; ++v) {
        CHECK(weight(doubling(bits_of(v, 4))) == 4);
        for (std::uint32_t w = 0; w < 16; ++w) {
            if (v == w) {
                continue;
            }
            CHECK(is_antichain(std::vector<BitVec>{doubling(bits_of(v, 4)),
                                                   doubling(bits_of(w, 4))}));
        }
    }
}

TEST_CASE("doubling examples") {
    CHECK(doubling({1, 0}) == BitVec{1, 0, 0, 1});
    CHECK(doubling({0, 0}) == BitVec{0, 0, 1, 1});
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const std::size_t len = 1 + rng() % 12;
        BitVec v(len);
        for (Bit& b : v) {
            b = static_cast<Bit>(rng() & 1u);
        }
        CHECK(weight(doubling(v)) == len);
    }
}

TEST_CASE("constructed antichains pass the exhaustive incomparability check") {
    for (std::size_t n : {1, 2, 3, 5, 8, 16, 33, 64}) {
        CHECK(is_antichain(antichain_a0(n).codes));
        CHECK(is_antichain(antichain_a1(n).codes));
    }
}

namespace {

// Exhaustive truth-table check: output k is 1 exactly on assignments above
// code k in the componentwise order.
void check_monomials_exhaustive(const Antichain& a) {
    REQUIRE(a.m <= 16);
    const MonomialSystem sys = monomial_circuit(a);
    BitVec y(a.m);
    std::vector<Bit> values;
    for (std::uint32_t v = 0; v < (1u << a.m); ++v) {
        for (std::size_t i = 0; i < a.m; ++i) {
            y[i] = static_cast<Bit>((v >> i) & 1u);
        }
        sys.circuit.evaluate_into(y, values);
        const BitVec out = sys.circuit.output_values(values);
        for (std::size_t k = 0; k < a.n; ++k) {
            CHECK(out[k] == (bitvec_leq(a.codes[k], y) ? 1 : 0));
        }
    }
}

} // namespace

TEST_CASE("monomial systems: a1 is free, a0 stays within 2n gates") {
    CHECK(monomial_circuit(antichain_a1(4)).circuit.gate_count() == 0);

    const MonomialSystem a0_8 = monomial_circuit(antichain_a0(8));
    CHECK(a0_8.circuit.gate_count() <= 16);
    check_monomials_exhaustive(antichain_a0(8));

    // n=1: the single codeword is (0,1), so the monomial is the bare literal y1.
    const MonomialSystem a0_1 = monomial_circuit(antichain_a0(1));
    CHECK(a0_1.circuit.gate_count() == 0);
    check_monomials_exhaustive(antichain_a0(1));
}

TEST_CASE("a0 monomial sharing meets the 2n budget across sizes") {
    for (std::size_t n = 1; n <= 130; ++n) {
        CHECK(monomial_circuit(antichain_a0(n)).circuit.gate_count() <= 2 * n);
    }
    for (std::size_t n : {257, 511, 1000, 2048, 4095, 4096}) {
        CHECK(monomial_circuit(antichain_a0(n)).circuit.gate_count() <= 2 * n);
    }
}

TEST_CASE("monomial truth tables for a0 and a1 across small sizes") {
    for (std::size_t n = 1; n <= 9; ++n) {
        check_monomials_exhaustive(antichain_a0(n));
        check_monomials_exhaustive(antichain_a1(n));
    }
}

TEST_CASE("monomials for doubled random codebooks") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        std::vector<BitVec> words;
        std::vector<bool> used(32, false);
        while (words.size() < 6) {
            const std::uint32_t v = static_cast<std::uint32_t>(rng() % 32);
            if (!used[v]) {
                used[v] = true;
                words.push_back(doubling(bits_of(v, 5)));
            }
        }
        check_monomials_exhaustive(antichain_from_codes(words));
    }
}

TEST_CASE("weight-0 codes cannot be realized as monomials") {
    const Antichain zero = antichain_from_codes({BitVec{0, 0}});
    CHECK_THROWS_AS(monomial_circuit(zero), std::invalid_argument);
}

TEST_CASE("encode_shift returns the exact codeword and range-checks k") {
    const Antichain a1 = antichain_a1(4);
    CHECK(encode_shift(a1, 2) == BitVec{0, 0, 1, 0});
    const Antichain a0 = antichain_a0(4);
    CHECK(encode_shift(a0, 0) == BitVec{0, 0, 0, 1, 1, 1});
    CHECK_THROWS_AS(encode_shift(a1, 4), std::out_of_range);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(encode_shift(a0, k) == a0.codes[k]);
    }
}
