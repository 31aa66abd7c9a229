#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monocirc/baselines.hpp"
#include "monocirc/circuit.hpp"
#include "monocirc/encodings.hpp"
#include "monocirc/perm_gen.hpp"
#include "monocirc/shift_gen.hpp"

#include <random>

using namespace monocirc;

TEST_CASE("builder hands out dense refs and rejects dangling fan-ins") {
    CircuitBuilder b;
    const NodeRef x0 = b.add_input("x0");
    CHECK(x0 == 0);
    const NodeRef g = b.add_and(x0, x0); // x0 AND x0 == x0
    CHECK(g == 1);
    CHECK_THROWS_AS(b.add_or(x0, 99), std::invalid_argument);

    b.add_output(g);
    const Circuit c = b.build("idempotence");
    const std::vector<Bit> v1 = c.evaluate(std::vector<Bit>{1});
    CHECK(v1[g] == 1);
    const std::vector<Bit> v0 = c.evaluate(std::vector<Bit>{0});
    CHECK(v0[g] == 0);
}

TEST_CASE("add_node enforces fan-in arity per kind") {
    CircuitBuilder b;
    const NodeRef x0 = b.add_node(NodeKind::Input, {}, "x0");
    const NodeRef x1 = b.add_node(NodeKind::Input, {}, "x1");
    const std::vector<NodeRef> pair = {x0, x1};
    const NodeRef g = b.add_node(NodeKind::Or, pair);
    CHECK(g == 2);

    const std::vector<NodeRef> one = {x0};
    CHECK_THROWS_AS(b.add_node(NodeKind::And, one), std::invalid_argument);
    CHECK_THROWS_AS(b.add_node(NodeKind::Input, pair), std::invalid_argument);
}

TEST_CASE("evaluate returns values for every node") {
    CircuitBuilder b;
    const NodeRef x0 = b.add_input("x0");
    const NodeRef x1 = b.add_input("x1");
    const NodeRef g = b.add_or(x0, x1);
    b.add_output(g);
    const Circuit c = b.build("single or");

    const std::vector<Bit> values = c.evaluate(std::vector<Bit>{0, 0});
    CHECK(values == std::vector<Bit>{0, 0, 0});

    CircuitBuilder b2;
    const NodeRef a = b2.add_input("x0");
    const NodeRef d = b2.add_input("x1");
    const NodeRef an = b2.add_and(a, d);
    b2.add_output(an);
    const Circuit c2 = b2.build("single and");
    CHECK(c2.evaluate(std::vector<Bit>{1, 1})[an] == 1);

    CHECK_THROWS_AS(c.evaluate(std::vector<Bit>{1}), std::invalid_argument);
}

TEST_CASE("naive convolution at n=2 matches the hand-expanded definition") {
    const Circuit c = gen_convolution(2);
    // X=(1,0), Y=(0,1): c0 = x0y0 | x1y1 = 0, c1 = x0y1 | x1y0 = 1
    const std::vector<Bit> values = c.evaluate(std::vector<Bit>{1, 0, 0, 1});
    CHECK(c.output_values(values) == BitVec{0, 1});
}

TEST_CASE("stats: counts and depth") {
    CircuitBuilder b;
    const NodeRef x0 = b.add_input("x0");
    b.add_output(x0);
    const Circuit wire = b.build("wire");
    const CircuitStats ws = stats(wire);
    CHECK(ws.gate_count == 0);
    CHECK(ws.depth == 0);

    const CircuitStats ms = stats(gen_matmul(1, 3));
    CHECK(ms.gate_count == 15); // qn(2n-1)

    CircuitBuilder b2;
    const NodeRef a = b2.add_input("a");
    const NodeRef d = b2.add_input("b");
    b2.add_output(b2.add_or(a, d));
    const CircuitStats os = stats(b2.build("or"));
    CHECK(os.gate_count == 1);
    CHECK(os.depth == 1);
}

TEST_CASE("stats are not perturbed by evaluation") {
    const Circuit c = gen_convolution(3);
    const CircuitStats before = stats(c);
    (void)c.evaluate(std::vector<Bit>(6, 1));
    const CircuitStats after = stats(c);
    CHECK(before.gate_count == after.gate_count);
    CHECK(before.depth == after.depth);
}

TEST_CASE("validate flags order violations and bad outputs") {
    const Circuit good = gen_convolution(2);
    CHECK(validate(good).empty());

    // Gate 0 (node 2) references node 3, which is the later gate 1.
    const Circuit bad = Circuit::from_parts(
        {"x0", "x1"}, {{GateKind::Or, 0, 3}, {GateKind::And, 0, 1}},
        {static_cast<NodeRef>(2)}, "bad");
    const std::vector<std::string> violations = validate(bad);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("order violation") != std::string::npos);

    const Circuit bad_out =
        Circuit::from_parts({"x0"}, {}, {static_cast<NodeRef>(5)}, "bad out");
    const std::vector<std::string> v2 = validate(bad_out);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].find("invalid node reference") != std::string::npos);

    const Circuit dangling = Circuit::from_parts({"x0"}, {{GateKind::And, 0, 7}},
                                                 {static_cast<NodeRef>(1)}, "dangling");
    CHECK(validate(dangling).size() == 1);
    CHECK(validate(dangling)[0].find("dangling") != std::string::npos);
}

TEST_CASE("structural dedup merges commuted duplicates only when enabled") {
    CircuitBuilder plain;
    const NodeRef x0 = plain.add_input("x0");
    const NodeRef x1 = plain.add_input("x1");
    CHECK(plain.add_and(x0, x1) != plain.add_and(x1, x0));

    CircuitBuilder consing(true);
    const NodeRef a = consing.add_input("x0");
    const NodeRef d = consing.add_input("x1");
    const NodeRef g1 = consing.add_and(a, d);
    CHECK(consing.add_and(d, a) == g1);
    CHECK(consing.add_or(a, d) != g1);
}

namespace {

// Samples >= 1000 componentwise-ordered pairs and checks every node value is
// ordered the same way.
void check_monotone(const Circuit& c, std::mt19937_64& rng) {
    std::vector<Bit> lo(c.input_count()), hi(c.input_count());
    std::vector<Bit> vlo, vhi;
    for (int trial = 0; trial < 1000; ++trial) {
        for (std::size_t i = 0; i < c.input_count(); ++i) {
            hi[i] = static_cast<Bit>(rng() & 1u);
            lo[i] = static_cast<Bit>(hi[i] & (rng() & 1u));
        }
        c.evaluate_into(lo, vlo);
        c.evaluate_into(hi, vhi);
        for (std::size_t node = 0; node < c.node_count(); ++node) {
            REQUIRE(vlo[node] <= vhi[node]);
        }
    }
}

} // namespace

TEST_CASE("every generated circuit is monotone node by node") {
    std::mt19937_64 rng(7);
    check_monotone(gen_shift(4, 1, antichain_a0(4)), rng);
    check_monotone(gen_shift(5, 2, antichain_a1(5)), rng);
    check_monotone(gen_perm_sortnet(4, 1, batcher_network(4)), rng);
    check_monotone(gen_perm_matrix(3, 1, batcher_network(3)), rng);
    check_monotone(gen_convolution(4), rng);
    check_monotone(gen_matmul(2, 3), rng);
}
