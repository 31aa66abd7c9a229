// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Exit status is the number of failed criteria.

#include "monocirc/audit.hpp"
#include "monocirc/baselines.hpp"
#include "monocirc/cli.hpp"
#include "monocirc/netlist_json.hpp"
#include "monocirc/oracles.hpp"
#include "monocirc/perm_gen.hpp"
#include "monocirc/shift_gen.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace monocirc;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) {
        ++failures;
    }
}

// 1. Exact Pratt count qn(2n-1) for all 1 <= q,n <= 8.
void criterion_exact_matmul_count() {
    bool ok = true;
    std::string detail;
    for (std::size_t q = 1; q <= 8 && ok; ++q) {
        for (std::size_t n = 1; n <= 8 && ok; ++n) {
            const std::size_t got = gen_matmul(q, n).gate_count();
            const std::size_t want = q * n * (2 * n - 1);
            if (got != want) {
                ok = false;
                detail = "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " +
                         std::to_string(got) + " != " + std::to_string(want);
            }
        }
    }
    report(1, "gen_matmul has exactly qn(2n-1) gates for q,n <= 8", ok, detail);
}

// 2. Exhaustive shift correctness for (n,q) in {(2,1),(4,1),(8,1),(4,2)}, A0 and A1.
void criterion_shift_correctness() {
    bool ok = true;
    std::string detail;
    const std::pair<std::size_t, std::size_t> cases[] = {{2, 1}, {4, 1}, {8, 1}, {4, 2}};
    for (const auto& [n, q] : cases) {
        for (const Antichain& a : {antichain_a0(n), antichain_a1(n)}) {
            const Circuit c = gen_shift(n, q, a);
            const VerifyReport r = verify(c, OperatorSpec::shift(n, q, a), {});
            const std::uint64_t want_cases = n * (std::uint64_t{1} << (n * q));
            if (!r.pass || r.cases != want_cases) {
                ok = false;
                detail = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " " + a.family;
            }
        }
    }
    report(2, "gen_shift exhaustively matches the shift oracle (both encodings)", ok, detail);
}

// 3. Permutation correctness: n <= 4 exhaustive, n = 6 on 500 seeded samples.
void criterion_perm_correctness() {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 4 && ok; ++n) {
        const ComparatorNetwork net = batcher_network(n);
        const VerifyReport sortnet =
            verify(gen_perm_sortnet(n, 1, net), OperatorSpec::perm_comparator(n, 1, net), {});
        const VerifyReport matrix =
            verify(gen_perm_matrix(n, 1, net), OperatorSpec::perm_matrix(n, 1), {});
        const std::uint64_t want = saturating_factorial(n) * (std::uint64_t{1} << n);
        if (!sortnet.pass || !matrix.pass || sortnet.cases != want || matrix.cases != want) {
            ok = false;
            detail = "exhaustive n=" + std::to_string(n);
        }
    }
    {
        const ComparatorNetwork net = batcher_network(6);
        VerifyOptions opts;
        opts.mode = VerifyMode::Random;
        opts.trials = 500;
        opts.seed = 20260810;
        const VerifyReport sortnet =
            verify(gen_perm_sortnet(6, 1, net), OperatorSpec::perm_comparator(6, 1, net), opts);
        const VerifyReport matrix =
            verify(gen_perm_matrix(6, 1, net), OperatorSpec::perm_matrix(6, 1), opts);
        if (!sortnet.pass || !matrix.pass || sortnet.cases != 500 || matrix.cases != 500) {
            ok = false;
            detail = "random n=6";
        }
    }
    report(3, "permutation circuits match pi(X): n <= 4 exhaustive, n = 6 random", ok, detail);
}

// 4. Audit certification for shift circuits at n in {2,4,8,16,32}, A0 and A1.
void criterion_audit_certification() {
    bool ok = true;
    std::string detail;
    for (std::size_t n : {2, 4, 8, 16, 32}) {
        for (const Antichain& a : {antichain_a0(n), antichain_a1(n)}) {
            const Circuit c = gen_shift(n, 1, a);
            const AuditReport r = run_audit(c, a, 1);
            const double bound = r.log2_factorial_bound - 1e-9;
            bool this_ok = r.failures.empty() && r.max_chi <= n &&
                           r.total_chi <= static_cast<std::uint64_t>(r.gate_count) * n &&
                           r.implied_lower_bound <= static_cast<double>(r.gate_count);
            for (std::uint64_t s : r.per_output_sums) {
                this_ok = this_ok && static_cast<double>(s) >= bound;
            }
            if (!this_ok) {
                ok = false;
                detail = "n=" + std::to_string(n) + " " + a.family;
            }
        }
    }
    report(4, "audit: max chi <= n, per-output sums >= log2 n!, sum chi <= Ln", ok, detail);
}

// 5. Probe soundness against brute-force enumeration of monotone functions.
void criterion_probe_soundness() {
    bool ok = true;
    std::string detail;
    const std::size_t expected_counts[] = {0, 3, 6, 20, 168};
    for (std::size_t v = 1; v <= 4; ++v) {
        const std::uint32_t points = 1u << v;
        std::size_t count = 0;
        for (std::uint64_t table = 0; table < (std::uint64_t{1} << points); ++table) {
            bool monotone = true;
            for (std::uint32_t x = 0; x < points && monotone; ++x) {
                for (std::size_t i = 0; i < v && monotone; ++i) {
                    monotone = ((table >> x) & 1) <= ((table >> (x | (1u << i))) & 1);
                }
            }
            if (!monotone) {
                continue;
            }
            ++count;
            for (std::size_t i = 0; i < v; ++i) {
                std::uint32_t projection = 0;
                for (std::uint32_t x = 0; x < points; ++x) {
                    if ((x >> i) & 1) {
                        projection |= 1u << x;
                    }
                }
                const std::uint32_t ei = 1u << i;
                const std::uint32_t not_ei = (points - 1) ^ ei;
                const bool probe = ((table >> ei) & 1) == 1 && ((table >> not_ei) & 1) == 0;
                if ((table == projection) != probe) {
                    ok = false;
                    detail = "v=" + std::to_string(v) + " table=" + std::to_string(table);
                }
            }
        }
        if (count != expected_counts[v]) {
            ok = false;
            detail = "monotone count at v=" + std::to_string(v) + " is " + std::to_string(count);
        }
    }
    report(5, "two-point probe == projection test over all monotone functions, n <= 4", ok,
           detail);
}

// 6. Completion properties for gen_shift(n,1,A1) and gen_convolution(n), n <= 5.
void criterion_completion() {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 5; ++n) {
        const CompletionReport conv = check_completion(gen_convolution(n));
        const CompletionReport shift = check_completion(gen_shift(n, 1, antichain_a1(n)));
        if (!conv.pass || !shift.pass || conv.realized_g != BitVec(n, 0)) {
            ok = false;
            detail = "n=" + std::to_string(n);
        }
    }
    report(6, "completion: |Y|=1 matches conv, Y=0 outputs are 0 or the full AND", ok, detail);
}

// 7. Scaling: shift in 4n log2 n + 4n up to n=4096; convolution exactly 2n^2-n.
void criterion_scaling() {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 4; n <= 4096; n *= 2) {
        const std::size_t shift_gates = gen_shift(n, 1, antichain_a0(n)).gate_count();
        if (shift_gates > 4 * n * ceil_log2(n) + 4 * n) {
            ok = false;
            detail = "shift n=" + std::to_string(n) + " gates=" + std::to_string(shift_gates);
        }
        const std::size_t conv_gates = gen_convolution(n).gate_count();
        if (conv_gates != 2 * n * n - n) {
            ok = false;
            detail = "conv n=" + std::to_string(n);
        }
    }
    report(7, "shift stays within 4n log2 n + 4n while conv grows as 2n^2 - n (n <= 4096)", ok,
           detail);
}

// 8. Sorting-network soundness via the 0-1 principle, n <= 10.
void criterion_sorting_network() {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 10; ++n) {
        if (!sorts_all_binary_inputs(batcher_network(n))) {
            ok = false;
            detail = "n=" + std::to_string(n);
        }
    }
    report(8, "batcher_network sorts all 2^n binary inputs for n <= 10", ok, detail);
}

// 9. Antichain property of A0, A1 (n <= 64) and comparator codes (n <= 5).
void criterion_antichains() {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 64; ++n) {
        if (!is_antichain(antichain_a0(n).codes) || !is_antichain(antichain_a1(n).codes)) {
            ok = false;
            detail = "a0/a1 n=" + std::to_string(n);
        }
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        const ComparatorNetwork net = batcher_network(n);
        std::vector<BitVec> codes;
        Permutation p = identity_perm(n);
        do {
            codes.push_back(comparator_encode(net, p).code);
        } while (std::next_permutation(p.begin(), p.end()));
        std::vector<BitVec> sorted = codes;
        std::sort(sorted.begin(), sorted.end());
        const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        if (codes.size() != saturating_factorial(n) || !injective || !is_antichain(codes)) {
            ok = false;
            detail = "comparator codes n=" + std::to_string(n);
        }
    }
    report(9, "A0, A1 (n <= 64) and comparator codes (n <= 5) are antichains; codes injective",
           ok, detail);
}

// 10. Every function-changing single gate-kind flip in a verified n=4 shift
// netlist is caught by cmd_verify with a counterexample.
void criterion_fault_detection() {
    bool ok = true;
    std::string detail;
    const auto dir = std::filesystem::temp_directory_path();
    const auto netlist_path = (dir / "monocirc_acceptance_shift4.json").string();
    const auto mutant_path = (dir / "monocirc_acceptance_mutant.json").string();
    const auto report_path = (dir / "monocirc_acceptance_report.json").string();

    std::ostringstream out, err;
    if (run_cli({"gen", "shift", "--n", "4", "--encoding", "a0", "--out", netlist_path}, out,
                err) != 0 ||
        run_cli({"verify", netlist_path, "--out", report_path}, out, err) != 0) {
        report(10, "single gate-kind fault injection on a verified n=4 shift netlist", false,
               "baseline generation or verification failed");
        return;
    }

    const Netlist baseline = netlist_from_json(read_file(netlist_path));
    const Antichain a = antichain_a0(4);
    std::size_t changing = 0, silent = 0, missed = 0, spurious = 0;

    for (std::size_t t = 0; t < baseline.circuit.gate_count(); ++t) {
        std::vector<Gate> gates = baseline.circuit.gates();
        gates[t].kind = gates[t].kind == GateKind::And ? GateKind::Or : GateKind::And;
        const Circuit mutant = Circuit::from_parts(baseline.circuit.inputs(), gates,
                                                   baseline.circuit.outputs(), "mutant");

        // Ground truth by direct enumeration against the shift oracle.
        bool changed = false;
        BitVec assignment(mutant.input_count());
        for (std::size_t k = 0; k < 4 && !changed; ++k) {
            for (std::uint32_t xv = 0; xv < 16 && !changed; ++xv) {
                const BitVec x = bits_of(xv, 4);
                std::copy(x.begin(), x.end(), assignment.begin());
                std::copy(a.codes[k].begin(), a.codes[k].end(), assignment.begin() + 4);
                if (mutant.output_values(mutant.evaluate(assignment)) != shift_spec(x, 4, 1, k)) {
                    changed = true;
                }
            }
        }
        (changed ? changing : silent) += 1;

        write_file_atomic(mutant_path, netlist_to_json(mutant, baseline.encoding));
        std::ostringstream mout, merr;
        const int code = run_cli({"verify", mutant_path, "--out", report_path}, mout, merr);
        if (changed && code != 1) {
            ok = false;
            ++missed;
        }
        if (!changed && code != 0) {
            ok = false;
            ++spurious;
        }
        if (changed && code == 1) {
            // The reported counterexample must reproduce on the mutant.
            const nlohmann::json rep = nlohmann::json::parse(read_file(report_path));
            if (!rep.contains("counterexample")) {
                ok = false;
                ++missed;
            } else {
                const BitVec cx = bitvec_from_string(rep["counterexample"]["x"].get<std::string>());
                const BitVec cy = bitvec_from_string(rep["counterexample"]["y"].get<std::string>());
                BitVec asg = cx;
                asg.insert(asg.end(), cy.begin(), cy.end());
                const BitVec got = mutant.output_values(mutant.evaluate(asg));
                if (to_bitstring(got) != rep["counterexample"]["output"].get<std::string>() ||
                    got == bitvec_from_string(rep["counterexample"]["expected"].get<std::string>())) {
                    ok = false;
                    ++missed;
                }
            }
        }
    }
    if (changing == 0) {
        ok = false;
        detail = "no function-changing fault was generated";
    } else {
        detail = std::to_string(changing) + " changing faults caught, " + std::to_string(silent) +
                 " provably silent, " + std::to_string(missed) + " missed, " +
                 std::to_string(spurious) + " spurious";
    }
    report(10, "single gate-kind fault injection on a verified n=4 shift netlist", ok, detail);

    std::filesystem::remove(netlist_path);
    std::filesystem::remove(mutant_path);
    std::filesystem::remove(report_path);
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion_exact_matmul_count();
    criterion_shift_correctness();
    criterion_perm_correctness();
    criterion_audit_certification();
    criterion_probe_soundness();
    criterion_completion();
    criterion_scaling();
    criterion_sorting_network();
    criterion_antichains();
    criterion_fault_detection();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::printf("%d/10 criteria passed in %lld ms\n", 10 - failures,
                static_cast<long long>(elapsed.count()));
    return failures;
}
