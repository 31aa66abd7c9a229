#include "monocirc/shift_gen.hpp"

#include <stdexcept>

namespace monocirc {

IndicatorBank emit_dyadic_indicators(CircuitBuilder& b, std::span<const NodeRef> monomials) {
    if (monomials.empty()) {
        throw std::invalid_argument("emit_dyadic_indicators: need at least one monomial");
    }
    const std::size_t n = monomials.size();
    const std::size_t before = b.gate_count();

    IndicatorBank bank;
    bank.levels = ceil_log2(n);
    bank.dyadic.resize(std::max<std::size_t>(bank.levels, 1));
    bank.dyadic[0].assign(monomials.begin(), monomials.end());
    for (std::size_t lvl = 1; lvl < bank.levels; ++lvl) {
        const std::vector<NodeRef>& prev = bank.dyadic[lvl - 1];
        std::vector<NodeRef>& cur = bank.dyadic[lvl];
        for (std::size_t t = 0; 2 * t < prev.size(); ++t) {
            if (2 * t + 1 < prev.size()) {
                cur.push_back(b.add_or(prev[2 * t], prev[2 * t + 1]));
            } else {
                cur.push_back(prev[2 * t]); // odd tail passes through
            }
        }
    }

    bank.bit.resize(bank.levels);
    for (std::size_t i = 0; i < bank.levels; ++i) {
        for (std::size_t beta = 0; beta < 2; ++beta) {
            std::vector<NodeRef> terms;
            for (std::size_t t = beta; t < bank.dyadic[i].size(); t += 2) {
                terms.push_back(bank.dyadic[i][t]);
            }
            if (terms.empty()) {
                throw std::logic_error("emit_dyadic_indicators: empty indicator");
            }
            bank.bit[i][beta] = b.add_chain(GateKind::Or, terms);
        }
    }
    bank.gates_added = b.gate_count() - before;
    return bank;
}

Circuit gen_shift(std::size_t n, std::size_t q, const Antichain& a, const GenOptions& opts) {
    if (n < 1 || q < 1) {
        throw std::invalid_argument("gen_shift: require n >= 1 and q >= 1");
    }
    if (a.n != n) {
        throw std::invalid_argument("gen_shift: codebook cardinality " + std::to_string(a.n) +
                                    " does not match n = " + std::to_string(n));
    }
    CircuitBuilder b(opts.dedup);
    std::vector<NodeRef> x(n * q);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < q; ++c) {
            x[i * q + c] = b.add_input(q == 1 ? "x" + std::to_string(i)
                                              : "x" + std::to_string(i) + "_" + std::to_string(c));
        }
    }
    std::vector<NodeRef> y(a.m);
    for (std::size_t j = 0; j < a.m; ++j) {
        y[j] = b.add_input("y" + std::to_string(j));
    }

    std::vector<NodeRef> cur = x;
    if (n > 1) {
        const std::vector<NodeRef> monomials = emit_monomials(b, a, y);
        const IndicatorBank bank = emit_dyadic_indicators(b, monomials);
        std::vector<NodeRef> next(n * q);
        for (std::size_t lvl = 0; lvl < bank.levels; ++lvl) {
            const std::size_t amount = std::size_t{1} << lvl;
            const NodeRef on = bank.bit[lvl][1];
            const NodeRef off = bank.bit[lvl][0];
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t src = (j + n - (amount % n)) % n;
                for (std::size_t c = 0; c < q; ++c) {
                    const NodeRef shifted = b.add_and(on, cur[src * q + c]);
                    const NodeRef kept = b.add_and(off, cur[j * q + c]);
                    next[j * q + c] = b.add_or(shifted, kept);
                }
            }
            cur.swap(next);
        }
    }
    for (NodeRef r : cur) {
        b.add_output(r);
    }
    return b.build("shift n=" + std::to_string(n) + " q=" + std::to_string(q) + " encoding=" +
                   a.family + "; inputs x (position-major, q per position) then y0..y" +
                   std::to_string(a.m ? a.m - 1 : 0) +
                   "; for Y=code_k, output (i+k) mod n carries x_i");
}

} // namespace monocirc
