#include "monocirc/perm_gen.hpp"

#include <stdexcept>

namespace monocirc {

PermutationCode comparator_encode(const ComparatorNetwork& net, const Permutation& perm) {
    if (net.lanes != perm.size()) {
        throw std::invalid_argument("comparator_encode: network lanes " +
                                    std::to_string(net.lanes) + " != permutation size " +
                                    std::to_string(perm.size()));
    }
    if (!is_permutation(perm)) {
        throw std::invalid_argument("comparator_encode: not a permutation");
    }
    const std::size_t n = perm.size();
    std::vector<std::uint32_t> keys(n);
    for (std::size_t t = 0; t < n; ++t) {
        keys[perm[t]] = static_cast<std::uint32_t>(t);
    }
    BitVec swaps;
    swaps.reserve(net.comparators.size());
    for (const Comparator& c : net.comparators) {
        const bool swap = keys[c.low] > keys[c.high];
        swaps.push_back(swap ? 1 : 0);
        if (swap) {
            std::swap(keys[c.low], keys[c.high]);
        }
    }
    for (std::size_t t = 0; t < n; ++t) {
        if (keys[t] != t) {
            throw std::runtime_error("comparator_encode: network does not sort its lanes");
        }
    }
    return PermutationCode{perm, doubling(swaps)};
}

Circuit gen_perm_sortnet(std::size_t n, std::size_t q, const ComparatorNetwork& net,
                         const GenOptions& opts) {
    if (n < 1 || q < 1) {
        throw std::invalid_argument("gen_perm_sortnet: require n >= 1 and q >= 1");
    }
    if (net.lanes != n) {
        throw std::invalid_argument("gen_perm_sortnet: network lane count mismatch");
    }
    const std::size_t ncomp = net.comparators.size();
    CircuitBuilder b(opts.dedup);
    std::vector<std::vector<NodeRef>> lane(n, std::vector<NodeRef>(q));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < q; ++c) {
            lane[i][c] = b.add_input(q == 1 ? "x" + std::to_string(i)
                                            : "x" + std::to_string(i) + "_" + std::to_string(c));
        }
    }
    std::vector<NodeRef> y(ncomp), ybar(ncomp);
    for (std::size_t e = 0; e < ncomp; ++e) {
        y[e] = b.add_input("y" + std::to_string(e));
    }
    for (std::size_t e = 0; e < ncomp; ++e) {
        ybar[e] = b.add_input("y" + std::to_string(ncomp + e));
    }

    // Swap bit 1 routes the records across; 0 keeps them in place.
    for (std::size_t e = 0; e < ncomp; ++e) {
        const Comparator& c = net.comparators[e];
        std::vector<NodeRef> top(q), bottom(q);
        for (std::size_t comp = 0; comp < q; ++comp) {
            const NodeRef a = lane[c.low][comp];
            const NodeRef d = lane[c.high][comp];
            top[comp] = b.add_or(b.add_and(a, ybar[e]), b.add_and(d, y[e]));
            bottom[comp] = b.add_or(b.add_and(a, y[e]), b.add_and(d, ybar[e]));
        }
        lane[c.low] = std::move(top);
        lane[c.high] = std::move(bottom);
    }
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t c = 0; c < q; ++c) {
            b.add_output(lane[t][c]);
        }
    }
    return b.build("perm n=" + std::to_string(n) + " q=" + std::to_string(q) +
                   " encoding=pi_comparator; inputs x (position-major) then " +
                   std::to_string(ncomp) + " swap bits and their complements; for the code of "
                   "pi, output t carries x_{pi(t)}");
}

namespace {

struct KeyedRecord {
    std::vector<NodeRef> key;     // true rails, LSB first
    std::vector<NodeRef> key_bar; // complement rails
    std::vector<NodeRef> payload;
};

struct CompareSwapResult {
    KeyedRecord min;
    KeyedRecord max;
    NodeRef lt;  // [a < b]
    NodeRef geq; // [a >= b]
};

// Most-significant-first scan with a running prefix-equality conjunction.
// lt and geq are each other's monotone complements whenever the rails are
// consistent, so they act as a doubled mux selector for the routing below.
CompareSwapResult emit_keyed_compare_swap(CircuitBuilder& b, const KeyedRecord& a,
                                          const KeyedRecord& bb) {
    const std::size_t w = a.key.size();
    std::vector<NodeRef> lt_terms, gt_terms;
    NodeRef eq_run = 0;
    bool have_eq = false;
    for (std::size_t jj = w; jj-- > 0;) {
        NodeRef lt_t = b.add_and(a.key_bar[jj], bb.key[jj]);
        NodeRef gt_t = b.add_and(a.key[jj], bb.key_bar[jj]);
        if (have_eq) {
            lt_t = b.add_and(lt_t, eq_run);
            gt_t = b.add_and(gt_t, eq_run);
        }
        lt_terms.push_back(lt_t);
        gt_terms.push_back(gt_t);
        const NodeRef eqbit = b.add_or(b.add_and(a.key[jj], bb.key[jj]),
                                       b.add_and(a.key_bar[jj], bb.key_bar[jj]));
        eq_run = have_eq ? b.add_and(eq_run, eqbit) : eqbit;
        have_eq = true;
    }
    CompareSwapResult res;
    res.lt = b.add_chain(GateKind::Or, lt_terms);
    res.geq = b.add_or(b.add_chain(GateKind::Or, gt_terms), eq_run);

    auto route = [&](const std::vector<NodeRef>& on_lt, const std::vector<NodeRef>& on_geq) {
        std::vector<NodeRef> out(on_lt.size());
        for (std::size_t i = 0; i < on_lt.size(); ++i) {
            out[i] = b.add_or(b.add_and(on_lt[i], res.lt), b.add_and(on_geq[i], res.geq));
        }
        return out;
    };
    res.min.key = route(a.key, bb.key);
    res.min.key_bar = route(a.key_bar, bb.key_bar);
    res.min.payload = route(a.payload, bb.payload);
    res.max.key = route(bb.key, a.key);
    res.max.key_bar = route(bb.key_bar, a.key_bar);
    res.max.payload = route(bb.payload, a.payload);
    return res;
}

} // namespace

Circuit gen_perm_matrix(std::size_t n, std::size_t q, const ComparatorNetwork& net,
                        const GenOptions& opts) {
    if (n < 1 || q < 1) {
        throw std::invalid_argument("gen_perm_matrix: require n >= 1 and q >= 1");
    }
    if (net.lanes != n) {
        throw std::invalid_argument("gen_perm_matrix: network lane count mismatch");
    }
    CircuitBuilder b(opts.dedup);
    std::vector<std::vector<NodeRef>> payload(n, std::vector<NodeRef>(q));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < q; ++c) {
            payload[i][c] = b.add_input(q == 1 ? "x" + std::to_string(i)
                                               : "x" + std::to_string(i) + "_" +
                                                     std::to_string(c));
        }
    }
    std::vector<std::vector<NodeRef>> row(n, std::vector<NodeRef>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            row[j][k] = b.add_input("y" + std::to_string(j) + "_" + std::to_string(k));
        }
    }

    std::vector<KeyedRecord> rec(n);
    if (n > 1) {
        // Row j's key is the column index of its 1; the dyadic indicator bank
        // over the row entries yields both rails of every key bit at once.
        const std::size_t w = ceil_log2(n);
        for (std::size_t j = 0; j < n; ++j) {
            const IndicatorBank bank = emit_dyadic_indicators(b, row[j]);
            rec[j].key.resize(w);
            rec[j].key_bar.resize(w);
            for (std::size_t bitpos = 0; bitpos < w; ++bitpos) {
                rec[j].key[bitpos] = bank.bit[bitpos][1];
                rec[j].key_bar[bitpos] = bank.bit[bitpos][0];
            }
            rec[j].payload = payload[j];
        }
        for (const Comparator& c : net.comparators) {
            CompareSwapResult r = emit_keyed_compare_swap(b, rec[c.low], rec[c.high]);
            rec[c.low] = std::move(r.min);
            rec[c.high] = std::move(r.max);
        }
    } else {
        rec[0].payload = payload[0];
    }
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t c = 0; c < q; ++c) {
            b.add_output(rec[t].payload[c]);
        }
    }
    return b.build("perm n=" + std::to_string(n) + " q=" + std::to_string(q) +
                   " encoding=pi1_matrix; inputs x (position-major) then Y row-major (y_{j,k} "
                   "at j*n+k); on permutation matrices output t = OR_j x_j y_{j,t}");
}

Circuit doubled_word_comparator(std::size_t width, std::size_t q) {
    if (width < 1) {
        throw std::invalid_argument("doubled_word_comparator: width must be >= 1");
    }
    CircuitBuilder b;
    auto add_bank = [&](const std::string& prefix, std::size_t count) {
        std::vector<NodeRef> refs(count);
        for (std::size_t i = 0; i < count; ++i) {
            refs[i] = b.add_input(prefix + std::to_string(i));
        }
        return refs;
    };
    KeyedRecord a, bb;
    a.key = add_bank("a", width);
    a.key_bar = add_bank("abar", width);
    bb.key = add_bank("b", width);
    bb.key_bar = add_bank("bbar", width);
    a.payload = add_bank("pa", q);
    bb.payload = add_bank("pb", q);
    const CompareSwapResult r = emit_keyed_compare_swap(b, a, bb);
    for (const std::vector<NodeRef>* part :
         {&r.min.key, &r.min.key_bar, &r.min.payload, &r.max.key, &r.max.key_bar,
          &r.max.payload}) {
        for (NodeRef ref : *part) {
            b.add_output(ref);
        }
    }
    b.add_output(r.lt);
    b.add_output(r.geq);
    return b.build("keyed comparator width=" + std::to_string(width) + " q=" + std::to_string(q) +
                   "; inputs a, abar, b, bbar, pa, pb; outputs min record, max record, lt, geq");
}

} // namespace monocirc
