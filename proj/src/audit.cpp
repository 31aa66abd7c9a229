#include "monocirc/audit.hpp"

#include "json.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace monocirc {

namespace {

struct Layout {
    std::size_t n;
    std::size_t q;
    bool component_major;

    std::size_t x_index(std::size_t i, std::size_t c) const {
        return component_major ? c * n + i : i * q + c;
    }
    std::size_t out_slot(std::size_t pos, std::size_t c) const {
        return component_major ? c * n + pos : pos * q + c;
    }
};

void check_arity(const Circuit& c, const Antichain& a, std::size_t q) {
    if (q < 1) {
        throw std::invalid_argument("audit: q must be >= 1");
    }
    if (c.input_count() != a.n * q + a.m || c.output_count() != a.n * q) {
        throw std::invalid_argument(
            "audit: arity mismatch (circuit " + std::to_string(c.input_count()) + "/" +
            std::to_string(c.output_count()) + " vs expected " + std::to_string(a.n * q + a.m) +
            "/" + std::to_string(a.n * q) + ")");
    }
}

// Runs the two evaluations of the probe for (k, i, c) and marks flagged nodes.
void probe_into(const Circuit& c, const Antichain& a, const Layout& lay, std::size_t k,
                std::size_t i, std::size_t comp, BitVec& assignment, std::vector<Bit>& v1,
                std::vector<Bit>& v0) {
    const std::size_t nx = lay.n * lay.q;
    const BitVec& code = a.codes[k];
    std::copy(code.begin(), code.end(), assignment.begin() + static_cast<std::ptrdiff_t>(nx));
    std::fill(assignment.begin(), assignment.begin() + static_cast<std::ptrdiff_t>(nx), 0);
    assignment[lay.x_index(i, comp)] = 1;
    c.evaluate_into(assignment, v1);
    std::fill(assignment.begin(), assignment.begin() + static_cast<std::ptrdiff_t>(nx), 1);
    assignment[lay.x_index(i, comp)] = 0;
    c.evaluate_into(assignment, v0);
}

} // namespace

std::vector<bool> probe_identity(const Circuit& c, const Antichain& a, std::size_t k,
                                 std::size_t i, std::size_t component, const AuditOptions& opts) {
    if (k >= a.n || i >= a.n) {
        throw std::out_of_range("probe_identity: k or i out of range");
    }
    const std::size_t q = (c.input_count() - a.m) / a.n;
    check_arity(c, a, q);
    if (component >= q) {
        throw std::out_of_range("probe_identity: component out of range");
    }
    const Layout lay{a.n, q, opts.component_major};
    BitVec assignment(c.input_count());
    std::vector<Bit> v1, v0;
    probe_into(c, a, lay, k, i, component, assignment, v1, v0);
    std::vector<bool> flags(c.node_count());
    for (std::size_t node = 0; node < c.node_count(); ++node) {
        flags[node] = v1[node] == 1 && v0[node] == 0;
    }
    return flags;
}

namespace {

struct TraceResult {
    std::vector<std::vector<NodeRef>> paths;
    std::vector<std::string> failures;
};

// Probes all (i, c) for a fixed k, then walks each path. identity[node] holds
// the encoded (i, c) the node computes, or -1; a node flagged by two probes
// is a hard failure (a fixed Y assignment pins down each node's X-function).
TraceResult trace_assignment(const Circuit& c, const Antichain& a, const Layout& lay,
                             std::size_t k, std::vector<std::int32_t>& identity) {
    TraceResult result;
    const std::size_t n = lay.n;
    const std::size_t q = lay.q;
    identity.assign(c.node_count(), -1);
    BitVec assignment(c.input_count());
    std::vector<Bit> v1, v0;
    for (std::size_t comp = 0; comp < q; ++comp) {
        for (std::size_t i = 0; i < n; ++i) {
            probe_into(c, a, lay, k, i, comp, assignment, v1, v0);
            const std::int32_t enc = static_cast<std::int32_t>(i * q + comp);
            for (std::size_t node = 0; node < c.node_count(); ++node) {
                if (v1[node] == 1 && v0[node] == 0) {
                    if (identity[node] != -1 && identity[node] != enc) {
                        result.failures.push_back(
                            "k=" + std::to_string(k) + ": node " + std::to_string(node) +
                            " carries two different input identities (" +
                            std::to_string(identity[node]) + " and " + std::to_string(enc) + ")");
                    }
                    identity[node] = enc;
                }
            }
        }
    }

    result.paths.resize(n * q);
    for (std::size_t comp = 0; comp < q; ++comp) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::int32_t enc = static_cast<std::int32_t>(i * q + comp);
            const std::size_t slot = lay.out_slot((i + k) % n, comp);
            NodeRef node = c.outputs()[slot];
            std::vector<NodeRef>& path = result.paths[i * q + comp];
            if (identity[node] != enc) {
                result.failures.push_back(
                    "k=" + std::to_string(k) + ": output slot " + std::to_string(slot) +
                    " does not compute x_" + std::to_string(i) +
                    (q > 1 ? " (component " + std::to_string(comp) + ")" : ""));
                continue;
            }
            bool stuck = false;
            while (!c.is_input_ref(node)) {
                path.push_back(node);
                const Gate& g = c.gate_at(node);
                const bool lf = identity[g.left] == enc;
                const bool rf = identity[g.right] == enc;
                if (lf && rf) {
                    node = std::min(g.left, g.right);
                } else if (lf) {
                    node = g.left;
                } else if (rf) {
                    node = g.right;
                } else {
                    result.failures.push_back("k=" + std::to_string(k) +
                                              ": no flagged fan-in, stuck at node " +
                                              std::to_string(node));
                    path.clear();
                    stuck = true;
                    break;
                }
            }
            if (!stuck && node != lay.x_index(i, comp)) {
                result.failures.push_back("k=" + std::to_string(k) +
                                          ": path ends at the wrong input " +
                                          std::to_string(node));
                path.clear();
            }
        }
    }
    return result;
}

} // namespace

std::vector<std::vector<NodeRef>> trace_paths(const Circuit& c, const Antichain& a, std::size_t k,
                                              std::size_t component, const AuditOptions& opts) {
    if (k >= a.n) {
        throw std::out_of_range("trace_paths: k out of range");
    }
    const std::size_t q = a.n ? (c.input_count() - a.m) / a.n : 1;
    check_arity(c, a, q);
    const Layout lay{a.n, q, opts.component_major};
    std::vector<std::int32_t> identity;
    TraceResult result = trace_assignment(c, a, lay, k, identity);
    if (!result.failures.empty()) {
        throw std::runtime_error("trace_paths: " + result.failures.front());
    }
    std::vector<std::vector<NodeRef>> paths(a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
        paths[i] = std::move(result.paths[i * q + component]);
    }
    return paths;
}

AuditReport run_audit(const Circuit& c, const Antichain& a, std::size_t q,
                      const AuditOptions& opts) {
    check_arity(c, a, q);
    const std::size_t n = a.n;
    const Layout lay{n, q, opts.component_major};

    AuditReport report;
    report.n = n;
    report.q = q;
    report.gate_count = c.gate_count();
    report.chi.assign(c.gate_count(), 0);
    report.per_output_sums.assign(n * q, 0);
    report.log2_factorial_bound = std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0);
    if (opts.keep_paths) {
        report.paths.resize(n * q * n);
    }

    // Assignments Y = code_k are independent; workers own per-k results and
    // the census counters merge by addition in k order afterwards.
    std::vector<TraceResult> per_k(n);
    const std::size_t evals_per_k = 2 * n * q * c.gate_count();
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers =
        evals_per_k * n > 1u << 22 ? static_cast<unsigned>(std::min<std::size_t>(hw, n)) : 1;
    if (workers == 1) {
        std::vector<std::int32_t> identity;
        for (std::size_t k = 0; k < n; ++k) {
            per_k[k] = trace_assignment(c, a, lay, k, identity);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                std::vector<std::int32_t> identity;
                for (std::size_t k = w; k < n; k += workers) {
                    per_k[k] = trace_assignment(c, a, lay, k, identity);
                }
            });
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        TraceResult& traced = per_k[k];
        for (std::string& f : traced.failures) {
            report.failures.push_back(std::move(f));
        }
        for (std::size_t comp = 0; comp < q; ++comp) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::vector<NodeRef>& path = traced.paths[i * q + comp];
                const std::size_t slot = lay.out_slot((i + k) % n, comp);
                for (NodeRef node : path) {
                    report.chi[node - c.input_count()] += 1;
                    report.per_output_sums[slot] += 1;
                }
                if (opts.keep_paths) {
                    report.paths[(k * q + comp) * n + i] = path;
                }
            }
        }
    }

    for (std::uint32_t x : report.chi) {
        report.max_chi = std::max(report.max_chi, x);
        report.total_chi += x;
    }
    if (report.max_chi > n) {
        report.failures.push_back("chi(e) = " + std::to_string(report.max_chi) +
                                  " exceeds n = " + std::to_string(n));
    }
    report.eq1_ok = report.total_chi <= static_cast<std::uint64_t>(c.gate_count()) * n;
    report.eq2_ok = true;
    for (std::uint64_t s : report.per_output_sums) {
        if (static_cast<double>(s) < report.log2_factorial_bound - 1e-9) {
            report.eq2_ok = false;
        }
    }
    report.implied_lower_bound = static_cast<double>(report.total_chi) / static_cast<double>(n);
    return report;
}

std::string audit_report_to_json(const AuditReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["q"] = r.q;
    j["L"] = r.gate_count;
    j["max_chi"] = r.max_chi;
    j["total_chi"] = r.total_chi;
    j["per_output_sums"] = r.per_output_sums;
    j["log2_factorial_bound"] = r.log2_factorial_bound;
    j["eq1_ok"] = r.eq1_ok;
    j["eq2_ok"] = r.eq2_ok;
    j["implied_lower_bound"] = r.implied_lower_bound;
    j["failures"] = r.failures;
    return j.dump();
}

} // namespace monocirc
