#pragma once

/// @file audit.hpp
/// @brief Path-census certification for circuits claiming a cyclic-shift
///        operator.
///
/// For every codeword assignment Y = code_k the output for position
/// (i + k) mod n computes exactly x_i, and for monotone node functions
/// "computes exactly x_i" is equivalent to the two-point test
/// value(X = e_i) = 1 and value(X = ones - e_i) = 0. The audit probes all
/// nodes this way, traces an identity-carrying path per (i, k, component),
/// and checks the census bounds: chi(e) <= n per gate, sum chi <= L*n, and
/// per-output sums >= log2(n!).

#include "monocirc/circuit.hpp"
#include "monocirc/encodings.hpp"

#include <optional>

namespace monocirc {

struct AuditOptions {
    /// Input/output layout: position-major x_{i,c} at i*q+c (default), or
    /// component-major at c*n+i (matmul-style netlists).
    bool component_major = false;
    /// Store every traced path in the report (memory: q*n^2 paths).
    bool keep_paths = false;
};

struct AuditReport {
    std::size_t n = 0;
    std::size_t q = 1;
    std::size_t gate_count = 0;
    std::vector<std::uint32_t> chi;             // per gate, all groups summed
    std::uint32_t max_chi = 0;
    std::uint64_t total_chi = 0;
    std::vector<std::uint64_t> per_output_sums; // per output slot
    double log2_factorial_bound = 0.0;
    bool eq1_ok = false; // total_chi <= gate_count * n
    bool eq2_ok = false; // every per-output sum >= log2(n!) (1e-9 slack)
    double implied_lower_bound = 0.0; // total_chi / n
    std::vector<std::string> failures;
    std::vector<std::vector<NodeRef>> paths; // keep_paths: ((k*q)+c)*n + i

    bool certified() const {
        return failures.empty() && eq1_ok && eq2_ok && max_chi <= n;
    }
};

/// Node flags for one probe: node computes x_{i,component} under Y = code_k.
std::vector<bool> probe_identity(const Circuit& c, const Antichain& a, std::size_t k,
                                 std::size_t i, std::size_t component = 0,
                                 const AuditOptions& opts = {});

/// Identity-carrying paths for one assignment Y = code_k (one component
/// group): path i runs from output (i + k) mod n back to input x_i through
/// flagged gates only (ties broken toward the lower node index). Throws
/// std::runtime_error naming the stuck node if a step has no flagged fan-in.
std::vector<std::vector<NodeRef>> trace_paths(const Circuit& c, const Antichain& a, std::size_t k,
                                              std::size_t component = 0,
                                              const AuditOptions& opts = {});

/// Full census over all q*n^2 paths. The circuit is assumed functionally
/// correct on the codebook (verify first); incorrect circuits surface as
/// trace failures in the report rather than a partial census.
AuditReport run_audit(const Circuit& c, const Antichain& a, std::size_t q,
                      const AuditOptions& opts = {});

std::string audit_report_to_json(const AuditReport& r);

} // namespace monocirc
