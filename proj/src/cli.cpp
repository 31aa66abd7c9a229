#include "monocirc/cli.hpp"

#include "monocirc/audit.hpp"
#include "monocirc/baselines.hpp"
#include "monocirc/netlist_json.hpp"
#include "monocirc/oracles.hpp"
#include "monocirc/perm_gen.hpp"
#include "monocirc/shift_gen.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace monocirc {

namespace {

struct RunConfig {
    std::string op;
    std::string netlist_path;
    std::size_t n = 0;
    std::size_t q = 1;
    std::string n_range;
    std::string encoding;
    std::string mode = "exhaustive";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string out_path;
    bool force = false;
    bool dedup = false;
    std::uint64_t exhaustive_cap = std::uint64_t{1} << 24;
    std::size_t bench_audit_cap = 32;
    unsigned threads = 0;
};

unsigned threads_from_env() {
    const char* env = std::getenv("MONOCIRC_THREADS");
    if (env == nullptr) {
        return 0;
    }
    const long v = std::strtol(env, nullptr, 10);
    return v > 0 ? static_cast<unsigned>(v) : 1;
}

struct Generated {
    Circuit circuit;
    EncodingInfo encoding;
};

Generated generate(const RunConfig& cfg) {
    const GenOptions opts{cfg.dedup};
    Generated g;
    if (cfg.op == "shift") {
        if (cfg.encoding != "a0" && cfg.encoding != "a1") {
            throw CLI::ValidationError("gen shift requires --encoding a0|a1");
        }
        const Antichain a = cfg.encoding == "a0" ? antichain_a0(cfg.n) : antichain_a1(cfg.n);
        g.circuit = gen_shift(cfg.n, cfg.q, a, opts);
        g.encoding.family = a.family;
        g.encoding.n = cfg.n;
        g.encoding.q = cfg.q;
        g.encoding.m = a.m;
        for (const BitVec& code : a.codes) {
            g.encoding.codes.push_back(to_bitstring(code));
        }
        return g;
    }
    if (cfg.op == "perm") {
        if (cfg.encoding != "pi_comparator" && cfg.encoding != "pi1_matrix") {
            throw CLI::ValidationError("gen perm requires --encoding pi_comparator|pi1_matrix");
        }
        const ComparatorNetwork net = batcher_network(cfg.n);
        if (cfg.encoding == "pi_comparator") {
            g.circuit = gen_perm_sortnet(cfg.n, cfg.q, net, opts);
            g.encoding.family = "pi_comparator";
            for (const Comparator& c : net.comparators) {
                g.encoding.network.emplace_back(c.low, c.high);
            }
        } else {
            g.circuit = gen_perm_matrix(cfg.n, cfg.q, net, opts);
            g.encoding.family = "pi1_matrix";
        }
        g.encoding.n = cfg.n;
        g.encoding.q = cfg.q;
        return g;
    }
    if (cfg.op == "conv") {
        if (cfg.q != 1) {
            throw CLI::ValidationError("gen conv supports only q = 1");
        }
        g.circuit = gen_convolution(cfg.n, opts);
        g.encoding.family = "conv";
        g.encoding.n = cfg.n;
        return g;
    }
    if (cfg.op == "matmul") {
        g.circuit = gen_matmul(cfg.q, cfg.n, opts);
        g.encoding.family = "matmul";
        g.encoding.n = cfg.n;
        g.encoding.q = cfg.q;
        return g;
    }
    throw CLI::ValidationError("unknown operator '" + cfg.op + "'");
}

std::string stats_line(const Circuit& c) {
    const CircuitStats s = stats(c);
    return "gates=" + std::to_string(s.gate_count) + " depth=" + std::to_string(s.depth) +
           " inputs=" + std::to_string(s.input_count) +
           " outputs=" + std::to_string(s.output_count);
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Generated g = generate(cfg);
    const std::string json = netlist_to_json(g.circuit, g.encoding);
    if (cfg.out_path.empty()) {
        out << json << "\n";
        err << stats_line(g.circuit) << "\n";
    } else {
        write_file_atomic(cfg.out_path, json + "\n");
        out << stats_line(g.circuit) << "\n";
    }
    return 0;
}

Netlist load_netlist(const std::string& path) {
    Netlist netlist = netlist_from_json(read_file(path));
    if (!netlist.encoding) {
        throw std::runtime_error("netlist '" + path + "' declares no encoding");
    }
    return netlist;
}

void emit_report(const RunConfig& cfg, const std::string& json, std::ostream& out,
                 const std::string& summary) {
    if (cfg.out_path.empty()) {
        out << json << "\n";
    } else {
        write_file_atomic(cfg.out_path, json + "\n");
        out << summary << "\n";
    }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Netlist netlist = load_netlist(cfg.netlist_path);
    const EncodingInfo& enc = *netlist.encoding;

    if (cfg.mode == "completion") {
        if (!((enc.family == "a1" && enc.q == 1) || enc.family == "conv")) {
            throw std::runtime_error(
                "completion mode applies to one-hot shift (a1, q=1) or conv netlists");
        }
        const CompletionReport report = check_completion(netlist.circuit, cfg.exhaustive_cap);
        emit_report(cfg, completion_report_to_json(report), out,
                    std::string("status=") + (report.pass ? "pass" : "fail") +
                        " cases=" + std::to_string(report.cases));
        if (!report.pass) {
            for (const std::string& f : report.failures) {
                err << "completion: " << f << "\n";
            }
        }
        return report.pass ? 0 : 1;
    }

    VerifyOptions opts;
    opts.mode = cfg.mode == "random" ? VerifyMode::Random : VerifyMode::Exhaustive;
    opts.trials = cfg.trials;
    opts.seed = cfg.seed;
    opts.exhaustive_cap = cfg.exhaustive_cap;
    opts.threads = cfg.threads;
    const OperatorSpec spec = spec_from_encoding(enc);
    const VerifyReport report = verify(netlist.circuit, spec, opts);
    emit_report(cfg, verify_report_to_json(report), out,
                std::string("status=") + (report.pass ? "pass" : "fail") +
                    " cases=" + std::to_string(report.cases));
    if (report.counterexample) {
        err << "counterexample: x=" << to_bitstring(report.counterexample->x)
            << " y=" << to_bitstring(report.counterexample->y)
            << " output=" << to_bitstring(report.counterexample->output)
            << " expected=" << to_bitstring(report.counterexample->expected) << "\n";
    }
    return report.pass ? 0 : 1;
}

/// Shift-view codebook for auditing a netlist: plain shift families use their
/// stored codes; conv audits against the one-hot codes; permutation and
/// matmul netlists audit against the n cyclic-shift codewords of their
/// encoding (a permutation operator restricted to cyclic shifts is a shift
/// operator).
Antichain audit_antichain(const EncodingInfo& enc, bool& component_major) {
    component_major = false;
    if (enc.family == "a0" || enc.family == "a1" || enc.family == "custom") {
        std::vector<BitVec> codes;
        for (const std::string& s : enc.codes) {
            codes.push_back(bitvec_from_string(s));
        }
        return antichain_from_codes(std::move(codes), enc.family);
    }
    if (enc.family == "conv") {
        return antichain_a1(enc.n);
    }
    if (enc.family == "pi_comparator") {
        ComparatorNetwork net;
        net.lanes = enc.n;
        for (const auto& [u, v] : enc.network) {
            net.comparators.push_back({u, v});
        }
        std::vector<BitVec> codes;
        for (std::size_t k = 0; k < enc.n; ++k) {
            codes.push_back(comparator_encode(net, cyclic_shift_perm(enc.n, k)).code);
        }
        return antichain_from_codes(std::move(codes), "custom");
    }
    if (enc.family == "pi1_matrix" || enc.family == "matmul") {
        component_major = enc.family == "matmul";
        const std::size_t n = enc.n;
        std::vector<BitVec> codes;
        for (std::size_t k = 0; k < n; ++k) {
            BitVec code(n * n, 0);
            for (std::size_t j = 0; j < n; ++j) {
                code[j * n + (j + k) % n] = 1;
            }
            codes.push_back(std::move(code));
        }
        return antichain_from_codes(std::move(codes), "custom");
    }
    throw std::runtime_error("audit: unsupported encoding family '" + enc.family + "'");
}

int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Netlist netlist = load_netlist(cfg.netlist_path);
    const EncodingInfo& enc = *netlist.encoding;

    if (!cfg.force) {
        VerifyOptions vopts;
        vopts.trials = cfg.trials;
        vopts.seed = cfg.seed;
        vopts.exhaustive_cap = cfg.exhaustive_cap;
        vopts.threads = cfg.threads;
        const OperatorSpec spec = spec_from_encoding(enc);
        const std::uint64_t xspace = spec.x_bits() >= 63 ? cfg.exhaustive_cap + 1
                                                         : std::uint64_t{1} << spec.x_bits();
        const bool small = spec.codebook_size() <= cfg.exhaustive_cap / std::max<std::uint64_t>(
                                                       1, xspace) &&
                           xspace <= cfg.exhaustive_cap;
        vopts.mode = small ? VerifyMode::Exhaustive : VerifyMode::Random;
        const VerifyReport pre = verify(netlist.circuit, spec, vopts);
        if (!pre.pass) {
            err << "audit: functional verification failed (" << pre.cases
                << " cases); rerun with --force to audit anyway\n";
            return 1;
        }
    }

    bool component_major = false;
    const Antichain a = audit_antichain(enc, component_major);
    AuditOptions aopts;
    aopts.component_major = component_major;
    const AuditReport report = run_audit(netlist.circuit, a, enc.q, aopts);
    char implied[32];
    std::snprintf(implied, sizeof(implied), "%.4f", report.implied_lower_bound);
    emit_report(cfg, audit_report_to_json(report), out,
                std::string("certified=") + (report.certified() ? "true" : "false") +
                    " L=" + std::to_string(report.gate_count) +
                    " max_chi=" + std::to_string(report.max_chi) +
                    " total_chi=" + std::to_string(report.total_chi) +
                    " implied_lower_bound=" + implied);
    for (const std::string& f : report.failures) {
        err << "audit: " << f << "\n";
    }
    return report.certified() ? 0 : 1;
}

std::vector<std::size_t> bench_sizes(const RunConfig& cfg) {
    std::size_t lo = 0, hi = 0;
    const std::string& r = cfg.n_range;
    const std::size_t colon = r.find(':');
    if (colon == std::string::npos) {
        lo = hi = std::stoull(r);
    } else {
        lo = std::stoull(r.substr(0, colon));
        hi = std::stoull(r.substr(colon + 1));
    }
    if (lo < 2 || hi < lo || !std::has_single_bit(lo) || !std::has_single_bit(hi)) {
        throw CLI::ValidationError("bench --n takes a power-of-two value or range min:max");
    }
    std::vector<std::size_t> sizes;
    for (std::size_t n = lo; n <= hi; n *= 2) {
        sizes.push_back(n);
    }
    return sizes;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    std::string csv = "n,family,gates,depth,gates_per_nlog2n,implied_lower_bound\n";
    for (std::size_t n : bench_sizes(cfg)) {
        RunConfig row_cfg = cfg;
        row_cfg.n = n;
        const Generated g = generate(row_cfg);
        const CircuitStats s = stats(g.circuit);
        const double per = static_cast<double>(s.gate_count) /
                           (static_cast<double>(n) * std::log2(static_cast<double>(n)));
        char per_s[32];
        std::snprintf(per_s, sizeof(per_s), "%.4f", per);
        std::string family = cfg.op == "shift" || cfg.op == "perm"
                                 ? cfg.op + "_" + cfg.encoding
                                 : cfg.op;
        std::string implied;
        if (n <= cfg.bench_audit_cap) {
            bool component_major = false;
            const Antichain a = audit_antichain(g.encoding, component_major);
            AuditOptions aopts;
            aopts.component_major = component_major;
            const AuditReport report = run_audit(g.circuit, a, g.encoding.q, aopts);
            char implied_s[32];
            std::snprintf(implied_s, sizeof(implied_s), "%.4f", report.implied_lower_bound);
            implied = implied_s;
        }
        csv += std::to_string(n) + "," + family + "," + std::to_string(s.gate_count) + "," +
               std::to_string(s.depth) + "," + per_s + "," + implied + "\n";
    }
    if (cfg.out_path.empty()) {
        out << csv;
    } else {
        write_file_atomic(cfg.out_path, csv);
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monocirc: monotone shift/permutation circuit generator, verifier and auditor"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.threads = threads_from_env();

    const std::vector<std::string> operators = {"shift", "perm", "conv", "matmul"};

    CLI::App* gen = app.add_subcommand("gen", "Generate a circuit and write its netlist JSON");
    gen->add_option("operator", cfg.op, "shift|perm|conv|matmul")
        ->required()
        ->check(CLI::IsMember(operators));
    gen->add_option("--n", cfg.n, "operator size")->required()->check(CLI::PositiveNumber);
    gen->add_option("--q", cfg.q, "bits per element")->check(CLI::PositiveNumber);
    gen->add_option("--encoding", cfg.encoding, "a0|a1|pi_comparator|pi1_matrix");
    gen->add_option("--out", cfg.out_path, "netlist file (stdout if omitted)");
    gen->add_option("--seed", cfg.seed, "accepted for uniformity; gen is deterministic");
    gen->add_flag("--dedup,!--no-dedup", cfg.dedup, "structural hash-consing (default off)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Check a netlist against its operator");
    verify_cmd->add_option("netlist", cfg.netlist_path, "netlist JSON path")->required();
    verify_cmd->add_option("--mode", cfg.mode, "exhaustive|random|completion")
        ->check(CLI::IsMember({"exhaustive", "random", "completion"}));
    verify_cmd->add_option("--trials", cfg.trials, "random-mode trial count");
    verify_cmd->add_option("--seed", cfg.seed, "random-mode seed");
    verify_cmd->add_option("--out", cfg.out_path, "report file (stdout if omitted)");
    verify_cmd->add_option("--cap", cfg.exhaustive_cap, "exhaustive evaluation cap");

    CLI::App* audit_cmd = app.add_subcommand("audit", "Path-census certification of a netlist");
    audit_cmd->add_option("netlist", cfg.netlist_path, "netlist JSON path")->required();
    audit_cmd->add_flag("--force", cfg.force, "skip the functional pre-verification");
    audit_cmd->add_option("--trials", cfg.trials, "pre-verification trials (large domains)");
    audit_cmd->add_option("--seed", cfg.seed, "pre-verification seed");
    audit_cmd->add_option("--out", cfg.out_path, "report file (stdout if omitted)");
    audit_cmd->add_option("--cap", cfg.exhaustive_cap, "exhaustive evaluation cap");

    CLI::App* bench = app.add_subcommand("bench", "Size sweep as CSV");
    bench->add_option("operator", cfg.op, "shift|perm|conv|matmul")
        ->required()
        ->check(CLI::IsMember(operators));
    bench->add_option("--n", cfg.n_range, "power-of-two size or range min:max")->required();
    bench->add_option("--q", cfg.q, "bits per element")->check(CLI::PositiveNumber);
    bench->add_option("--encoding", cfg.encoding, "a0|a1|pi_comparator|pi1_matrix");
    bench->add_option("--out", cfg.out_path, "CSV file (stdout if omitted)");
    bench->add_option("--audit-cap", cfg.bench_audit_cap,
                      "largest n for the implied-lower-bound column");
    bench->add_option("--seed", cfg.seed, "accepted for uniformity");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(cfg, out, err);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(cfg, out, err);
        }
        if (audit_cmd->parsed()) {
            return cmd_audit(cfg, out, err);
        }
        if (bench->parsed()) {
            return cmd_bench(cfg, out, err);
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace monocirc
