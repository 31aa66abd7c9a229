#include "monocirc/oracles.hpp"

#include "monocirc/perm_gen.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace monocirc {

BitVec shift_spec(std::span<const Bit> x, std::size_t n, std::size_t q, std::size_t k) {
    if (k >= n) {
        throw std::out_of_range("shift_spec: k out of range");
    }
    if (x.size() != n * q) {
        throw std::invalid_argument("shift_spec: x size mismatch");
    }
    BitVec out(n * q);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t dst = (i + k) % n;
        for (std::size_t c = 0; c < q; ++c) {
            out[dst * q + c] = x[i * q + c];
        }
    }
    return out;
}

BitVec perm_spec(std::span<const Bit> x, std::size_t n, std::size_t q, const Permutation& perm) {
    if (perm.size() != n || !is_permutation(perm)) {
        throw std::invalid_argument("perm_spec: not a permutation of {0..n-1}");
    }
    if (x.size() != n * q) {
        throw std::invalid_argument("perm_spec: x size mismatch");
    }
    BitVec out(n * q);
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t c = 0; c < q; ++c) {
            out[t * q + c] = x[perm[t] * q + c];
        }
    }
    return out;
}

BitVec conv_spec(std::span<const Bit> x, std::span<const Bit> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("conv_spec: dimension mismatch");
    }
    const std::size_t n = x.size();
    BitVec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i] |= static_cast<Bit>(x[j] & y[(i + n - j) % n]);
        }
    }
    return out;
}

BitVec matmul_spec(std::span<const Bit> x, std::span<const Bit> y, std::size_t q, std::size_t n) {
    if (x.size() != q * n || y.size() != n * n) {
        throw std::invalid_argument("matmul_spec: dimension mismatch");
    }
    BitVec out(q * n, 0);
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            Bit acc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                acc |= static_cast<Bit>(x[i * n + j] & y[j * n + k]);
            }
            out[i * n + k] = acc;
        }
    }
    return out;
}

OperatorSpec OperatorSpec::shift(std::size_t n, std::size_t q, Antichain a) {
    if (a.n != n) {
        throw std::invalid_argument("OperatorSpec::shift: codebook cardinality mismatch");
    }
    OperatorSpec s;
    s.kind_ = Kind::Shift;
    s.n_ = n;
    s.q_ = q;
    s.antichain_ = std::move(a);
    return s;
}

OperatorSpec OperatorSpec::perm_comparator(std::size_t n, std::size_t q, ComparatorNetwork net) {
    if (net.lanes != n) {
        throw std::invalid_argument("OperatorSpec::perm_comparator: lane count mismatch");
    }
    OperatorSpec s;
    s.kind_ = Kind::PermComparator;
    s.n_ = n;
    s.q_ = q;
    s.network_ = std::move(net);
    return s;
}

OperatorSpec OperatorSpec::perm_matrix(std::size_t n, std::size_t q) {
    OperatorSpec s;
    s.kind_ = Kind::PermMatrix;
    s.n_ = n;
    s.q_ = q;
    return s;
}

OperatorSpec OperatorSpec::convolution(std::size_t n) {
    OperatorSpec s;
    s.kind_ = Kind::Conv;
    s.n_ = n;
    s.q_ = 1;
    return s;
}

OperatorSpec OperatorSpec::matmul(std::size_t q, std::size_t n) {
    OperatorSpec s;
    s.kind_ = Kind::Matmul;
    s.n_ = n;
    s.q_ = q;
    return s;
}

std::size_t OperatorSpec::x_bits() const {
    return n_ * q_;
}

std::size_t OperatorSpec::y_bits() const {
    switch (kind_) {
    case Kind::Shift:
        return antichain_.m;
    case Kind::PermComparator:
        return 2 * network_.comparators.size();
    case Kind::PermMatrix:
    case Kind::Matmul:
        return n_ * n_;
    case Kind::Conv:
        return n_;
    }
    return 0;
}

std::size_t OperatorSpec::output_count() const {
    return n_ * q_;
}

std::uint64_t OperatorSpec::codebook_size() const {
    const std::uint64_t cap = std::uint64_t{1} << 63;
    switch (kind_) {
    case Kind::Shift:
        return n_;
    case Kind::PermComparator:
    case Kind::PermMatrix:
        return saturating_factorial(n_);
    case Kind::Conv:
        return n_ >= 63 ? cap : (std::uint64_t{1} << n_);
    case Kind::Matmul:
        return n_ * n_ >= 63 ? cap : (std::uint64_t{1} << (n_ * n_));
    }
    return 0;
}

namespace {

BitVec perm_matrix_word(std::size_t n, const Permutation& perm) {
    // y_{j,t} = 1 iff perm(t) = j, flattened row-major.
    BitVec y(n * n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        y[static_cast<std::size_t>(perm[t]) * n + t] = 1;
    }
    return y;
}

} // namespace

BitVec OperatorSpec::codebook_word(std::uint64_t idx) const {
    switch (kind_) {
    case Kind::Shift:
        return antichain_.codes.at(static_cast<std::size_t>(idx));
    case Kind::PermComparator:
        return comparator_encode(network_, nth_permutation(n_, idx)).code;
    case Kind::PermMatrix:
        return perm_matrix_word(n_, nth_permutation(n_, idx));
    case Kind::Conv:
        return bits_of(idx, n_);
    case Kind::Matmul:
        return bits_of(idx, n_ * n_);
    }
    throw std::logic_error("codebook_word: bad kind");
}

BitVec OperatorSpec::expected(std::span<const Bit> x, std::uint64_t idx) const {
    switch (kind_) {
    case Kind::Shift:
        return shift_spec(x, n_, q_, static_cast<std::size_t>(idx));
    case Kind::PermComparator:
    case Kind::PermMatrix:
        return perm_spec(x, n_, q_, nth_permutation(n_, idx));
    case Kind::Conv:
        return conv_spec(x, bits_of(idx, n_));
    case Kind::Matmul:
        return matmul_spec(x, bits_of(idx, n_ * n_), q_, n_);
    }
    throw std::logic_error("expected: bad kind");
}

std::uint64_t OperatorSpec::draw_codebook_index(std::mt19937_64& rng) const {
    switch (kind_) {
    case Kind::Shift:
        return rng() % n_;
    case Kind::PermComparator:
    case Kind::PermMatrix: {
        // Draw a permutation uniformly, then report its lexicographic index.
        const Permutation p = random_perm(n_, rng);
        std::uint64_t idx = 0;
        std::vector<std::uint32_t> avail;
        for (std::size_t i = 0; i < n_; ++i) {
            avail.push_back(static_cast<std::uint32_t>(i));
        }
        std::uint64_t fact = saturating_factorial(n_ - 1);
        for (std::size_t pos = 0; pos < n_; ++pos) {
            const auto it = std::find(avail.begin(), avail.end(), p[pos]);
            idx += static_cast<std::uint64_t>(it - avail.begin()) * fact;
            avail.erase(it);
            if (pos + 1 < n_) {
                fact /= (n_ - 1 - pos);
            }
        }
        return idx;
    }
    case Kind::Conv:
        return rng() & ((std::uint64_t{1} << n_) - 1);
    case Kind::Matmul: {
        // Only reached for n*n <= 63; wider domains are drawn bitwise by the caller.
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < n_ * n_; ++i) {
            bits |= (rng() & std::uint64_t{1}) << i;
        }
        return bits;
    }
    }
    throw std::logic_error("draw_codebook_index: bad kind");
}

OperatorSpec spec_from_encoding(const EncodingInfo& enc) {
    if (enc.family == "a0" || enc.family == "a1" || enc.family == "custom") {
        std::vector<BitVec> codes;
        codes.reserve(enc.codes.size());
        for (const std::string& s : enc.codes) {
            codes.push_back(bitvec_from_string(s));
        }
        Antichain a = antichain_from_codes(std::move(codes), enc.family);
        if (a.n != enc.n || (enc.m != 0 && a.m != enc.m)) {
            throw std::invalid_argument("spec_from_encoding: codes disagree with declared n/m");
        }
        return OperatorSpec::shift(enc.n, enc.q, std::move(a));
    }
    if (enc.family == "pi_comparator") {
        ComparatorNetwork net;
        net.lanes = enc.n;
        for (const auto& [u, v] : enc.network) {
            net.comparators.push_back({u, v});
        }
        return OperatorSpec::perm_comparator(enc.n, enc.q, std::move(net));
    }
    if (enc.family == "pi1_matrix") {
        return OperatorSpec::perm_matrix(enc.n, enc.q);
    }
    if (enc.family == "conv") {
        return OperatorSpec::convolution(enc.n);
    }
    if (enc.family == "matmul") {
        return OperatorSpec::matmul(enc.q, enc.n);
    }
    throw std::invalid_argument("spec_from_encoding: unknown family '" + enc.family + "'");
}

namespace {

unsigned resolve_threads(unsigned requested, std::uint64_t work_items) {
    unsigned t = requested;
    if (t == 0) {
        t = std::max(1u, std::thread::hardware_concurrency());
    }
    if (work_items < 4096) {
        return 1;
    }
    return static_cast<unsigned>(
        std::min<std::uint64_t>(t, std::max<std::uint64_t>(1, work_items / 2048)));
}

struct Failure {
    std::uint64_t case_idx;
    Counterexample cex;
};

void fill_x(BitVec& x, std::uint64_t bits) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = static_cast<Bit>((bits >> i) & 1u);
    }
}

} // namespace

VerifyReport verify(const Circuit& c, const OperatorSpec& spec, const VerifyOptions& opts) {
    if (c.input_count() != spec.input_count() || c.output_count() != spec.output_count()) {
        throw std::invalid_argument(
            "verify: arity mismatch (circuit " + std::to_string(c.input_count()) + "/" +
            std::to_string(c.output_count()) + " vs spec " + std::to_string(spec.input_count()) +
            "/" + std::to_string(spec.output_count()) + ")");
    }
    const std::size_t xbits = spec.x_bits();
    VerifyReport report;

    if (opts.mode == VerifyMode::Exhaustive) {
        if (xbits >= 63) {
            throw std::invalid_argument("verify: X space too large for EXHAUSTIVE mode");
        }
        const std::uint64_t xspace = std::uint64_t{1} << xbits;
        const std::uint64_t cb = spec.codebook_size();
        if (cb > (std::uint64_t{1} << 62) / xspace ||
            cb * xspace > opts.exhaustive_cap) {
            throw std::invalid_argument(
                "verify: exhaustive domain exceeds cap (" + std::to_string(opts.exhaustive_cap) +
                " evaluations); use RANDOM mode");
        }
        const std::uint64_t domain = cb * xspace;
        const unsigned threads = resolve_threads(opts.threads, domain);

        std::vector<std::optional<Failure>> worker_failure(threads);
        auto worker = [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
            BitVec x(xbits), assignment(spec.input_count());
            std::vector<Bit> values;
            BitVec y;
            std::uint64_t cached_k = ~std::uint64_t{0};
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                const std::uint64_t k = idx >> xbits;
                const std::uint64_t xi = idx & (xspace - 1);
                if (k != cached_k) {
                    y = spec.codebook_word(k);
                    cached_k = k;
                }
                fill_x(x, xi);
                std::copy(x.begin(), x.end(), assignment.begin());
                std::copy(y.begin(), y.end(), assignment.begin() + static_cast<std::ptrdiff_t>(xbits));
                c.evaluate_into(assignment, values);
                const BitVec got = c.output_values(values);
                const BitVec want = spec.expected(x, k);
                if (got != want && !worker_failure[w]) {
                    worker_failure[w] = Failure{idx, Counterexample{x, y, got, want}};
                }
            }
        };
        if (threads == 1) {
            worker(0, 0, domain);
        } else {
            std::vector<std::thread> pool;
            const std::uint64_t chunk = (domain + threads - 1) / threads;
            for (unsigned w = 0; w < threads; ++w) {
                const std::uint64_t begin = std::min<std::uint64_t>(domain, w * chunk);
                const std::uint64_t end = std::min<std::uint64_t>(domain, begin + chunk);
                pool.emplace_back(worker, w, begin, end);
            }
            for (auto& th : pool) {
                th.join();
            }
        }
        report.cases = domain;
        std::optional<Failure> first;
        for (const auto& f : worker_failure) {
            if (f && (!first || f->case_idx < first->case_idx)) {
                first = f;
            }
        }
        report.pass = !first.has_value();
        if (first) {
            report.counterexample = first->cex;
        }
        return report;
    }

    // RANDOM: pre-draw every trial sequentially, then evaluate.
    std::mt19937_64 rng(opts.seed);
    struct Trial {
        BitVec x;
        BitVec y;
        BitVec want;
    };
    std::vector<Trial> trials;
    trials.reserve(opts.trials);
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        Trial trial;
        trial.x.resize(xbits);
        for (std::size_t i = 0; i < xbits; ++i) {
            trial.x[i] = static_cast<Bit>(rng() & 1u);
        }
        const bool wide_total = (spec.kind() == OperatorSpec::Kind::Matmul ||
                                 spec.kind() == OperatorSpec::Kind::Conv) &&
                                spec.y_bits() > 63;
        if (wide_total) {
            trial.y.resize(spec.y_bits());
            for (std::size_t i = 0; i < trial.y.size(); ++i) {
                trial.y[i] = static_cast<Bit>(rng() & 1u);
            }
            trial.want = spec.kind() == OperatorSpec::Kind::Conv
                             ? conv_spec(trial.x, trial.y)
                             : matmul_spec(trial.x, trial.y, spec.q(), spec.n());
        } else {
            const std::uint64_t k = spec.draw_codebook_index(rng);
            trial.y = spec.codebook_word(k);
            trial.want = spec.expected(trial.x, k);
        }
        trials.push_back(std::move(trial));
    }
    BitVec assignment(spec.input_count());
    std::vector<Bit> values;
    std::optional<Failure> first;
    for (std::uint64_t t = 0; t < trials.size(); ++t) {
        const Trial& trial = trials[t];
        std::copy(trial.x.begin(), trial.x.end(), assignment.begin());
        std::copy(trial.y.begin(), trial.y.end(),
                  assignment.begin() + static_cast<std::ptrdiff_t>(xbits));
        c.evaluate_into(assignment, values);
        const BitVec got = c.output_values(values);
        if (got != trial.want && !first) {
            first = Failure{t, Counterexample{trial.x, trial.y, got, trial.want}};
        }
    }
    report.cases = opts.trials;
    report.seed = opts.seed;
    report.pass = !first.has_value();
    if (first) {
        report.counterexample = first->cex;
    }
    return report;
}

CompletionReport check_completion(const Circuit& c, std::uint64_t max_evals) {
    if (c.input_count() % 2 != 0 || c.output_count() != c.input_count() / 2) {
        throw std::invalid_argument(
            "check_completion: expected a circuit with n + n inputs and n outputs");
    }
    const std::size_t n = c.output_count();
    if (n >= 63 || (std::uint64_t{n + 1} << n) > max_evals) {
        throw std::invalid_argument("check_completion: n too large for the exhaustive check; "
                                    "use RANDOM verification against the convolution instead");
    }
    const std::uint64_t xspace = std::uint64_t{1} << n;
    CompletionReport report;
    report.cases = (n + 1) * xspace;

    BitVec x(n), y(n, 0), assignment(2 * n);
    std::vector<Bit> values;

    // Property (2): at Y = 0 each output is identically 0 or exactly the full
    // conjunction (1 only on the all-ones X).
    std::vector<bool> always_zero(n, true), is_full_and(n, true);
    std::vector<std::optional<std::uint64_t>> offending(n);
    for (std::uint64_t xi = 0; xi < xspace; ++xi) {
        fill_x(x, xi);
        std::copy(x.begin(), x.end(), assignment.begin());
        std::fill(assignment.begin() + static_cast<std::ptrdiff_t>(n), assignment.end(), 0);
        c.evaluate_into(assignment, values);
        const BitVec got = c.output_values(values);
        const Bit full = (xi == xspace - 1) ? 1 : 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (got[j] != 0) {
                always_zero[j] = false;
            }
            if (got[j] != full) {
                is_full_and[j] = false;
                if (!offending[j]) {
                    offending[j] = xi;
                }
            }
        }
    }
    bool g_ok = true;
    report.realized_g.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        if (always_zero[j]) {
            report.realized_g[j] = 0;
        } else if (is_full_and[j]) {
            report.realized_g[j] = 1;
        } else {
            g_ok = false;
            report.failures.push_back(
                "output " + std::to_string(j) +
                " at Y=0 is neither 0 nor the full conjunction (differs at X index " +
                std::to_string(offending[j].value_or(0)) + ")");
        }
    }
    if (!g_ok) {
        report.realized_g.clear();
    }

    // Property (1): weight-1 Y values coincide with the convolution.
    for (std::size_t k = 0; k < n && !report.counterexample; ++k) {
        std::fill(y.begin(), y.end(), 0);
        y[k] = 1;
        for (std::uint64_t xi = 0; xi < xspace; ++xi) {
            fill_x(x, xi);
            std::copy(x.begin(), x.end(), assignment.begin());
            std::copy(y.begin(), y.end(), assignment.begin() + static_cast<std::ptrdiff_t>(n));
            c.evaluate_into(assignment, values);
            const BitVec got = c.output_values(values);
            const BitVec want = conv_spec(x, y);
            if (got != want) {
                report.counterexample = Counterexample{x, y, got, want};
                report.failures.push_back("|Y|=1 disagreement with the convolution at k=" +
                                          std::to_string(k));
                break;
            }
        }
    }
    report.pass = report.failures.empty();
    return report;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json counterexample_json(const Counterexample& cex) {
    ordered_json j;
    j["x"] = to_bitstring(cex.x);
    j["y"] = to_bitstring(cex.y);
    j["output"] = to_bitstring(cex.output);
    j["expected"] = to_bitstring(cex.expected);
    return j;
}

} // namespace

std::string verify_report_to_json(const VerifyReport& r) {
    ordered_json j;
    j["status"] = r.pass ? "pass" : "fail";
    j["cases"] = r.cases;
    if (r.counterexample) {
        j["counterexample"] = counterexample_json(*r.counterexample);
    }
    if (r.seed) {
        j["seed"] = *r.seed;
    }
    return j.dump();
}

std::string completion_report_to_json(const CompletionReport& r) {
    ordered_json j;
    j["status"] = r.pass ? "pass" : "fail";
    j["cases"] = r.cases;
    if (r.counterexample) {
        j["counterexample"] = counterexample_json(*r.counterexample);
    }
    if (!r.realized_g.empty() || r.pass) {
        j["realized_g"] = to_bitstring(r.realized_g);
    }
    if (!r.failures.empty()) {
        j["failures"] = r.failures;
    }
    return j.dump();
}

} // namespace monocirc
