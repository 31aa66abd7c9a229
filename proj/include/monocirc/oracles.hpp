#pragma once

/// @file oracles.hpp
/// @brief Executable brute-force semantics for every operator, equivalence
///        checking against them, and the partial-operator completion checks.

#include "monocirc/circuit.hpp"
#include "monocirc/encodings.hpp"
#include "monocirc/netlist_json.hpp"
#include "monocirc/sorting_network.hpp"

#include <optional>

namespace monocirc {

/// Cyclic right shift: output position (i + k) mod n carries input position i.
/// x is position-major (q bits per position).
BitVec shift_spec(std::span<const Bit> x, std::size_t n, std::size_t q, std::size_t k);

/// Output position t carries x_{perm[t]} (position-major, q per position).
BitVec perm_spec(std::span<const Bit> x, std::size_t n, std::size_t q, const Permutation& perm);

/// c_i = OR over j of x_j AND y_{(i-j) mod n}.
BitVec conv_spec(std::span<const Bit> x, std::span<const Bit> y);

/// z_{i,k} = OR over j of x_{i,j} AND y_{j,k}; x is q x n row-major,
/// y is n x n row-major, result q x n row-major.
BitVec matmul_spec(std::span<const Bit> x, std::span<const Bit> y, std::size_t q, std::size_t n);

/// A (partial) operator together with its admissible Y domain. For the
/// partial operators (shift, permutation) Y ranges over the codebook; for the
/// total baselines (conv, matmul) it ranges over the full cube.
class OperatorSpec {
  public:
    enum class Kind { Shift, PermComparator, PermMatrix, Conv, Matmul };

    static OperatorSpec shift(std::size_t n, std::size_t q, Antichain a);
    static OperatorSpec perm_comparator(std::size_t n, std::size_t q, ComparatorNetwork net);
    static OperatorSpec perm_matrix(std::size_t n, std::size_t q);
    static OperatorSpec convolution(std::size_t n);
    static OperatorSpec matmul(std::size_t q, std::size_t n);

    Kind kind() const { return kind_; }
    std::size_t n() const { return n_; }
    std::size_t q() const { return q_; }
    const Antichain& antichain() const { return antichain_; }
    const ComparatorNetwork& network() const { return network_; }

    std::size_t x_bits() const;
    std::size_t y_bits() const;
    std::size_t input_count() const { return x_bits() + y_bits(); }
    std::size_t output_count() const;

    /// Number of admissible Y values, saturated at 2^63.
    std::uint64_t codebook_size() const;

    /// Y word for codebook index (permutations enumerated lexicographically).
    BitVec codebook_word(std::uint64_t idx) const;

    /// Expected outputs for the given X and codebook index.
    BitVec expected(std::span<const Bit> x, std::uint64_t idx) const;

    /// Random codebook index / Y draw for RANDOM mode.
    std::uint64_t draw_codebook_index(std::mt19937_64& rng) const;

  private:
    Kind kind_ = Kind::Shift;
    std::size_t n_ = 0;
    std::size_t q_ = 1;
    Antichain antichain_;
    ComparatorNetwork network_;
};

/// Reconstructs the operator spec declared by a netlist's encoding field.
OperatorSpec spec_from_encoding(const EncodingInfo& enc);

enum class VerifyMode { Exhaustive, Random };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Exhaustive;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t exhaustive_cap = std::uint64_t{1} << 24;
    unsigned threads = 0; // 0 = pick from hardware
};

struct Counterexample {
    BitVec x;
    BitVec y;
    BitVec output;
    BitVec expected;
};

struct VerifyReport {
    bool pass = false;
    std::uint64_t cases = 0;
    std::optional<Counterexample> counterexample;
    std::optional<std::uint64_t> seed;
};

/// Exhaustive mode enumerates codebook x X-cube (codebook-major) and always
/// performs exactly |domain| evaluations; the reported counterexample is the
/// one with the smallest case index regardless of worker count. Random mode
/// pre-draws all trials from the seed, so reports are byte-identical runs.
VerifyReport verify(const Circuit& c, const OperatorSpec& spec, const VerifyOptions& opts = {});

struct CompletionReport {
    bool pass = false;
    std::uint64_t cases = 0;
    std::optional<Counterexample> counterexample;
    BitVec realized_g;
    std::vector<std::string> failures;
};

/// Completion properties of a circuit claiming the one-hot shift on n inputs
/// (2n inputs, n outputs): (1) on every weight-1 Y it agrees with the
/// convolution; (2) at Y = 0 every output is identically 0 or identically
/// the full conjunction of the x variables (the realized g vector).
CompletionReport check_completion(const Circuit& c,
                                  std::uint64_t max_evals = std::uint64_t{1} << 24);

std::string verify_report_to_json(const VerifyReport& r);
std::string completion_report_to_json(const CompletionReport& r);

} // namespace monocirc
