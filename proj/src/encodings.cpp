#include "monocirc/encodings.hpp"

#include <map>
#include <stdexcept>

namespace monocirc {

Antichain antichain_a0(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("antichain_a0: n must be >= 1");
    }
    const std::size_t h = bit_length(n); // floor(log2 n) + 1
    Antichain a;
    a.n = n;
    a.m = 2 * h;
    a.family = "a0";
    a.codes.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        BitVec code(a.m);
        for (std::size_t i = 0; i < h; ++i) {
            const Bit bit = static_cast<Bit>((k >> i) & 1u);
            code[i] = bit;
            code[h + i] = static_cast<Bit>(1u - bit);
        }
        a.codes.push_back(std::move(code));
    }
    return a;
}

Antichain antichain_a1(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("antichain_a1: n must be >= 1");
    }
    Antichain a;
    a.n = n;
    a.m = n;
    a.family = "a1";
    a.codes.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        BitVec code(n, 0);
        code[k] = 1;
        a.codes.push_back(std::move(code));
    }
    return a;
}

Antichain antichain_from_codes(std::vector<BitVec> codes, std::string family) {
    if (codes.empty() || codes[0].empty()) {
        throw std::invalid_argument("antichain_from_codes: need n >= 1 codes of length m >= 1");
    }
    if (!is_antichain(codes)) {
        throw std::invalid_argument("antichain_from_codes: codes are not pairwise incomparable");
    }
    Antichain a;
    a.n = codes.size();
    a.m = codes[0].size();
    a.codes = std::move(codes);
    a.family = std::move(family);
    return a;
}

bool is_antichain(std::span<const BitVec> codes) {
    for (std::size_t i = 1; i < codes.size(); ++i) {
        if (codes[i].size() != codes[0].size()) {
            throw std::invalid_argument("is_antichain: ragged word lengths");
        }
    }
    for (std::size_t i = 0; i < codes.size(); ++i) {
        for (std::size_t j = i + 1; j < codes.size(); ++j) {
            if (bitvec_leq(codes[i], codes[j]) || bitvec_leq(codes[j], codes[i])) {
                return false;
            }
        }
    }
    return true;
}

BitVec doubling(const BitVec& v) {
    BitVec d;
    d.reserve(2 * v.size());
    d.insert(d.end(), v.begin(), v.end());
    for (Bit b : v) {
        d.push_back(static_cast<Bit>(1u - b));
    }
    return d;
}

const BitVec& encode_shift(const Antichain& a, std::size_t k) {
    if (k >= a.n) {
        throw std::out_of_range("encode_shift: k = " + std::to_string(k) +
                                " out of range for n = " + std::to_string(a.n));
    }
    return a.codes[k];
}

namespace {

// Shared-product scheme for the a0 family. Monomial k is the AND of one
// literal per bit position (true half if bit set, complement half otherwise).
// Products over a bit window [lo, hi) are built recursively by splitting the
// window in half and combining only the value patterns that occur among
// k < n; total gate count stays <= 2n.
class A0MonomialEmitter {
  public:
    A0MonomialEmitter(CircuitBuilder& b, std::size_t n, std::size_t h,
                      std::span<const NodeRef> y)
        : b_(b), n_(n), h_(h), y_(y) {}

    std::vector<NodeRef> emit() {
        const std::map<std::uint32_t, NodeRef> top = window(0, h_);
        std::vector<NodeRef> out;
        out.reserve(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            out.push_back(top.at(static_cast<std::uint32_t>(k)));
        }
        return out;
    }

  private:
    NodeRef literal(std::size_t pos, std::uint32_t bit) const {
        return bit ? y_[pos] : y_[h_ + pos];
    }

    std::map<std::uint32_t, NodeRef> window(std::size_t lo, std::size_t hi) {
        const std::size_t width = hi - lo;
        const std::uint32_t mask = (width >= 32) ? 0xFFFFFFFFu : ((1u << width) - 1u);
        std::map<std::uint32_t, NodeRef> result;
        if (width == 1) {
            for (std::size_t k = 0; k < n_; ++k) {
                const std::uint32_t v = static_cast<std::uint32_t>(k >> lo) & 1u;
                result.emplace(v, literal(lo, v));
            }
            return result;
        }
        const std::size_t mid = lo + width / 2;
        const std::map<std::uint32_t, NodeRef> low = window(lo, mid);
        const std::map<std::uint32_t, NodeRef> high = window(mid, hi);
        const std::size_t low_width = mid - lo;
        const std::uint32_t low_mask = (1u << low_width) - 1u;
        for (std::size_t k = 0; k < n_; ++k) {
            const std::uint32_t v = static_cast<std::uint32_t>(k >> lo) & mask;
            if (result.contains(v)) {
                continue;
            }
            result.emplace(v, b_.add_and(low.at(v & low_mask), high.at(v >> low_width)));
        }
        return result;
    }

    CircuitBuilder& b_;
    std::size_t n_;
    std::size_t h_;
    std::span<const NodeRef> y_;
};

} // namespace

std::vector<NodeRef> emit_monomials(CircuitBuilder& b, const Antichain& a,
                                    std::span<const NodeRef> y) {
    if (y.size() != a.m) {
        throw std::invalid_argument("emit_monomials: expected " + std::to_string(a.m) +
                                    " y wires, got " + std::to_string(y.size()));
    }
    if (a.family == "a0") {
        return A0MonomialEmitter(b, a.n, a.m / 2, y).emit();
    }
    std::vector<NodeRef> out;
    out.reserve(a.n);
    for (std::size_t k = 0; k < a.n; ++k) {
        std::vector<NodeRef> lits;
        for (std::size_t i = 0; i < a.m; ++i) {
            if (a.codes[k][i]) {
                lits.push_back(y[i]);
            }
        }
        if (lits.empty()) {
            throw std::invalid_argument(
                "emit_monomials: code " + std::to_string(k) +
                " has weight 0; a constant monomial is not representable over {OR, AND}");
        }
        out.push_back(b.add_tree(GateKind::And, lits));
    }
    return out;
}

MonomialSystem monomial_circuit(const Antichain& a) {
    CircuitBuilder b;
    std::vector<NodeRef> y;
    y.reserve(a.m);
    for (std::size_t i = 0; i < a.m; ++i) {
        y.push_back(b.add_input("y" + std::to_string(i)));
    }
    const std::vector<NodeRef> monomials = emit_monomials(b, a, y);
    for (NodeRef r : monomials) {
        b.add_output(r);
    }
    return MonomialSystem{b.build("monomials family=" + a.family + " n=" + std::to_string(a.n) +
                                  " m=" + std::to_string(a.m))};
}

} // namespace monocirc
