#include "monocirc/baselines.hpp"

#include <stdexcept>

namespace monocirc {

Circuit gen_convolution(std::size_t n, const GenOptions& opts) {
    if (n < 1) {
        throw std::invalid_argument("gen_convolution: n must be >= 1");
    }
    CircuitBuilder b(opts.dedup);
    b.reserve(2 * n, 2 * n * n - n);
    std::vector<NodeRef> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = b.add_input("x" + std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = b.add_input("y" + std::to_string(i));
    }
    std::vector<NodeRef> products(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            products[j] = b.add_and(x[j], y[(i + n - j) % n]);
        }
        b.add_output(b.add_chain(GateKind::Or, products));
    }
    return b.build("conv n=" + std::to_string(n) +
                   "; inputs x0..x_{n-1} then y0..y_{n-1}; output i = OR_j x_j y_{(i-j) mod n}");
}

Circuit gen_matmul(std::size_t q, std::size_t n, const GenOptions& opts) {
    if (q < 1 || n < 1) {
        throw std::invalid_argument("gen_matmul: require q >= 1 and n >= 1");
    }
    CircuitBuilder b(opts.dedup);
    b.reserve(q * n + n * n, q * n * (2 * n - 1));
    std::vector<NodeRef> x(q * n), y(n * n);
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            x[i * n + j] = b.add_input("x" + std::to_string(i) + "_" + std::to_string(j));
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            y[j * n + k] = b.add_input("y" + std::to_string(j) + "_" + std::to_string(k));
        }
    }
    std::vector<NodeRef> products(n);
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                products[j] = b.add_and(x[i * n + j], y[j * n + k]);
            }
            b.add_output(b.add_chain(GateKind::Or, products));
        }
    }
    return b.build("matmul q=" + std::to_string(q) + " n=" + std::to_string(n) +
                   "; inputs X row-major (x_{i,j} at i*n+j) then Y row-major (y_{j,k} at j*n+k); "
                   "output z_{i,k} = OR_j x_{i,j} y_{j,k} at i*n+k");
}

} // namespace monocirc
