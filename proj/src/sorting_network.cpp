#include "monocirc/sorting_network.hpp"

#include <bit>
#include <stdexcept>

namespace monocirc {

ComparatorNetwork batcher_network(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("batcher_network: n must be >= 1");
    }
    ComparatorNetwork net;
    net.lanes = n;
    if (n == 1) {
        return net;
    }
    const std::size_t full = std::bit_ceil(n);
    for (std::size_t p = full >> 1; p > 0; p >>= 1) {
        std::size_t q = full;
        std::size_t r = 0;
        std::size_t d = p;
        while (d > 0) {
            for (std::size_t i = 0; i + d < full; ++i) {
                if ((i & p) == r && i + d < n) {
                    net.comparators.push_back({static_cast<std::uint32_t>(i),
                                               static_cast<std::uint32_t>(i + d)});
                }
            }
            q >>= 1;
            d = q - p;
            r = p;
        }
    }
    return net;
}

bool sorts_all_binary_inputs(const ComparatorNetwork& net) {
    if (net.lanes > 22) {
        throw std::invalid_argument("sorts_all_binary_inputs: exhaustive check capped at 22 lanes");
    }
    const std::size_t n = net.lanes;
    std::vector<int> lanes(n);
    for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
        for (std::size_t i = 0; i < n; ++i) {
            lanes[i] = static_cast<int>((v >> i) & 1u);
        }
        apply_network<int>(net, lanes);
        for (std::size_t i = 1; i < n; ++i) {
            if (lanes[i - 1] > lanes[i]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace monocirc
