#pragma once

/// @file sorting_network.hpp
/// @brief Comparator networks and Batcher odd-even mergesort construction.

#include "monocirc/common.hpp"

#include <cstdint>

namespace monocirc {

struct Comparator {
    std::uint32_t low = 0;  // lane receiving the min
    std::uint32_t high = 0; // lane receiving the max
};

struct ComparatorNetwork {
    std::size_t lanes = 0;
    std::vector<Comparator> comparators;
};

/// Odd-even mergesort for any n >= 1. Built on 2^ceil(log2 n) lanes with
/// comparators touching lanes >= n dropped (virtual lanes at the tail hold
/// +infinity and never interact with real ones).
ComparatorNetwork batcher_network(std::size_t n);

/// Compare-exchange pass over a full set of lane values.
template <typename T>
void apply_network(const ComparatorNetwork& net, std::span<T> lanes) {
    for (const Comparator& c : net.comparators) {
        if (lanes[c.low] > lanes[c.high]) {
            std::swap(lanes[c.low], lanes[c.high]);
        }
    }
}

/// 0-1 principle check: sorts every binary input ascending. Exhaustive, so
/// guarded to lanes <= 22.
bool sorts_all_binary_inputs(const ComparatorNetwork& net);

} // namespace monocirc
