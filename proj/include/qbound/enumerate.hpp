#pragma once

#include <cstdint>
#include <functional>

#include "qbound/graph.hpp"

namespace qbound {

/// Upper-triangle pair count n(n-1)/2; the edge-mask bit width.
int pair_count(int n);

inline constexpr int kEnumerationCap = 8;

/// Graph whose edge set is the mask bits read in graph6 column order
/// (0,1),(0,2),(1,2),(0,3),...; bit k of the mask is the k-th pair.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Edge mask of a graph in the same pair order (requires n <= kEnumerationCap... n <= 11 fits 64 bits).
std::uint64_t edge_mask_of(const Graph& g);

/// Visits every labeled simple graph of order n with edge mask in
/// [mask_begin, mask_end), in increasing mask order, filtered by
/// connectivity when requested. The range form is the partition point for
/// concurrent drivers.
void for_each_labeled_graph(int n, bool connected_only, std::uint64_t mask_begin,
                            std::uint64_t mask_end,
                            const std::function<void(const Graph&, std::uint64_t)>& visit);

/// Full-range convenience overload (all 2^(n(n-1)/2) masks). n capped at 8.
void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<void(const Graph&, std::uint64_t)>& visit);

/// Number of masks, 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);

} // namespace qbound
