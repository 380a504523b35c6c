#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qbound/graph.hpp"

namespace qbound {

/// |Γ(u) ∩ Γ(v)| for distinct vertices u, v.
int common_neighbors(const Graph& g, int u, int v);

/// Maximum common-neighborhood statistics. max_adjacent_common over edges is
/// the book number: the graph is B_{k+1}-free iff it stays <= k.
/// max_nonadjacent_common is absent when no nonadjacent pair exists (K_n).
/// tsubset_max[t] is the largest common neighborhood over t-vertex subsets.
struct ForbiddenProfile {
    int max_adjacent_common = 0;
    std::optional<int> max_nonadjacent_common;
    std::map<int, int> tsubset_max;
};

inline constexpr int kSubsetScanMaxT = 4;
inline constexpr int kSubsetScanMaxOrder = 24;

ForbiddenProfile profile(const Graph& g, const std::vector<int>& ts = {});

/// No complete bipartite K_{s,t} subgraph (classes disjoint, not necessarily
/// induced). Requires s >= t >= 2; detection scans t-subsets, which covers
/// both class orientations when s >= t.
bool is_kst_free(const Graph& g, int s, int t);

/// No B_pages subgraph, i.e. no edge with `pages` common neighbors.
bool is_book_free(const Graph& g, int pages);

struct SrgParams {
    int n;
    int k_reg;
    int a;
    int c;
};

/// Exact combinatorial check of the strongly-regular definition: k-regular,
/// every adjacent pair shares exactly a neighbors, every nonadjacent pair
/// exactly c >= 1, and both pair kinds exist. Absent otherwise.
std::optional<SrgParams> srg_params(const Graph& g);

} // namespace qbound
