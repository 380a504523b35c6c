#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbound/graph.hpp"

namespace qbound {

/// Constraint set for the q-maximization search. book_cap k keeps adjacent
/// pairs at <= k common neighbors (B_{k+1}-free); pair_cap l keeps every pair
/// at <= l (K_{2,l+1}-free); st_free forbids that complete bipartite subgraph.
struct SearchConfig {
    int n = 0;
    std::optional<int> book_cap;
    std::optional<int> pair_cap;
    std::optional<std::pair<int, int>> st_free;
    std::uint64_t budget = 20000; // max q evaluations across the whole run
    int restarts = 8;
    std::uint64_t seed = 1;
    double power_tol = 1e-10;
};

struct SearchResult {
    Graph best;
    std::string best_graph6;
    double best_q = 0.0;
    std::uint64_t evaluations = 0;
    std::vector<std::pair<std::string, double>> bound_gaps; // formula -> bound - best_q
};

/// Hill climbing by single edge toggles from random spanning-tree starts.
/// A toggle is accepted iff the graph stays connected, satisfies every
/// constraint, and strictly increases the Rayleigh q value; sweeps visit the
/// vertex pairs in a fresh seeded random permutation, first improvement wins.
/// Restarts on local optima; fully determined by the seed. n <= 24.
SearchResult extremal_search(const SearchConfig& cfg);

} // namespace qbound
