#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qbound/graph.hpp"

namespace qbound {

enum class Family {
    complete,
    complete_bipartite,
    path,
    cycle,
    book,
    friendship,
    petersen,
    rook,
    triangular,
};

/// A named family instance: the id plus up to two integer parameters
/// (complete_bipartite takes two, petersen takes none, the rest take one).
struct GraphFamily {
    Family id;
    int a = 0;
    int b = 0;
};

Graph make_family(const GraphFamily& f);

Graph complete(int n);
Graph complete_bipartite(int s, int t);
Graph path(int n);
Graph cycle(int n);

/// B_k: two adjacent hub vertices plus k page vertices adjacent to both hubs
/// (k triangles sharing the hub edge, order k+2). Requires k >= 1.
Graph book(int k);

/// F_n: floor(n/2) triangles sharing vertex 0 for odd n; for even n the odd
/// friendship graph of order n-1 with one pendant edge on the shared vertex.
/// Requires n >= 3.
Graph friendship(int n);

Graph petersen();

/// m x m rook's graph: grid cells, adjacent iff same row or same column.
Graph rook(int m);

/// Triangular graph T(m): line graph of K_m (2-subsets of [m], adjacent iff
/// they share exactly one element). Requires m >= 2.
Graph triangular(int m);

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Parameter count a family expects (0, 1 or 2).
int family_arity(Family f);

} // namespace qbound
