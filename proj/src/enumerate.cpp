#include "qbound/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace qbound {

int pair_count(int n) { return n * (n - 1) / 2; }

namespace {
void check_cap(int n) {
    if (n < 1 || n > kEnumerationCap)
        throw std::invalid_argument("labeled enumeration supports 1 <= n <= " +
                                    std::to_string(kEnumerationCap) + ", got " + std::to_string(n));
}
} // namespace

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

std::uint64_t edge_mask_of(const Graph& g) {
    const int n = g.order();
    if (pair_count(n) > 64) throw std::invalid_argument("edge mask needs n(n-1)/2 <= 64");
    std::uint64_t mask = 0;
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) mask |= std::uint64_t{1} << bit;
    return mask;
}

std::uint64_t labeled_graph_count(int n) {
    check_cap(n);
    return std::uint64_t{1} << pair_count(n);
}

void for_each_labeled_graph(int n, bool connected_only, std::uint64_t mask_begin,
                            std::uint64_t mask_end,
                            const std::function<void(const Graph&, std::uint64_t)>& visit) {
    check_cap(n);
    const std::uint64_t total = labeled_graph_count(n);
    if (mask_end > total || mask_begin > mask_end)
        throw std::invalid_argument("enumeration mask range out of bounds");
    for (std::uint64_t mask = mask_begin; mask < mask_end; ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (connected_only && !is_connected(g)) continue;
        visit(g, mask);
    }
}

void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<void(const Graph&, std::uint64_t)>& visit) {
    for_each_labeled_graph(n, connected_only, 0, labeled_graph_count(n), visit);
}

} // namespace qbound
