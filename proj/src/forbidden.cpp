#include "qbound/forbidden.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace qbound {

int common_neighbors(const Graph& g, int u, int v) { return g.common_neighbor_count(u, v); }

namespace {

void check_subset_scan(const Graph& g, int t) {
    if (t < 2 || t > g.order())
        throw std::invalid_argument("t-subset scan needs 2 <= t <= n, got t=" + std::to_string(t));
    if (t > kSubsetScanMaxT)
        throw std::invalid_argument("unsupported: t-subset scan capped at t <= " +
                                    std::to_string(kSubsetScanMaxT));
    if (t > 2 && g.order() > kSubsetScanMaxOrder)
        throw std::invalid_argument("unsupported: t-subset scan capped at n <= " +
                                    std::to_string(kSubsetScanMaxOrder));
}

/// Max common-neighborhood size over t-subsets; early exit once `stop_at`
/// is reached (pass n+1 to scan everything).
int tsubset_common_max(const Graph& g, int t, int stop_at) {
    const int n = g.order();
    const int words = g.words_per_row();
    std::vector<int> pick(t);
    std::vector<std::vector<std::uint64_t>> inter(t, std::vector<std::uint64_t>(words));
    int best = 0;

    // Depth-first over increasing vertex tuples, intersecting rows as we go.
    int depth = 0;
    pick[0] = -1;
    while (depth >= 0) {
        ++pick[depth];
        if (pick[depth] > n - (t - depth)) {
            --depth;
            continue;
        }
        const int v = pick[depth];
        for (int w = 0; w < words; ++w)
            inter[depth][w] = (depth == 0 ? g.row_word(v, w) : inter[depth - 1][w] & g.row_word(v, w));
        if (depth + 1 == t) {
            int c = 0;
            for (int w = 0; w < words; ++w) c += std::popcount(inter[depth][w]);
            if (c > best) {
                best = c;
                if (best >= stop_at) return best;
            }
        } else {
            ++depth;
            pick[depth] = pick[depth - 1];
        }
    }
    return best;
}

} // namespace

ForbiddenProfile profile(const Graph& g, const std::vector<int>& ts) {
    const int n = g.order();
    ForbiddenProfile p;
    bool saw_nonadjacent = false;
    int nonadj_max = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int c = g.common_neighbor_count(u, v);
            if (g.has_edge(u, v)) {
                if (c > p.max_adjacent_common) p.max_adjacent_common = c;
            } else {
                saw_nonadjacent = true;
                if (c > nonadj_max) nonadj_max = c;
            }
        }
    if (saw_nonadjacent) p.max_nonadjacent_common = nonadj_max;
    for (int t : ts) {
        check_subset_scan(g, t);
        p.tsubset_max[t] = tsubset_common_max(g, t, n + 1);
    }
    return p;
}

bool is_kst_free(const Graph& g, int s, int t) {
    if (t < 2 || s < t)
        throw std::invalid_argument("is_kst_free needs s >= t >= 2, got s=" + std::to_string(s) +
                                    " t=" + std::to_string(t));
    if (g.order() < t) return true;
    check_subset_scan(g, t);
    return tsubset_common_max(g, t, s) < s;
}

bool is_book_free(const Graph& g, int pages) {
    if (pages < 1) throw std::invalid_argument("is_book_free needs pages >= 1");
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v) && g.common_neighbor_count(u, v) >= pages) return false;
    return true;
}

std::optional<SrgParams> srg_params(const Graph& g) {
    const int n = g.order();
    if (n < 2) return std::nullopt;
    const int k = g.degree(0);
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != k) return std::nullopt;

    std::optional<int> a, c;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int common = g.common_neighbor_count(u, v);
            auto& slot = g.has_edge(u, v) ? a : c;
            if (!slot)
                slot = common;
            else if (*slot != common)
                return std::nullopt;
        }
    if (!a || !c || *c < 1) return std::nullopt;
    return SrgParams{n, k, *a, *c};
}

} // namespace qbound
