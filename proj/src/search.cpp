#include "qbound/search.hpp"

#include <random>
#include <stdexcept>

#include "qbound/bounds.hpp"
#include "qbound/forbidden.hpp"
#include "qbound/graph6.hpp"
#include "qbound/spectra.hpp"

namespace qbound {

namespace {

// Hand-rolled sampling keeps runs reproducible across standard libraries
// (uniform_int_distribution and std::shuffle are implementation-defined).
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

void fisher_yates(std::vector<int>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rand_below(rng, i)]);
}

void validate(const SearchConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 24)
        throw std::invalid_argument("extremal_search supports 1 <= n <= 24");
    if (cfg.budget < 1) throw std::invalid_argument("extremal_search needs budget >= 1");
    if (cfg.restarts < 1) throw std::invalid_argument("extremal_search needs restarts >= 1");
    if (cfg.book_cap && *cfg.book_cap < 0)
        throw std::invalid_argument("book cap must be >= 0");
    if (cfg.pair_cap && *cfg.pair_cap < 0)
        throw std::invalid_argument("pair cap must be >= 0");
    if (cfg.book_cap && cfg.pair_cap && *cfg.book_cap > *cfg.pair_cap)
        throw std::invalid_argument("inconsistent constraints: need k <= l");
    if (cfg.st_free && !(cfg.st_free->first >= cfg.st_free->second && cfg.st_free->second >= 2))
        throw std::invalid_argument("st constraint needs s >= t >= 2");
}

bool satisfies(const Graph& g, const SearchConfig& cfg) {
    if (cfg.book_cap || cfg.pair_cap) {
        const int n = g.order();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const int c = g.common_neighbor_count(u, v);
                if (cfg.pair_cap && c > *cfg.pair_cap) return false;
                if (cfg.book_cap && g.has_edge(u, v) && c > *cfg.book_cap) return false;
            }
    }
    if (cfg.st_free && !is_kst_free(g, cfg.st_free->first, cfg.st_free->second)) return false;
    return true;
}

Graph random_spanning_tree(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(v))), v);
    return g;
}

} // namespace

SearchResult extremal_search(const SearchConfig& cfg) {
    validate(cfg);
    const int n = cfg.n;
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);

    SearchResult result;
    bool have_best = false;
    bool found_feasible_start = false;
    std::uint64_t evals = 0;

    for (int restart = 0; restart < cfg.restarts && evals < cfg.budget; ++restart) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(restart)};
        std::mt19937_64 rng(seq);

        Graph g = random_spanning_tree(n, rng);
        if (!satisfies(g, cfg)) continue;
        found_feasible_start = true;
        double q_cur = q_radius(g, cfg.power_tol).value;
        ++evals;

        std::vector<int> order(pairs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

        bool improved = true;
        while (improved && evals < cfg.budget) {
            improved = false;
            fisher_yates(order, rng);
            for (int idx : order) {
                const auto [u, v] = pairs[idx];
                g.toggle_edge(u, v);
                if (is_connected(g) && satisfies(g, cfg)) {
                    if (evals >= cfg.budget) {
                        g.toggle_edge(u, v);
                        break;
                    }
                    const double q_new = q_radius(g, cfg.power_tol).value;
                    ++evals;
                    if (q_new > q_cur + 1e-12) {
                        q_cur = q_new;
                        improved = true;
                        break; // first improvement; fresh permutation next sweep
                    }
                }
                g.toggle_edge(u, v);
            }
        }

        const std::string g6 = to_graph6(g);
        if (!have_best || q_cur > result.best_q ||
            (q_cur == result.best_q && g6 < result.best_graph6)) {
            result.best = g;
            result.best_graph6 = g6;
            result.best_q = q_cur;
            have_best = true;
        }
    }

    if (!found_feasible_start)
        throw std::runtime_error("extremal_search: no feasible start found within budget");
    result.evaluations = evals;

    // Gaps against the q bounds the constraint set makes applicable.
    const Graph& best = result.best;
    const int delta = degree_stats(best).max_degree;
    if (cfg.book_cap && cfg.pair_cap && thm1_applies(best, *cfg.book_cap, *cfg.pair_cap))
        result.bound_gaps.emplace_back(
            "thm1", thm1_bound(delta, *cfg.book_cap, *cfg.pair_cap, n) - result.best_q);
    if (cfg.book_cap && cor1_applies(best, *cfg.book_cap))
        result.bound_gaps.emplace_back("cor1", cor1_bound(delta, *cfg.book_cap, n) - result.best_q);
    if (cfg.pair_cap && cor2_applies(best, *cfg.pair_cap))
        result.bound_gaps.emplace_back("cor2", cor2_bound(delta, *cfg.pair_cap, n) - result.best_q);
    if (cfg.st_free && cfg.st_free->second >= 3 &&
        thm2_applies(best, cfg.st_free->first, cfg.st_free->second))
        result.bound_gaps.emplace_back(
            "thm2", thm2_bound(n, cfg.st_free->first, cfg.st_free->second) - result.best_q);
    if (n >= 2 && degree_stats(best).min_degree >= 1)
        result.bound_gaps.emplace_back("lem5", merris_q_bound(best) - result.best_q);

    return result;
}

} // namespace qbound
