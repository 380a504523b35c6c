#include <doctest.h>

#include <bit>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbound/enumerate.hpp"
#include "qbound/families.hpp"
#include "qbound/forbidden.hpp"
#include "qbound/graph.hpp"

using namespace qbound;

namespace {

/// Brute-force K_{s,t} detector: every ordered pair of disjoint subsets
/// (S, T) with |S| = s, |T| = t, tested for full biadjacency. Independent of
/// the common-neighborhood route.
bool kst_free_brute(const Graph& g, int s, int t) {
    const int n = g.order();
    for (std::uint32_t sm = 0; sm < (1u << n); ++sm) {
        if (std::popcount(sm) != s) continue;
        for (std::uint32_t tm = 0; tm < (1u << n); ++tm) {
            if (std::popcount(tm) != t || (sm & tm)) continue;
            bool complete_bi = true;
            for (int u = 0; u < n && complete_bi; ++u) {
                if (!((sm >> u) & 1)) continue;
                for (int v = 0; v < n && complete_bi; ++v)
                    if (((tm >> v) & 1) && !g.has_edge(u, v)) complete_bi = false;
            }
            if (complete_bi) return false;
        }
    }
    return true;
}

/// s-subset orientation: a K_{s,t} also shows up as an s-subset whose common
/// neighborhood has size >= t.
bool kst_free_via_s_subsets(const Graph& g, int s, int t) {
    const int n = g.order();
    if (n < s) return true;
    std::vector<int> pick(s);
    std::vector<std::uint64_t> inter(g.words_per_row());
    std::function<bool(int, int)> rec = [&](int depth, int from) -> bool {
        for (int v = from; v < n; ++v) {
            pick[depth] = v;
            if (depth + 1 == s) {
                int c = 0;
                for (int w = 0; w < g.words_per_row(); ++w) {
                    std::uint64_t x = g.row_word(pick[0], w);
                    for (int d = 1; d < s; ++d) x &= g.row_word(pick[d], w);
                    c += std::popcount(x);
                }
                if (c >= t) return false;
            } else if (!rec(depth + 1, v + 1)) {
                return false;
            }
        }
        return true;
    };
    return rec(0, 0);
}

} // namespace

TEST_CASE("common_neighbors fixtures") {
    const Graph k4 = complete(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(common_neighbors(k4, u, v) == 2);

    const Graph c5 = cycle(5);
    CHECK(common_neighbors(c5, 0, 1) == 0);
    CHECK(common_neighbors(c5, 0, 2) == 1);

    const Graph pet = petersen();
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            CHECK(common_neighbors(pet, u, v) == (pet.has_edge(u, v) ? 0 : 1));

    CHECK_THROWS_AS(common_neighbors(k4, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(common_neighbors(k4, 0, 9), std::out_of_range);
}

TEST_CASE("profile fixtures") {
    const ForbiddenProfile k6 = profile(complete(6), {3});
    CHECK(k6.tsubset_max.at(3) == 3);
    CHECK(!k6.max_nonadjacent_common.has_value()); // no nonadjacent pair in K_6

    const ForbiddenProfile c6 = profile(cycle(6), {3});
    CHECK(c6.tsubset_max.at(3) == 0);
    CHECK(c6.max_adjacent_common == 0);
    CHECK(c6.max_nonadjacent_common == 1);

    const ForbiddenProfile r4 = profile(rook(4));
    CHECK(r4.max_adjacent_common == 2);
    CHECK(r4.max_nonadjacent_common == 2);

    const ForbiddenProfile empty = profile(build_graph(3, {}));
    CHECK(empty.max_adjacent_common == 0);
    CHECK(empty.max_nonadjacent_common == 0);

    CHECK_THROWS_AS(profile(complete(4), {1}), std::invalid_argument);
    CHECK_THROWS_AS(profile(complete(4), {5}), std::invalid_argument);
    CHECK_THROWS_AS(profile(complete(3), {4}), std::invalid_argument); // t > n
    CHECK_THROWS_AS(profile(Graph(25), {3}), std::invalid_argument);   // order cap
}

TEST_CASE("is_kst_free fixtures") {
    CHECK(!is_kst_free(complete(6), 3, 3));
    CHECK(is_kst_free(cycle(6), 3, 3));
    CHECK(is_kst_free(petersen(), 3, 3));
    CHECK(is_kst_free(petersen(), 2, 2));
    CHECK(!is_kst_free(complete_bipartite(3, 4), 4, 3));
    CHECK(is_kst_free(path(2), 2, 2)); // n < t
    CHECK_THROWS_AS(is_kst_free(complete(4), 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(is_kst_free(complete(4), 1, 1), std::invalid_argument);
}

TEST_CASE("is_kst_free agrees with the disjoint-subset brute force, n <= 5") {
    const std::pair<int, int> sts[] = {{2, 2}, {3, 2}, {3, 3}};
    for (int n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, false, [&](const Graph& g, std::uint64_t) {
            for (auto [s, t] : sts) CHECK(is_kst_free(g, s, t) == kst_free_brute(g, s, t));
        });
}

TEST_CASE("t-subset and s-subset orientations agree, n <= 6") {
    const std::pair<int, int> sts[] = {{2, 2}, {3, 2}, {3, 3}, {4, 3}};
    for (int n = 1; n <= 6; ++n)
        for_each_labeled_graph(n, false, [&](const Graph& g, std::uint64_t) {
            for (auto [s, t] : sts)
                CHECK(is_kst_free(g, s, t) == kst_free_via_s_subsets(g, s, t));
        });
}

TEST_CASE("is_book_free fixtures") {
    CHECK(is_book_free(petersen(), 1)); // triangle-free
    CHECK(is_book_free(complete(4), 3));
    CHECK(!is_book_free(complete(4), 2));
    CHECK(is_book_free(rook(4), 3));
    CHECK(!is_book_free(rook(4), 2));
    CHECK(is_book_free(build_graph(3, {}), 1)); // vacuous: no edges
    CHECK_THROWS_AS(is_book_free(complete(3), 0), std::invalid_argument);

    // A K_{2,l+1}-free graph is B_l-free: contrapositive over all graphs
    // n <= 6 and a sample of n = 7.
    for (int n = 2; n <= 6; ++n)
        for_each_labeled_graph(n, false, [&](const Graph& g, std::uint64_t) {
            for (int l = 1; l <= 5; ++l)
                if (!is_book_free(g, l + 1)) CHECK(!is_kst_free(g, l + 1, 2));
        });
    const std::uint64_t total7 = labeled_graph_count(7);
    const std::uint64_t stride = total7 / 20011;
    for (std::uint64_t mask = 0; mask < total7; mask += stride) {
        const Graph g = graph_from_edge_mask(7, mask);
        for (int l = 1; l <= 6; ++l)
            if (!is_book_free(g, l + 1)) CHECK(!is_kst_free(g, l + 1, 2));
    }
}

TEST_CASE("srg_params fixtures") {
    const auto pet = srg_params(petersen());
    REQUIRE(pet.has_value());
    CHECK(pet->n == 10);
    CHECK(pet->k_reg == 3);
    CHECK(pet->a == 0);
    CHECK(pet->c == 1);

    const auto r4 = srg_params(rook(4));
    REQUIRE(r4.has_value());
    CHECK(r4->k_reg == 6);
    CHECK(r4->a == 2);
    CHECK(r4->c == 2);

    const auto t5 = srg_params(triangular(5));
    REQUIRE(t5.has_value());
    CHECK(t5->n == 10);
    CHECK(t5->k_reg == 6);
    CHECK(t5->a == 3);
    CHECK(t5->c == 4);

    const auto c5 = srg_params(cycle(5));
    REQUIRE(c5.has_value());
    CHECK(c5->a == 0);
    CHECK(c5->c == 1);

    CHECK(!srg_params(path(4)).has_value());       // not regular
    CHECK(!srg_params(complete(5)).has_value());   // no nonadjacent pair
    CHECK(!srg_params(build_graph(4, {})).has_value());
    CHECK(!srg_params(cycle(6)).has_value());      // unequal nonadjacent counts
    Graph two_triangles(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        two_triangles.add_edge(u, v);
    CHECK(!srg_params(two_triangles).has_value()); // c would be 0
}

TEST_CASE("srg identity holds whenever parameters are present, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for_each_labeled_graph(n, false, [&](const Graph& g, std::uint64_t) {
            if (const auto p = srg_params(g))
                CHECK(p->k_reg * (p->k_reg - p->a - 1) == (p->n - p->k_reg - 1) * p->c);
        });
}
