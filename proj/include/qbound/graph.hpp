#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace qbound {

/// Simple undirected graph over vertices 0..n-1, adjacency stored as one
/// bitset row per vertex. Immutable in all library pipelines once built;
/// the mutating operations exist for construction and for the search module's
/// edge toggles.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    int degree(int u) const;
    int edge_count() const;

    /// Popcount of the row intersection; neighbors common to u and v.
    int common_neighbor_count(int u, int v) const;

    /// Raw row words, row-major (words_per_row words per vertex).
    const std::vector<std::uint64_t>& rows() const { return rows_; }
    std::uint64_t row_word(int u, int w) const { return rows_[static_cast<std::size_t>(u) * words_ + w]; }

    template <class F>
    void for_each_neighbor(int u, F&& f) const {
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = row_word(u, w);
            while (bits) {
                const int v = w * 64 + std::countr_zero(bits);
                f(v);
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Builds a graph from an explicit edge list; duplicate edges collapse.
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

struct DegreeStats {
    int max_degree;
    int min_degree;
    std::vector<int> degrees;
};

DegreeStats degree_stats(const Graph& g);

/// True iff a traversal from vertex 0 reaches every vertex (n >= 1).
bool is_connected(const Graph& g);

} // namespace qbound
