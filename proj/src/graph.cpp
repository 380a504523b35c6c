#include "qbound/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qbound {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex index out of range: (" + std::to_string(u) + "," +
                                std::to_string(v) + ") with n=" + std::to_string(n_));
    if (u == v) throw std::invalid_argument("loop edge rejected: vertex " + std::to_string(u));
}

bool Graph::has_edge(int u, int v) const {
    check_pair(u, v);
    return (row_word(u, v / 64) >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    rows_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    rows_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

void Graph::toggle_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u) * words_ + v / 64] ^= std::uint64_t{1} << (v % 64);
    rows_[static_cast<std::size_t>(v) * words_ + u / 64] ^= std::uint64_t{1} << (u % 64);
}

int Graph::degree(int u) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row_word(u, w));
    return d;
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t word : rows_) twice += std::popcount(word);
    return twice / 2;
}

int Graph::common_neighbor_count(int u, int v) const {
    check_pair(u, v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(row_word(u, w) & row_word(v, w));
    return c;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s{0, 0, {}};
    s.degrees.reserve(g.order());
    for (int u = 0; u < g.order(); ++u) s.degrees.push_back(g.degree(u));
    if (!s.degrees.empty()) {
        s.max_degree = *std::max_element(s.degrees.begin(), s.degrees.end());
        s.min_degree = *std::min_element(s.degrees.begin(), s.degrees.end());
    }
    return s;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 0) throw std::invalid_argument("connectivity is undefined on the empty graph");
    const int words = g.words_per_row();
    std::vector<std::uint64_t> seen(words, 0);
    seen[0] = 1;
    std::vector<int> stack{0};
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < words; ++w) {
            std::uint64_t fresh = g.row_word(u, w) & ~seen[w];
            seen[w] |= fresh;
            while (fresh) {
                stack.push_back(w * 64 + std::countr_zero(fresh));
                ++reached;
                fresh &= fresh - 1;
            }
        }
    }
    return reached == n;
}

} // namespace qbound
