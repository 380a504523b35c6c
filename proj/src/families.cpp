#include "qbound/families.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace qbound {

namespace {

[[noreturn]] void bad_param(std::string_view family, const std::string& why) {
    throw std::invalid_argument(std::string(family) + ": " + why);
}

} // namespace

Graph complete(int n) {
    if (n < 1) bad_param("complete", "order must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) bad_param("complete_bipartite", "both part sizes must be >= 1");
    Graph g(s + t);
    for (int u = 0; u < s; ++u)
        for (int v = s; v < s + t; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    if (n < 1) bad_param("path", "order must be >= 1");
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) bad_param("cycle", "order must be >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph book(int k) {
    if (k < 1) bad_param("book", "triangle count must be >= 1");
    Graph g(k + 2);
    g.add_edge(0, 1);
    for (int p = 2; p < k + 2; ++p) {
        g.add_edge(0, p);
        g.add_edge(1, p);
    }
    return g;
}

Graph friendship(int n) {
    if (n < 3) bad_param("friendship", "order must be >= 3");
    Graph g(n);
    const int odd = (n % 2 == 1) ? n : n - 1;
    for (int v = 1; v < odd; ++v) g.add_edge(0, v);
    for (int v = 1; v + 1 < odd; v += 2) g.add_edge(v, v + 1);
    if (n % 2 == 0) g.add_edge(0, n - 1);
    return g;
}

Graph petersen() {
    // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint.
    std::array<std::pair<int, int>, 10> subsets{};
    int idx = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) subsets[idx++] = {i, j};
    Graph g(10);
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) {
            const auto [i, j] = subsets[a];
            const auto [k, l] = subsets[b];
            if (i != k && i != l && j != k && j != l) g.add_edge(a, b);
        }
    return g;
}

Graph rook(int m) {
    if (m < 1) bad_param("rook", "grid size must be >= 1");
    Graph g(m * m);
    for (int a = 0; a < m * m; ++a)
        for (int b = a + 1; b < m * m; ++b)
            if (a / m == b / m || a % m == b % m) g.add_edge(a, b);
    return g;
}

Graph triangular(int m) {
    if (m < 2) bad_param("triangular", "base order must be >= 2");
    std::vector<std::pair<int, int>> subsets;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) subsets.emplace_back(i, j);
    Graph g(static_cast<int>(subsets.size()));
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            const auto [i, j] = subsets[a];
            const auto [k, l] = subsets[b];
            const int shared = (i == k) + (i == l) + (j == k) + (j == l);
            if (shared == 1) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

Graph make_family(const GraphFamily& f) {
    switch (f.id) {
        case Family::complete: return complete(f.a);
        case Family::complete_bipartite: return complete_bipartite(f.a, f.b);
        case Family::path: return path(f.a);
        case Family::cycle: return cycle(f.a);
        case Family::book: return book(f.a);
        case Family::friendship: return friendship(f.a);
        case Family::petersen: return petersen();
        case Family::rook: return rook(f.a);
        case Family::triangular: return triangular(f.a);
    }
    throw std::invalid_argument("unknown family id");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::book: return "book";
        case Family::friendship: return "friendship";
        case Family::petersen: return "petersen";
        case Family::rook: return "rook";
        case Family::triangular: return "triangular";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::complete, Family::complete_bipartite, Family::path, Family::cycle,
                     Family::book, Family::friendship, Family::petersen, Family::rook,
                     Family::triangular})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

int family_arity(Family f) {
    switch (f) {
        case Family::petersen: return 0;
        case Family::complete_bipartite: return 2;
        default: return 1;
    }
}

} // namespace qbound
