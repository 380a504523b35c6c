#include "qbound/graph6.hpp"

#include <stdexcept>

namespace qbound {

namespace {
constexpr int kBias = 63;
constexpr int kMaxOrder = 62;

std::size_t payload_bytes(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}
} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph6 short form supports orders 1..62, got " +
                                    std::to_string(n));
    std::string out;
    out.reserve(1 + payload_bytes(n));
    out.push_back(static_cast<char>(n + kBias));
    int group = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    const int size_byte = static_cast<unsigned char>(text[0]);
    const int n = size_byte - kBias;
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph6: bad size byte " + std::to_string(size_byte));
    const std::size_t expect = payload_bytes(n);
    if (text.size() - 1 < expect) throw std::invalid_argument("graph6: truncated bit payload");
    if (text.size() - 1 > expect) throw std::invalid_argument("graph6: payload longer than canonical");

    Graph g(n);
    std::size_t byte_idx = 1;
    int group = 0;
    int remaining = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (remaining == 0) {
                const int raw = static_cast<unsigned char>(text[byte_idx++]);
                if (raw < kBias || raw > kBias + 63)
                    throw std::invalid_argument("graph6: payload byte outside 63..126");
                group = raw - kBias;
                remaining = 6;
            }
            if ((group >> (remaining - 1)) & 1) g.add_edge(u, v);
            --remaining;
        }
    return g;
}

} // namespace qbound
