#pragma once

#include <string>
#include <string_view>

#include "qbound/graph.hpp"

namespace qbound {

/// graph6 short form, orders 1..62 only: one size byte (n + 63) followed by
/// the upper-triangle adjacency bits in column order
/// (0,1),(0,2),(1,2),(0,3),..., packed big-endian into 6-bit groups, each
/// group + 63, final group zero-padded.
std::string to_graph6(const Graph& g);

/// Strict decode: rejects a bad size byte, payload bytes outside 63..126,
/// and payloads whose length differs from the canonical one.
Graph from_graph6(std::string_view text);

} // namespace qbound
