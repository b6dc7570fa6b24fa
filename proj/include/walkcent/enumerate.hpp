#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "walkcent/graph.hpp"

namespace walkcent {

/// Simple graphs on n <= 10 vertices packed into a uint64: bit
/// j(j-1)/2 + i set means edge {i, j} for i < j. The bit order matches the
/// graph6 payload, so the lexicographically least mask is also the
/// lexicographically least graph6 encoding.
using GraphMask = std::uint64_t;

inline constexpr int kMaskMaxOrder = 10;
inline constexpr int kEnumerationCeiling = 10;

GraphMask graph_to_mask(const Graph& g);
Graph mask_to_graph(GraphMask mask, int n);
std::string mask_to_graph6(GraphMask mask, int n);
bool mask_connected(GraphMask mask, int n);

/// Canonical representative of the isomorphism class: the minimal mask over
/// all vertex relabelings, searched with color-refinement pruning.
GraphMask canonical_form(GraphMask mask, int n);

/// All isomorphism classes on n vertices, ascending by mask.
/// workers: 0 = all threads, 1 = serial.
std::vector<GraphMask> enumerate_classes(int n, bool connected_only, int workers = 0);

struct EnumerateOptions {
    bool connected_only = false;
    bool canonical_dedup = true;  // false: every labeled graph (n <= 8)
    int workers = 0;
};

/// Stream every graph on n vertices through `sink`: one representative per
/// isomorphism class (canonical_dedup), or every labeled graph otherwise.
void enumerate_graphs(int n, const EnumerateOptions& opts,
                      const std::function<void(const Graph&)>& sink);

}  // namespace walkcent
