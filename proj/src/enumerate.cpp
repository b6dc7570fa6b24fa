#include "walkcent/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace walkcent {

namespace {

constexpr int tri(int j) { return j * (j - 1) / 2; }

inline bool mask_edge(GraphMask mask, int i, int j) {
    if (i > j) std::swap(i, j);
    return (mask >> (tri(j) + i)) & 1u;
}

using AdjRows = std::array<std::uint16_t, kMaskMaxOrder>;

AdjRows adjacency_rows(GraphMask mask, int n) {
    AdjRows adj{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> (tri(j) + i)) & 1u) {
                adj[i] |= std::uint16_t(1) << j;
                adj[j] |= std::uint16_t(1) << i;
            }
    return adj;
}

// 1-WL color refinement; the color ids are label-invariant because they are
// ranks of sorted (old color, neighbor color multiset) signatures.
std::array<int, kMaskMaxOrder> wl_colors(const AdjRows& adj, int n) {
    std::array<int, kMaskMaxOrder> color{};
    for (int v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);

    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (adj[v] & (std::uint16_t(1) << u)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> uniq(sig.begin(), sig.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

        std::array<int, kMaskMaxOrder> next{};
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) -
                                       uniq.begin());
            if (next[v] != color[v]) changed = true;
        }
        color = next;
        if (!changed) break;
    }
    return color;
}

struct CanonSearch {
    int n;
    const AdjRows& adj;
    std::array<int, kMaskMaxOrder> class_of_pos;  // color class feeding each position
    std::vector<std::vector<int>> classes;        // vertices per color class
    std::array<int, kMaskMaxOrder> perm{};        // position -> vertex
    std::array<std::uint16_t, kMaskMaxOrder> placed_mask{};  // bitset of vertices used
    std::array<std::uint32_t, kMaskMaxOrder> blocks{};  // row bits per position
    std::array<std::uint32_t, kMaskMaxOrder> best_blocks{};
    bool have_best = false;

    bool leaf_smaller() const {
        for (int p = 0; p < n; ++p) {
            if (blocks[p] < best_blocks[p]) return true;
            if (blocks[p] > best_blocks[p]) return false;
        }
        return false;
    }

    // The prefix-equal flag only gates pruning. It can go stale when a leaf
    // below improves best, which costs time, never correctness: leaves
    // compare the full block string before replacing best.
    void rec(int p, std::uint16_t used, bool eq) {
        if (p == n) {
            if (!have_best || leaf_smaller()) {
                best_blocks = blocks;
                have_best = true;
            }
            return;
        }
        for (int v : classes[class_of_pos[p]]) {
            if (used & (std::uint16_t(1) << v)) continue;
            std::uint32_t block = 0;
            for (int q = 0; q < p; ++q)
                block = (block << 1) | ((adj[v] >> perm[q]) & 1u);
            bool child_eq = eq;
            if (have_best && eq) {
                if (block > best_blocks[p]) continue;  // subtree exceeds best
                child_eq = block == best_blocks[p];
            }
            blocks[p] = block;
            perm[p] = v;
            rec(p + 1, used | (std::uint16_t(1) << v), child_eq);
        }
    }
};

}  // namespace

GraphMask canonical_form(GraphMask mask, int n) {
    if (n < 0 || n > kMaskMaxOrder) throw std::invalid_argument("mask order out of range");
    if (n <= 1) return 0;
    AdjRows adj = adjacency_rows(mask, n);
    auto color = wl_colors(adj, n);

    CanonSearch search{n, adj, {}, {}, {}, {}, {}, {}, false};
    std::vector<std::pair<int, int>> order;  // (color, vertex)
    for (int v = 0; v < n; ++v) order.emplace_back(color[v], v);
    std::sort(order.begin(), order.end());
    int pos = 0;
    for (int k = 0; k < n;) {
        int c = order[k].first;
        search.classes.emplace_back();
        while (k < n && order[k].first == c) search.classes.back().push_back(order[k++].second);
        for (std::size_t t = 0; t < search.classes.back().size(); ++t)
            search.class_of_pos[pos++] = static_cast<int>(search.classes.size()) - 1;
    }

    search.rec(0, 0, true);

    GraphMask out = 0;
    for (int p = 1; p < n; ++p)
        for (int q = 0; q < p; ++q)
            if (search.best_blocks[p] & (std::uint32_t(1) << (p - 1 - q)))
                out |= GraphMask(1) << (tri(p) + q);
    return out;
}

GraphMask graph_to_mask(const Graph& g) {
    if (g.kind() != GraphKind::SimpleUnweighted)
        throw std::invalid_argument("masks encode simple unweighted graphs");
    int n = g.order();
    if (n > kMaskMaxOrder) throw std::invalid_argument("graph too large for mask encoding");
    GraphMask mask = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacency()(i, j) != 0.0) mask |= GraphMask(1) << (tri(j) + i);
    return mask;
}

Graph mask_to_graph(GraphMask mask, int n) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> (tri(j) + i)) & 1u) a(i, j) = a(j, i) = 1.0;
    return Graph::simple(std::move(a));
}

std::string mask_to_graph6(GraphMask mask, int n) { return to_graph6(mask_to_graph(mask, n)); }

bool mask_connected(GraphMask mask, int n) {
    if (n <= 1) return true;
    AdjRows adj = adjacency_rows(mask, n);
    std::uint16_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (std::uint16_t(1) << v)) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint16_t(1) << n) - 1;
}

namespace {

void canonicalize_batch(std::vector<GraphMask>& masks, int n, int workers) {
    const long count = static_cast<long>(masks.size());
    if (workers == 1) {
        for (long c = 0; c < count; ++c) masks[c] = canonical_form(masks[c], n);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) \
    num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
        for (long c = 0; c < count; ++c) masks[c] = canonical_form(masks[c], n);
    }
}

void sort_unique(std::vector<GraphMask>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<GraphMask> enumerate_classes(int n, bool connected_only, int workers) {
    if (n < 1 || n > kEnumerationCeiling)
        throw std::invalid_argument("enumeration order must lie in 1.." +
                                    std::to_string(kEnumerationCeiling));

    std::vector<GraphMask> level{0};  // the single graph on one vertex
    for (int k = 2; k <= n; ++k) {
        const int new_bits = k - 1;
        const int shift = tri(k - 1);
        std::vector<GraphMask> next;
        // extend each (k-1)-class by one vertex with every neighbor subset,
        // in parent chunks so the candidate buffer stays bounded
        const std::size_t chunk_parents = std::max<std::size_t>(1, (1u << 21) >> new_bits);
        std::vector<GraphMask> buf;
        for (std::size_t base = 0; base < level.size(); base += chunk_parents) {
            std::size_t end = std::min(level.size(), base + chunk_parents);
            buf.clear();
            buf.reserve((end - base) << new_bits);
            for (std::size_t p = base; p < end; ++p)
                for (GraphMask s = 0; s < (GraphMask(1) << new_bits); ++s)
                    buf.push_back(level[p] | (s << shift));
            canonicalize_batch(buf, k, workers);
            sort_unique(buf);
            next.insert(next.end(), buf.begin(), buf.end());
            if (next.size() > (1u << 23)) sort_unique(next);
        }
        sort_unique(next);
        level = std::move(next);
    }

    if (connected_only) {
        std::erase_if(level, [n](GraphMask m) { return !mask_connected(m, n); });
    }
    return level;
}

void enumerate_graphs(int n, const EnumerateOptions& opts,
                      const std::function<void(const Graph&)>& sink) {
    if (opts.canonical_dedup) {
        for (GraphMask m : enumerate_classes(n, opts.connected_only, opts.workers))
            sink(mask_to_graph(m, n));
        return;
    }
    // labeled enumeration; the count is 2^(n choose 2)
    if (n < 0 || n > 8)
        throw std::invalid_argument("labeled enumeration supported for n <= 8");
    const int bits = tri(n);
    for (GraphMask m = 0; m < (GraphMask(1) << bits); ++m) {
        if (opts.connected_only && !mask_connected(m, n)) continue;
        sink(mask_to_graph(m, n));
    }
}

}  // namespace walkcent
