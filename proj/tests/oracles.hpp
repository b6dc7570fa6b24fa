#pragma once

// Independent test oracles. These deliberately avoid the library's own
// computational paths: walk counts by explicit walk enumeration, SC by a
// truncated Taylor sum over exact counts, canonical forms by plain
// minimization over every permutation, and random graphs from a seeded
// generator.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "walkcent/enumerate.hpp"
#include "walkcent/graph.hpp"

namespace oracles {

using walkcent::Graph;
using walkcent::GraphMask;

// number of closed walks of length r at vertex i, by brute enumeration
inline long count_closed_walks(const Graph& g, int start, int length) {
    const auto& a = g.adjacency();
    const int n = g.order();
    std::vector<int> stack{start};
    long count = 0;
    std::function<void(int, int)> walk = [&](int at, int remaining) {
        if (remaining == 0) {
            if (at == start) ++count;
            return;
        }
        for (int next = 0; next < n; ++next)
            if (a(at, next) != 0.0) walk(next, remaining - 1);
    };
    walk(start, length);
    return count;
}

// SC via the Taylor series sum_{r<=terms} beta^r [A^r]_{ii} / r! over exact
// integer powers, plus a geometric bound on the dropped tail
inline double taylor_sc(const Graph& g, double beta, int i, int terms = 80) {
    const int n = g.order();
    std::vector<std::vector<mpz_class>> cur(n, std::vector<mpz_class>(n)),
        next(n, std::vector<mpz_class>(n));
    for (int v = 0; v < n; ++v) cur[v][v] = 1;
    const auto& a = g.adjacency();

    double sum = 0, factorial = 1, power = 1;
    for (int r = 0; r <= terms; ++r) {
        if (r > 0) {
            factorial *= r;
            power *= beta;
        }
        sum += power * cur[i][i].get_d() / factorial;
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w) {
                next[u][w] = 0;
                for (int v = 0; v < n; ++v)
                    if (a(v, w) != 0.0) next[u][w] += cur[u][v];
            }
        cur.swap(next);
    }
    return sum;
}

inline bool mask_bit(GraphMask m, int i, int j) {
    if (i > j) std::swap(i, j);
    return (m >> (j * (j - 1) / 2 + i)) & 1u;
}

// canonical form by trying all n! relabelings; independent of the library's
// pruned search
inline GraphMask canonical_bruteforce(GraphMask mask, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool first = true;
    std::vector<int> best_bits, bits;
    GraphMask best = 0;
    do {
        bits.clear();
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) bits.push_back(mask_bit(mask, perm[i], perm[j]) ? 1 : 0);
        if (first || bits < best_bits) {
            first = false;
            best_bits = bits;
            GraphMask m = 0;
            for (std::size_t b = 0; b < bits.size(); ++b)
                if (bits[b]) m |= GraphMask(1) << b;
            best = m;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Erdos-Renyi graph from a fixed-seed engine
inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph::simple(n, edges);
}

inline Graph random_connected_graph(int n, double p, std::mt19937& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = random_graph(n, p, rng);
        if (walkcent::is_connected(g)) return g;
    }
    throw std::runtime_error("could not draw a connected graph");
}

}  // namespace oracles
