#pragma once

// Shared test graphs. The three "figure" graphs were transcribed from node
// diagrams and re-verified against their published degree counts before
// being frozen here.

#include <Eigen/Dense>

#include "walkcent/graph.hpp"

namespace fixtures {

using walkcent::Graph;

// 9 vertices, 12 edges; pair (2,8) interlaces twice under SC.
inline Graph fig1() {
    return Graph::simple(9, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4},
                             {4, 5}, {5, 6}, {4, 6}, {6, 7}, {0, 7}, {7, 8}});
}

// 10 vertices, 17 edges; pair (3,4) interlaces twice under RC and SC.
inline Graph fig2() {
    return Graph::simple(10, {{0, 6}, {6, 1}, {1, 7}, {7, 0}, {0, 8}, {8, 1},
                              {1, 9}, {9, 0}, {8, 3}, {3, 7}, {7, 2}, {2, 6},
                              {6, 9}, {9, 4}, {4, 8}, {8, 5}, {5, 9}});
}

// 8 vertices, 9 edges; vertices 1 and 8 are cospectral yet differ in Katz
// centrality and total communicability.
inline Graph fig4() {
    return Graph::simple(8, {{3, 6}, {6, 7}, {7, 0}, {0, 5}, {5, 1}, {1, 7},
                             {2, 6}, {0, 4}, {4, 1}});
}

// Rotation generator with spectrum {0, i, -i}: the SC difference of
// vertices 1 and 3 is cos(beta) - 1, touching zero at every multiple of 2 pi.
inline Graph rotation3() {
    Eigen::MatrixXd m(3, 3);
    m << 0, -1, 0,
         1,  0, 0,
         0,  0, 0;
    return Graph::general(m);
}

// deg(1) = 3 > deg(3) = 2 but EC(1) < EC(3): at least one SC interlacing.
inline Graph degree_ec_conflict() {
    return Graph::simple(6, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::simple(n, edges);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::simple(n, edges);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::simple(n, edges);
}

inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::simple(leaves + 1, edges);
}

inline Graph edgeless(int n) { return Graph::simple(n, {}); }

}  // namespace fixtures
