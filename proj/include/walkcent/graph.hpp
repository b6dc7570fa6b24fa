#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace walkcent {

enum class GraphKind {
    SimpleUnweighted,    // 0/1 symmetric, zero diagonal
    WeightedUndirected,  // symmetric, nonnegative, zero diagonal
    GeneralMatrix,       // any real square matrix; series-based operations only
};

/// Thrown by the text parsers. `offset` is a byte offset for graph6 input
/// and a 1-based line number for edge-list input.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// Immutable dense graph. Vertices are 0-based internally; all text I/O is
/// 1-based to match the usual drawing conventions.
class Graph {
  public:
    static Graph simple(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph simple(Eigen::MatrixXd adjacency);
    static Graph weighted(Eigen::MatrixXd adjacency);
    static Graph general(Eigen::MatrixXd matrix);

    int order() const { return static_cast<int>(adj_.rows()); }
    GraphKind kind() const { return kind_; }
    const Eigen::MatrixXd& adjacency() const { return adj_; }
    bool undirected() const { return kind_ != GraphKind::GeneralMatrix; }

    /// True when every entry is an exact integer (always true for
    /// SimpleUnweighted); gates the exact-arithmetic walk routines.
    bool integral_weights() const { return integral_; }

  private:
    Graph(Eigen::MatrixXd adj, GraphKind kind);

    Eigen::MatrixXd adj_;
    GraphKind kind_;
    bool integral_;
};

/// Decode one graph6 line (header-less format, long form accepted up to
/// kMaxGraph6Order vertices). Errors carry the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encode a simple unweighted graph as a graph6 line; inverse of parse_graph6.
std::string to_graph6(const Graph& g);

inline constexpr int kMaxGraph6Order = 4096;

/// Edge-list text: first non-empty line is the vertex count, then one edge
/// per line as "u v [w]" with 1-based labels and optional positive weight.
/// '#' starts a comment. Duplicate edges (either orientation) are rejected.
Graph parse_edge_list(std::string_view text);

double degree(const Graph& g, int i);

/// Single connected component (BFS over nonzero entries). Undirected only.
bool is_connected(const Graph& g);

}  // namespace walkcent
