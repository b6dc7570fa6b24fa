#include "walkcent/graph.hpp"

#include <cmath>
#include <deque>
#include <sstream>

namespace walkcent {

namespace {

bool all_integral(const Eigen::MatrixXd& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            double v = m(i, j);
            if (!std::isfinite(v) || v != std::nearbyint(v) || std::abs(v) >= 9.007199254740992e15)
                return false;
        }
    return true;
}

void require_square(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjacency matrix must be square");
}

void require_symmetric_zero_diag(const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, i) != 0.0) throw std::invalid_argument("nonzero diagonal entry (self-loop)");
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument("adjacency matrix not symmetric");
    }
}

}  // namespace

Graph::Graph(Eigen::MatrixXd adj, GraphKind kind)
    : adj_(std::move(adj)), kind_(kind), integral_(all_integral(adj_)) {}

Graph Graph::simple(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (a(u, v) != 0.0) throw std::invalid_argument("duplicate edge");
        a(u, v) = a(v, u) = 1.0;
    }
    return Graph(std::move(a), GraphKind::SimpleUnweighted);
}

Graph Graph::simple(Eigen::MatrixXd adjacency) {
    require_square(adjacency);
    require_symmetric_zero_diag(adjacency);
    for (Eigen::Index i = 0; i < adjacency.rows(); ++i)
        for (Eigen::Index j = 0; j < adjacency.cols(); ++j)
            if (adjacency(i, j) != 0.0 && adjacency(i, j) != 1.0)
                throw std::invalid_argument("simple graph entries must be 0 or 1");
    return Graph(std::move(adjacency), GraphKind::SimpleUnweighted);
}

Graph Graph::weighted(Eigen::MatrixXd adjacency) {
    require_square(adjacency);
    require_symmetric_zero_diag(adjacency);
    for (Eigen::Index i = 0; i < adjacency.rows(); ++i)
        for (Eigen::Index j = 0; j < adjacency.cols(); ++j) {
            double v = adjacency(i, j);
            if (!std::isfinite(v) || v < 0.0)
                throw std::invalid_argument("weights must be finite and nonnegative");
        }
    return Graph(std::move(adjacency), GraphKind::WeightedUndirected);
}

Graph Graph::general(Eigen::MatrixXd matrix) {
    require_square(matrix);
    for (Eigen::Index i = 0; i < matrix.rows(); ++i)
        for (Eigen::Index j = 0; j < matrix.cols(); ++j)
            if (!std::isfinite(matrix(i, j)))
                throw std::invalid_argument("matrix entries must be finite");
    return Graph(std::move(matrix), GraphKind::GeneralMatrix);
}

// --- graph6 ---

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

int g6_byte(std::string_view text, std::size_t pos, const char* what) {
    if (pos >= text.size()) {
        std::ostringstream os;
        os << "truncated graph6 input: expected " << what << " at byte " << pos;
        throw ParseError(os.str(), pos);
    }
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kG6Lo || c > kG6Hi) {
        std::ostringstream os;
        os << "byte " << pos << " (0x" << std::hex << int(c) << ") outside graph6 range";
        throw ParseError(os.str(), pos);
    }
    return c - kG6Lo;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 input", 0);

    std::size_t pos = 0;
    long n;
    int first = g6_byte(text, pos, "order byte");
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        // long form: '~' then 18 bits of order
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("very long graph6 form (n >= 258048) not supported", 1);
        long b1 = g6_byte(text, 1, "order byte");
        long b2 = g6_byte(text, 2, "order byte");
        long b3 = g6_byte(text, 3, "order byte");
        n = (b1 << 12) | (b2 << 6) | b3;
        pos = 4;
        if (n < 63) throw ParseError("long-form order below 63", 1);
    }
    if (n > kMaxGraph6Order) {
        std::ostringstream os;
        os << "graph order " << n << " exceeds supported maximum " << kMaxGraph6Order;
        throw ParseError(os.str(), 0);
    }

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    int buffer = 0, avail = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            if (avail == 0) {
                buffer = g6_byte(text, pos, "payload byte");
                ++pos;
                avail = 6;
            }
            if (buffer & (1 << (avail - 1))) a(i, j) = a(j, i) = 1.0;
            --avail;
        }
    if (avail > 0 && (buffer & ((1 << avail) - 1)) != 0)
        throw ParseError("nonzero padding bits in final payload byte", pos - 1);
    if (pos != text.size()) {
        std::ostringstream os;
        os << "trailing garbage after payload at byte " << pos;
        throw ParseError(os.str(), pos);
    }
    return Graph::simple(std::move(a));
}

std::string to_graph6(const Graph& g) {
    if (g.kind() != GraphKind::SimpleUnweighted)
        throw std::invalid_argument("graph6 encodes simple unweighted graphs only");
    int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    }
    const auto& a = g.adjacency();
    int buffer = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            buffer = (buffer << 1) | (a(i, j) != 0.0 ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(buffer + kG6Lo));
                buffer = used = 0;
            }
        }
    if (used > 0) out.push_back(static_cast<char>((buffer << (6 - used)) + kG6Lo));
    return out;
}

// --- edge-list text ---

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    long n = -1;
    Eigen::MatrixXd a;
    bool any_weight = false;

    auto fail = [&](const std::string& msg) -> void {
        std::ostringstream os;
        os << "line " << lineno << ": " << msg;
        throw ParseError(os.str(), lineno);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;

        if (n < 0) {
            if (toks.size() != 1) fail("expected a single vertex count");
            try {
                std::size_t used = 0;
                n = std::stol(toks[0], &used);
                if (used != toks[0].size() || n < 0) throw std::invalid_argument("");
            } catch (const std::exception&) {
                fail("invalid vertex count '" + toks[0] + "'");
            }
            a = Eigen::MatrixXd::Zero(n, n);
            continue;
        }

        if (toks.size() < 2 || toks.size() > 3) fail("expected 'u v [w]'");
        long u = 0, v = 0;
        double w = 1.0;
        try {
            std::size_t used = 0;
            u = std::stol(toks[0], &used);
            if (used != toks[0].size()) throw std::invalid_argument("");
            v = std::stol(toks[1], &used);
            if (used != toks[1].size()) throw std::invalid_argument("");
            if (toks.size() == 3) {
                w = std::stod(toks[2], &used);
                if (used != toks[2].size()) throw std::invalid_argument("");
                any_weight = true;
            }
        } catch (const std::exception&) {
            fail("malformed edge line");
        }
        if (u < 1 || u > n || v < 1 || v > n) fail("vertex label out of range 1.." + std::to_string(n));
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        if (!(w > 0.0) || !std::isfinite(w)) fail("nonpositive weight");
        if (a(u - 1, v - 1) != 0.0) fail("duplicate edge " + toks[0] + " " + toks[1]);
        a(u - 1, v - 1) = a(v - 1, u - 1) = w;
    }
    if (n < 0) throw ParseError("missing vertex count", lineno);
    return any_weight ? Graph::weighted(std::move(a)) : Graph::simple(std::move(a));
}

double degree(const Graph& g, int i) {
    if (i < 0 || i >= g.order()) throw std::invalid_argument("vertex out of range");
    return g.adjacency().row(i).sum();
}

bool is_connected(const Graph& g) {
    if (g.kind() == GraphKind::GeneralMatrix)
        throw std::invalid_argument("connectivity is defined for undirected kinds only");
    int n = g.order();
    if (n <= 1) return true;
    const auto& a = g.adjacency();
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v)
            if (!seen[v] && a(u, v) != 0.0) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
    }
    return reached == n;
}

}  // namespace walkcent
