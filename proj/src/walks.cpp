#include "walkcent/walks.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace walkcent {

WalkTable::WalkTable(int n, std::vector<std::vector<mpz_class>> diag)
    : n_(n), diag_(std::move(diag)) {
    if (static_cast<int>(diag_.size()) != std::max(n_, 1))
        throw std::logic_error("walk table row count mismatch");
}

bool WalkTable::columns_equal(int i, int j) const {
    for (const auto& row : diag_)
        if (row[i] != row[j]) return false;
    return true;
}

WalkTable walk_table(const Graph& g) {
    if (g.kind() == GraphKind::GeneralMatrix)
        throw std::invalid_argument("walk table is defined for undirected kinds only");
    if (!g.integral_weights())
        throw std::invalid_argument(
            "exact walk counting requires integer weights; "
            "use the floating spectral reconstruction for rational weights");

    const int n = g.order();
    const auto& adj = g.adjacency();

    // neighbor lists (with integer weights) drive the exact products
    std::vector<std::vector<std::pair<int, long>>> nbr(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (adj(i, j) != 0.0) nbr[j].emplace_back(i, static_cast<long>(adj(i, j)));

    std::vector<std::vector<mpz_class>> diag;
    diag.reserve(std::max(n, 1));

    std::vector<std::vector<mpz_class>> cur(n, std::vector<mpz_class>(n)), next = cur;
    for (int i = 0; i < n; ++i) cur[i][i] = 1;  // A^0 = I

    for (int r = 0; r < std::max(n, 1); ++r) {
        std::vector<mpz_class> row(n);
        for (int i = 0; i < n; ++i) row[i] = cur[i][i];
        diag.push_back(std::move(row));
        if (r + 1 >= n) break;
        // next = cur * A, column k built from A's column k
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                mpz_class& acc = next[i][k];
                acc = 0;
                for (auto [j, w] : nbr[k]) {
                    if (w == 1)
                        acc += cur[i][j];
                    else
                        mpz_addmul_ui(acc.get_mpz_t(), cur[i][j].get_mpz_t(),
                                      static_cast<unsigned long>(w));
                }
            }
        cur.swap(next);
    }

    WalkTable table(n, std::move(diag));

    // structural sanity on the finished table
    for (int i = 0; i < n; ++i) {
        if (table.at(0, i) != 1) throw std::logic_error("walk table row 0 must be all ones");
        for (int r = 0; r < n; ++r)
            if (table.at(r, i) < 0) throw std::logic_error("negative walk count");
    }
    if (g.kind() == GraphKind::SimpleUnweighted && n >= 2) {
        for (int i = 0; i < n; ++i) {
            if (table.at(1, i) != 0) throw std::logic_error("walk table row 1 must be zero");
            if (n >= 3 && table.at(2, i) != static_cast<long>(degree(g, i)))
                throw std::logic_error("walk table row 2 must equal the degrees");
        }
    }
    return table;
}

bool are_cospectral(const WalkTable& table, int i, int j) {
    if (i < 0 || j < 0 || i >= table.order() || j >= table.order())
        throw std::invalid_argument("vertex out of range");
    return table.columns_equal(i, j);
}

bool are_cospectral(const Graph& g, int i, int j) {
    return are_cospectral(walk_table(g), i, j);
}

std::vector<std::vector<int>> cospectral_classes(const WalkTable& table) {
    const int n = table.order();
    std::vector<std::vector<mpz_class>> columns(n);
    for (int i = 0; i < n; ++i) {
        columns[i].reserve(n);
        for (int r = 0; r < n; ++r) columns[i].push_back(table.at(r, i));
    }
    std::map<std::vector<mpz_class>, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[columns[i]].push_back(i);

    std::vector<std::vector<int>> classes;
    classes.reserve(groups.size());
    for (auto& [sig, members] : groups) classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

std::vector<std::vector<int>> cospectral_classes(const Graph& g) {
    return cospectral_classes(walk_table(g));
}

bool is_walk_regular(const Graph& g) { return cospectral_classes(g).size() == 1; }

}  // namespace walkcent
