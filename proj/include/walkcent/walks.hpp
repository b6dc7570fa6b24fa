#pragma once

#include <gmpxx.h>

#include <vector>

#include "walkcent/graph.hpp"

namespace walkcent {

/// Exact closed-walk counts: entry (r, i) is [A^r]_{ii} for r = 0..n-1,
/// held as arbitrary-precision integers so no count ever rounds.
class WalkTable {
  public:
    WalkTable(int n, std::vector<std::vector<mpz_class>> diag);

    int order() const { return n_; }
    const mpz_class& at(int r, int i) const { return diag_[r][i]; }
    double at_double(int r, int i) const { return diag_[r][i].get_d(); }
    bool columns_equal(int i, int j) const;

  private:
    int n_;
    std::vector<std::vector<mpz_class>> diag_;  // diag_[r][i]
};

/// Build the table by iterated exact integer matrix multiplication.
/// Requires integer entries (undirected kinds); by Cayley-Hamilton the
/// rows r = 0..n-1 determine [A^r]_{ii} for all r.
WalkTable walk_table(const Graph& g);

bool are_cospectral(const WalkTable& table, int i, int j);
bool are_cospectral(const Graph& g, int i, int j);

/// Equivalence classes of vertices under cospectrality, each sorted,
/// ordered by smallest member.
std::vector<std::vector<int>> cospectral_classes(const WalkTable& table);
std::vector<std::vector<int>> cospectral_classes(const Graph& g);

bool is_walk_regular(const Graph& g);

}  // namespace walkcent
