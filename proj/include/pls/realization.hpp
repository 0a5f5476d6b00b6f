#pragma once

#include <span>
#include <vector>

#include "pls/core.hpp"

namespace pls {

/// Builds an r x c cell set with n_i cells in row i and m_j cells in column j.
///
/// Rows are filled in decreasing order of n_i (ties by index); each row
/// takes the columns with the largest remaining demand (ties by index).
/// Throws InfeasibleError when the line sums differ or the subset
/// inequality fails; the report carries the violating prefix.
CellSet realize_degree_matrix(std::span<const int> n, std::span<const int> m);

/// Moves cells within their rows until every column count lies in [1, s].
/// Requires n_i <= min(c, s) and c <= |B| <= c*s for the board width c.
CellSet rebalance_columns(const CellSet& cells, int s);

/// Balanced row counts: r values in [1, cap] summing to v, larger first.
std::vector<int> distribute_rows(int v, int r, int cap);

} // namespace pls
