#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pls/core.hpp"
#include "pls/feasibility.hpp"

namespace pls {

/// Called once per symbol layer with the layer's symbol and the cells
/// still unfilled after that layer was removed.
using LayerObserver = std::function<void(int symbol, const std::vector<Cell>& remaining)>;

/// Fills B with symbols so that the result uses exactly max line count of B
/// symbols. Layers are peeled from the top: symbol p goes to a matching of
/// the remaining cells that covers every row and column still holding p cells.
PartialLatinSquare fill_symbols(const CellSet& cells, const LayerObserver& observer = {});

/// Raises the symbol count to `s` by moving single cells onto fresh symbols.
/// Only symbols occurring at least twice donate a cell: the most frequent
/// symbol (smallest label on ties) gives up its smallest (row, col) cell.
PartialLatinSquare split_symbols(const PartialLatinSquare& p, int s);

/// PLS with row i holding n_i cells, column j holding m_j cells, s symbols.
PartialLatinSquare build_theorem(std::span<const int> n, std::span<const int> m, int s);

/// PLS with row parameters n, c columns and s symbols.
PartialLatinSquare build_proposition(std::span<const int> n, int c, int s);

/// PLS with r rows, c columns, s symbols and volume v.
PartialLatinSquare build_corollary(int r, int c, int s, int v);

} // namespace pls
