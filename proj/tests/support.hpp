#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pls/core.hpp"
#include "pls/matching.hpp"

namespace pls::testing {

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random nonempty PLS on at most rows x cols x syms, built by rejection.
inline PartialLatinSquare random_pls(std::mt19937& rng, int rows, int cols, int syms, int attempts = 20) {
    std::vector<Triple> ts{{uniform(rng, 1, rows), uniform(rng, 1, cols), uniform(rng, 1, syms)}};
    for (int a = 0; a < attempts; ++a) {
        const Triple t{uniform(rng, 1, rows), uniform(rng, 1, cols), uniform(rng, 1, syms)};
        const bool clash = std::any_of(ts.begin(), ts.end(), [&](const Triple& u) {
            return (u.row == t.row && u.col == t.col) || (u.row == t.row && u.sym == t.sym) ||
                   (u.col == t.col && u.sym == t.sym);
        });
        if (!clash) {
            ts.push_back(t);
        }
    }
    return validate(ts);
}

/// Random nonempty cell set on a rows x cols board with given fill probability.
inline CellSet random_cells(std::mt19937& rng, int rows, int cols, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<Cell> cells;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            if (coin(rng)) {
                cells.push_back({i, j});
            }
        }
    }
    if (cells.empty()) {
        cells.push_back({uniform(rng, 1, rows), uniform(rng, 1, cols)});
    }
    return CellSet(rows, cols, std::move(cells));
}

/// Random bipartite graph with every degree at most max_degree.
inline BipartiteGraph random_bounded_graph(std::mt19937& rng, int left, int right, int max_degree) {
    std::vector<Edge> all;
    for (int i = 1; i <= left; ++i) {
        for (int j = 1; j <= right; ++j) {
            all.push_back({i, j});
        }
    }
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> dl(static_cast<std::size_t>(left) + 1, 0);
    std::vector<int> dr(static_cast<std::size_t>(right) + 1, 0);
    std::vector<Edge> edges;
    for (const auto& e : all) {
        auto& a = dl[static_cast<std::size_t>(e.left)];
        auto& b = dr[static_cast<std::size_t>(e.right)];
        if (a < max_degree && b < max_degree) {
            ++a;
            ++b;
            edges.push_back(e);
        }
    }
    return BipartiteGraph(left, right, std::move(edges));
}

/// Line sums of a random 0-1 matrix with no zero rows or columns.
inline std::pair<std::vector<int>, std::vector<int>> random_line_sums(std::mt19937& rng, int max_rows, int max_cols) {
    const int rows = uniform(rng, 1, max_rows);
    const int cols = uniform(rng, 1, max_cols);
    const double density = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    const auto cells = random_cells(rng, rows, cols, density);
    auto n = cells.row_counts();
    auto m = cells.col_counts();
    std::erase(n, 0);
    std::erase(m, 0);
    return {n, m};
}

// The subset inequality checked over every pair (I, J).
inline bool dominance_brute(const std::vector<int>& n, const std::vector<int>& m) {
    const long long v = std::accumulate(n.begin(), n.end(), 0LL);
    const std::size_t r = n.size();
    const std::size_t c = m.size();
    for (unsigned I = 0; I < (1u << r); ++I) {
        long long ni = 0;
        int ki = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (I >> i & 1u) {
                ni += n[i];
                ++ki;
            }
        }
        for (unsigned J = 0; J < (1u << c); ++J) {
            long long mj = 0;
            int kj = 0;
            for (std::size_t j = 0; j < c; ++j) {
                if (J >> j & 1u) {
                    mj += m[j];
                    ++kj;
                }
            }
            if (ni + mj > v + 1LL * ki * kj) {
                return false;
            }
        }
    }
    return true;
}

// Random positive sequences of the given lengths with equal sums.
inline std::pair<std::vector<int>, std::vector<int>> random_equal_sums(std::mt19937& rng, int r, int c) {
    std::vector<int> n(static_cast<std::size_t>(r));
    for (auto& x : n) x = uniform(rng, 1, 6);
    const int v = std::accumulate(n.begin(), n.end(), 0);
    if (v < c) {
        n[0] += c - v;
    }
    const int total = std::accumulate(n.begin(), n.end(), 0);
    std::vector<int> m(static_cast<std::size_t>(c), 1);
    for (int extra = total - c; extra > 0; --extra) {
        ++m[static_cast<std::size_t>(uniform(rng, 0, c - 1))];
    }
    return {n, m};
}

} // namespace pls::testing
