#include "pls/realization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pls/feasibility.hpp"

namespace pls {

namespace {

void check_realizable(std::span<const int> n, std::span<const int> m) {
    const long long vn = std::accumulate(n.begin(), n.end(), 0LL);
    const long long vm = std::accumulate(m.begin(), m.end(), 0LL);
    FeasibilityReport report;
    Condition sums{cond::kLineSums, "sum of row parameters equals sum of column parameters", vn == vm, {}};
    Condition gr{cond::kGaleRyser, "sum_I n_i + sum_J m_j <= v + |I||J| for all row sets I and column sets J",
                 false, {}};
    if (sums.satisfied) {
        const auto d = dominance_check(n, m);
        gr.satisfied = d.holds;
        if (!d.holds) {
            gr.witness = "k=" + std::to_string(d.k) + ", l=" + std::to_string(d.l) + ": " + std::to_string(d.lhs) +
                         " > " + std::to_string(d.rhs);
        }
    } else {
        sums.witness = std::to_string(vn) + " != " + std::to_string(vm);
        gr.witness = "undefined without equal line sums";
    }
    report.feasible = sums.satisfied && gr.satisfied;
    report.conditions = {sums, gr};
    if (!report.feasible) {
        throw InfeasibleError(std::move(report));
    }
}

} // namespace

CellSet realize_degree_matrix(std::span<const int> n, std::span<const int> m) {
    for (auto xs : {n, m}) {
        if (xs.empty() || std::any_of(xs.begin(), xs.end(), [](int x) { return x < 1; })) {
            throw PreconditionViolated("line sums must be nonempty sequences of positive integers");
        }
    }
    check_realizable(n, m);

    const int r = static_cast<int>(n.size());
    const int c = static_cast<int>(m.size());
    std::vector<int> order(n.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return n[a] > n[b]; });

    std::vector<int> demand(m.begin(), m.end());
    std::vector<int> cols(m.size());
    std::vector<Cell> cells;
    for (int row : order) {
        std::iota(cols.begin(), cols.end(), 0);
        std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) { return demand[a] > demand[b]; });
        for (int k = 0; k < n[row]; ++k) {
            const int col = cols[static_cast<std::size_t>(k)];
            if (demand[col] == 0) {
                throw std::logic_error("greedy realization ran out of column demand");
            }
            --demand[col];
            cells.push_back({row + 1, col + 1});
        }
    }
    if (std::any_of(demand.begin(), demand.end(), [](int d) { return d != 0; })) {
        throw std::logic_error("greedy realization left column demand unmet");
    }
    return CellSet(r, c, std::move(cells));
}

CellSet rebalance_columns(const CellSet& cells, int s) {
    const int c = cells.cols();
    const long long volume = static_cast<long long>(cells.size());
    if (s < 1) {
        throw PreconditionViolated("symbol count must be positive");
    }
    if (volume < c || volume > static_cast<long long>(c) * s) {
        throw PreconditionViolated("need c <= |B| <= c*s, got |B|=" + std::to_string(volume) + ", c=" +
                                   std::to_string(c) + ", s=" + std::to_string(s));
    }
    const int cap = std::min(c, s);
    for (int count : cells.row_counts()) {
        if (count > cap) {
            throw PreconditionViolated("a row holds " + std::to_string(count) + " cells, more than min(c,s)=" +
                                       std::to_string(cap));
        }
    }

    // occupied[i][j] for 1-based row i, column j.
    std::vector<std::vector<char>> occupied(static_cast<std::size_t>(cells.rows()) + 1,
                                            std::vector<char>(static_cast<std::size_t>(c) + 1, 0));
    std::vector<int> count(static_cast<std::size_t>(c) + 1, 0);
    for (const auto& cell : cells.cells()) {
        occupied[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col)] = 1;
        ++count[static_cast<std::size_t>(cell.col)];
    }

    auto out_of_range = [&] {
        for (int j = 1; j <= c; ++j) {
            if (count[static_cast<std::size_t>(j)] == 0 || count[static_cast<std::size_t>(j)] > s) {
                return true;
            }
        }
        return false;
    };

    // Each move goes from a column of count p to one of count q <= p - 2,
    // so the sum of squared counts strictly drops.
    while (out_of_range()) {
        int src = 1;
        for (int j = 2; j <= c; ++j) {
            if (count[static_cast<std::size_t>(j)] > count[static_cast<std::size_t>(src)]) {
                src = j;
            }
        }
        int dst = 0;
        for (int j = 1; j <= c && dst == 0; ++j) {
            if (count[static_cast<std::size_t>(j)] == 0) {
                dst = j;
            }
        }
        for (int j = 1; j <= c && dst == 0; ++j) {
            if (count[static_cast<std::size_t>(j)] < s) {
                dst = j;
            }
        }
        int row = 0;
        for (int i = 1; i <= cells.rows() && dst != 0; ++i) {
            const auto& line = occupied[static_cast<std::size_t>(i)];
            if (line[static_cast<std::size_t>(src)] && !line[static_cast<std::size_t>(dst)]) {
                row = i;
                break;
            }
        }
        if (dst == 0 || row == 0) {
            throw std::logic_error("column rebalancing found no admissible move");
        }
        occupied[static_cast<std::size_t>(row)][static_cast<std::size_t>(src)] = 0;
        occupied[static_cast<std::size_t>(row)][static_cast<std::size_t>(dst)] = 1;
        --count[static_cast<std::size_t>(src)];
        ++count[static_cast<std::size_t>(dst)];
    }

    std::vector<Cell> out;
    out.reserve(cells.size());
    for (int i = 1; i <= cells.rows(); ++i) {
        for (int j = 1; j <= c; ++j) {
            if (occupied[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                out.push_back({i, j});
            }
        }
    }
    return CellSet(cells.rows(), c, std::move(out));
}

std::vector<int> distribute_rows(int v, int r, int cap) {
    if (r < 1 || cap < 1 || v < r || static_cast<long long>(v) > static_cast<long long>(r) * cap) {
        throw PreconditionViolated("need r <= v <= r*cap, got v=" + std::to_string(v) + ", r=" + std::to_string(r) +
                                   ", cap=" + std::to_string(cap));
    }
    std::vector<int> rows(static_cast<std::size_t>(r), v / r);
    for (int i = 0; i < v % r; ++i) {
        ++rows[static_cast<std::size_t>(i)];
    }
    return rows;
}

} // namespace pls
