#include "pls/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

namespace pls {

namespace {

constexpr int kMaxMaskSymbols = 63;

void require_positive(const std::optional<std::vector<int>>& xs, const char* what) {
    if (!xs) {
        return;
    }
    if (xs->empty() || std::any_of(xs->begin(), xs->end(), [](int x) { return x < 1; })) {
        throw PreconditionViolated(std::string(what) + " must be a nonempty list of positive integers");
    }
}

void require_positive(const std::optional<int>& x, const char* what) {
    if (x && *x < 1) {
        throw PreconditionViolated(std::string(what) + " must be positive");
    }
}

void check_budget_shape(const OracleBudget& b) {
    if (b.max_symbols > kMaxMaskSymbols) {
        throw PreconditionViolated("oracle supports at most 63 symbols");
    }
}

// Backtracking over the cells of a fixed R x C board in row-major order.
// Symbols are introduced in increasing order of first use, so each witness
// is searched once up to symbol relabeling.
class FixedShapeSearch {
public:
    struct Shape {
        int rows, cols, symbols, volume;
        std::vector<int> row_lo, row_hi, col_lo, col_hi;
        int sym_hi;
        std::optional<std::vector<int>> sym_target; // sorted ascending
    };

    FixedShapeSearch(Shape shape, long long& nodes, long long max_nodes)
        : sh_(std::move(shape)), nodes_(nodes), max_nodes_(max_nodes),
          row_count_(static_cast<std::size_t>(sh_.rows), 0), col_count_(static_cast<std::size_t>(sh_.cols), 0),
          sym_count_(static_cast<std::size_t>(sh_.symbols) + 1, 0),
          row_mask_(static_cast<std::size_t>(sh_.rows), 0), col_mask_(static_cast<std::size_t>(sh_.cols), 0),
          grid_(static_cast<std::size_t>(sh_.rows * sh_.cols), 0) {}

    std::optional<PartialLatinSquare> run() {
        if (!dfs(0)) {
            return std::nullopt;
        }
        std::vector<Triple> ts;
        for (int k = 0; k < sh_.rows * sh_.cols; ++k) {
            if (grid_[static_cast<std::size_t>(k)] != 0) {
                ts.push_back({k / sh_.cols + 1, k % sh_.cols + 1, grid_[static_cast<std::size_t>(k)]});
            }
        }
        return validate(ts);
    }

private:
    bool complete() const {
        if (placed_ != sh_.volume || distinct_ != sh_.symbols) {
            return false;
        }
        for (int j = 0; j < sh_.cols; ++j) {
            if (col_count_[static_cast<std::size_t>(j)] < sh_.col_lo[static_cast<std::size_t>(j)]) {
                return false;
            }
        }
        if (sh_.sym_target) {
            std::vector<int> got(sym_count_.begin() + 1, sym_count_.end());
            std::sort(got.begin(), got.end());
            return got == *sh_.sym_target;
        }
        return true;
    }

    bool dfs(int k) {
        if (++nodes_ > max_nodes_) {
            throw BudgetExceeded("oracle search exceeded " + std::to_string(max_nodes_) + " nodes");
        }
        const int cells = sh_.rows * sh_.cols;
        const int i = k / sh_.cols;
        const int j = k % sh_.cols;
        if (k > 0 && j == 0 &&
            row_count_[static_cast<std::size_t>(i - 1)] < sh_.row_lo[static_cast<std::size_t>(i - 1)]) {
            return false;
        }
        if (k == cells) {
            return complete();
        }
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        const int left = cells - k;
        if (placed_ + left < sh_.volume || distinct_ + left < sh_.symbols ||
            row_count_[ui] + (sh_.cols - j) < sh_.row_lo[ui] || col_count_[uj] + (sh_.rows - i) < sh_.col_lo[uj]) {
            return false;
        }

        if (placed_ < sh_.volume && row_count_[ui] < sh_.row_hi[ui] && col_count_[uj] < sh_.col_hi[uj]) {
            const int top = std::min(sh_.symbols, distinct_ + 1);
            for (int sym = 1; sym <= top; ++sym) {
                const std::uint64_t bit = std::uint64_t{1} << sym;
                const auto us = static_cast<std::size_t>(sym);
                if ((row_mask_[ui] & bit) || (col_mask_[uj] & bit) || sym_count_[us] >= sh_.sym_hi) {
                    continue;
                }
                const bool fresh = sym_count_[us] == 0;
                grid_[static_cast<std::size_t>(k)] = sym;
                row_mask_[ui] |= bit;
                col_mask_[uj] |= bit;
                ++row_count_[ui];
                ++col_count_[uj];
                ++sym_count_[us];
                ++placed_;
                distinct_ += fresh ? 1 : 0;
                if (dfs(k + 1)) {
                    return true;
                }
                distinct_ -= fresh ? 1 : 0;
                --placed_;
                --sym_count_[us];
                --col_count_[uj];
                --row_count_[ui];
                col_mask_[uj] &= ~bit;
                row_mask_[ui] &= ~bit;
                grid_[static_cast<std::size_t>(k)] = 0;
            }
        }
        return dfs(k + 1);
    }

    Shape sh_;
    long long& nodes_;
    long long max_nodes_;
    std::vector<int> row_count_;
    std::vector<int> col_count_;
    std::vector<int> sym_count_;
    std::vector<std::uint64_t> row_mask_;
    std::vector<std::uint64_t> col_mask_;
    std::vector<int> grid_;
    int placed_ = 0;
    int distinct_ = 0;
};

int sum(const std::vector<int>& xs) { return std::accumulate(xs.begin(), xs.end(), 0); }

} // namespace

std::optional<PartialLatinSquare> exists_full(const OracleQuery& q, const OracleBudget& budget) {
    check_budget_shape(budget);
    require_positive(q.row_params, "row parameters");
    require_positive(q.col_params, "column parameters");
    require_positive(q.sym_params, "symbol parameters");
    require_positive(q.r, "r");
    require_positive(q.c, "c");
    require_positive(q.s, "s");
    require_positive(q.v, "v");
    if (!q.row_params && !q.col_params && !q.sym_params && !q.r && !q.c && !q.s && !q.v) {
        throw PreconditionViolated("oracle query names no constraint");
    }

    std::optional<int> volume = q.v;
    for (const auto* fam : {&q.row_params, &q.col_params, &q.sym_params}) {
        if (!*fam) {
            continue;
        }
        const int implied = sum(**fam);
        if (volume && *volume != implied) {
            throw PreconditionViolated("constraints imply different volumes (" + std::to_string(*volume) + " and " +
                                       std::to_string(implied) + ")");
        }
        volume = implied;
    }

    // A family's length fixes the matching count; a clash means no PLS.
    auto fixed_count = [](const std::optional<std::vector<int>>& fam, const std::optional<int>& count,
                          bool& clash) -> std::optional<int> {
        if (fam) {
            const int len = static_cast<int>(fam->size());
            if (count && *count != len) {
                clash = true;
            }
            return len;
        }
        return count;
    };
    bool clash = false;
    const auto rows = fixed_count(q.row_params, q.r, clash);
    const auto cols = fixed_count(q.col_params, q.c, clash);
    const auto syms = fixed_count(q.sym_params, q.s, clash);
    if (clash) {
        return std::nullopt;
    }

    std::optional<std::vector<int>> sym_target;
    if (q.sym_params) {
        sym_target = *q.sym_params;
        std::sort(sym_target->begin(), sym_target->end());
    }

    // Volume candidates. Without a fixed volume, two known line counts
    // bound it by their product; otherwise it is unbounded.
    long long v_hi = 0;
    bool unbounded = false;
    if (volume) {
        v_hi = *volume;
    } else {
        std::vector<long long> products;
        if (rows && cols) products.push_back(1LL * *rows * *cols);
        if (rows && syms) products.push_back(1LL * *rows * *syms);
        if (cols && syms) products.push_back(1LL * *cols * *syms);
        if (products.empty()) {
            unbounded = true;
            v_hi = budget.max_volume;
        } else {
            v_hi = *std::min_element(products.begin(), products.end());
        }
    }
    const int v_lo = volume ? *volume : 1;

    bool exceeded = unbounded;
    long long nodes = 0;
    for (long long vv = v_lo; vv <= v_hi; ++vv) {
        const int v = static_cast<int>(vv);
        if (v > budget.max_volume) {
            exceeded = true;
            break;
        }
        const int r_lo = rows.value_or(1), r_hi = rows.value_or(v);
        const int c_lo = cols.value_or(1), c_hi = cols.value_or(v);
        const int s_lo = syms.value_or(1), s_hi = syms.value_or(v);
        for (int r = r_lo; r <= r_hi; ++r) {
            for (int c = c_lo; c <= c_hi; ++c) {
                for (int s = s_lo; s <= s_hi; ++s) {
                    if (r > budget.max_rows || c > budget.max_cols || s > budget.max_symbols) {
                        // Only shapes that could hold a PLS make the answer uncertain.
                        const bool possible = std::max({r, c, s}) <= v && 1LL * v <= 1LL * r * c &&
                                              1LL * v <= 1LL * r * s && 1LL * v <= 1LL * c * s;
                        exceeded = exceeded || possible;
                        continue;
                    }
                    FixedShapeSearch::Shape shape{r, c, s, v, {}, {}, {}, {}, v, sym_target};
                    for (int i = 0; i < r; ++i) {
                        const int p = q.row_params ? (*q.row_params)[static_cast<std::size_t>(i)] : 0;
                        shape.row_lo.push_back(p ? p : 1);
                        shape.row_hi.push_back(p ? p : c);
                    }
                    for (int j = 0; j < c; ++j) {
                        const int p = q.col_params ? (*q.col_params)[static_cast<std::size_t>(j)] : 0;
                        shape.col_lo.push_back(p ? p : 1);
                        shape.col_hi.push_back(p ? p : r);
                    }
                    if (sym_target) {
                        shape.sym_hi = sym_target->back();
                    }
                    if (auto w = FixedShapeSearch(std::move(shape), nodes, budget.max_nodes).run()) {
                        return w;
                    }
                }
            }
        }
    }
    if (exceeded) {
        throw BudgetExceeded("oracle query reaches beyond the search budget");
    }
    return std::nullopt;
}

void enumerate(const EnumerationBounds& b, const std::function<void(const PartialLatinSquare&)>& emit,
               const OracleBudget& budget) {
    check_budget_shape(budget);
    if (b.max_rows < 1 || b.max_cols < 1 || b.max_symbols < 1 || b.max_volume < 1) {
        throw PreconditionViolated("enumeration bounds must be positive");
    }
    if (b.max_rows > budget.max_rows || b.max_cols > budget.max_cols || b.max_symbols > budget.max_symbols ||
        b.max_volume > budget.max_volume) {
        throw BudgetExceeded("enumeration bounds exceed the search budget");
    }

    const int rows = b.max_rows;
    const int cols = b.max_cols;
    const int cells = rows * cols;
    std::vector<int> grid(static_cast<std::size_t>(cells), 0);
    std::vector<std::uint64_t> row_mask(static_cast<std::size_t>(rows), 0);
    std::vector<std::uint64_t> col_mask(static_cast<std::size_t>(cols), 0);
    std::vector<PartialLatinSquare> found;
    long long nodes = 0;
    int placed = 0;

    // Labels in use must be exactly 1..k on every axis.
    auto normalized = [&] {
        std::uint64_t rows_used = 0, cols_used = 0, syms_used = 0;
        for (int k = 0; k < cells; ++k) {
            if (int sym = grid[static_cast<std::size_t>(k)]) {
                rows_used |= std::uint64_t{1} << (k / cols);
                cols_used |= std::uint64_t{1} << (k % cols);
                syms_used |= std::uint64_t{1} << (sym - 1);
            }
        }
        auto prefix = [](std::uint64_t m) { return (m & (m + 1)) == 0; };
        return prefix(rows_used) && prefix(cols_used) && prefix(syms_used);
    };

    std::function<void(int)> dfs = [&](int k) {
        if (++nodes > budget.max_nodes) {
            throw BudgetExceeded("enumeration exceeded " + std::to_string(budget.max_nodes) + " nodes");
        }
        if (k == cells) {
            if (placed > 0 && normalized()) {
                std::vector<Triple> ts;
                for (int c = 0; c < cells; ++c) {
                    if (int sym = grid[static_cast<std::size_t>(c)]) {
                        ts.push_back({c / cols + 1, c % cols + 1, sym});
                    }
                }
                found.push_back(validate(ts));
            }
            return;
        }
        dfs(k + 1);
        if (placed == b.max_volume) {
            return;
        }
        const auto ui = static_cast<std::size_t>(k / cols);
        const auto uj = static_cast<std::size_t>(k % cols);
        for (int sym = 1; sym <= b.max_symbols; ++sym) {
            const std::uint64_t bit = std::uint64_t{1} << sym;
            if ((row_mask[ui] & bit) || (col_mask[uj] & bit)) {
                continue;
            }
            grid[static_cast<std::size_t>(k)] = sym;
            row_mask[ui] |= bit;
            col_mask[uj] |= bit;
            ++placed;
            dfs(k + 1);
            --placed;
            col_mask[uj] &= ~bit;
            row_mask[ui] &= ~bit;
            grid[static_cast<std::size_t>(k)] = 0;
        }
    };
    dfs(0);

    std::sort(found.begin(), found.end());
    for (const auto& p : found) {
        emit(p);
    }
}

std::vector<PartialLatinSquare> enumerate_all(const EnumerationBounds& bounds, const OracleBudget& budget) {
    std::vector<PartialLatinSquare> out;
    enumerate(bounds, [&](const PartialLatinSquare& p) { out.push_back(p); }, budget);
    return out;
}

} // namespace pls
