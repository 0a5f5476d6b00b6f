#include <numeric>

#include "doctest.h"
#include "pls/feasibility.hpp"
#include "pls/realization.hpp"
#include "pls/sweep.hpp"
#include "support.hpp"

using namespace pls;

namespace {

// Counts r x c 0-1 matrices with the given line sums by enumeration.
int count_matrices(const std::vector<int>& n, const std::vector<int>& m) {
    const int r = static_cast<int>(n.size());
    const int c = static_cast<int>(m.size());
    int found = 0;
    for (unsigned mask = 0; mask < (1u << (r * c)); ++mask) {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            int s = 0;
            for (int j = 0; j < c; ++j) s += mask >> (i * c + j) & 1u;
            ok = s == n[static_cast<std::size_t>(i)];
        }
        for (int j = 0; j < c && ok; ++j) {
            int s = 0;
            for (int i = 0; i < r; ++i) s += mask >> (i * c + j) & 1u;
            ok = s == m[static_cast<std::size_t>(j)];
        }
        found += ok;
    }
    return found;
}

} // namespace

TEST_CASE("realize_degree_matrix examples") {
    const std::vector<int> a{2, 1};
    CHECK(realize_degree_matrix(a, a) == CellSet(2, 2, {{1, 1}, {1, 2}, {2, 1}}));

    const std::vector<int> ones{1, 1};
    CHECK(realize_degree_matrix(ones, ones) == CellSet(2, 2, {{1, 1}, {2, 2}}));

    const std::vector<int> n{3, 3, 3, 1}, m{4, 4, 1, 1};
    CHECK(count_matrices(n, m) == 0);
    try {
        realize_degree_matrix(n, m);
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        const auto* gr = e.report().find(cond::kGaleRyser);
        REQUIRE(gr);
        CHECK_FALSE(gr->satisfied);
        CHECK(*gr->witness == "k=3, l=2: 17 > 16");
    }
}

TEST_CASE("realize_degree_matrix keeps the caller's line order") {
    const std::vector<int> n{1, 3, 2}, m{2, 1, 3};
    const auto b = realize_degree_matrix(n, m);
    CHECK(b.row_counts() == n);
    CHECK(b.col_counts() == m);
}

TEST_CASE("realize_degree_matrix rejects bad input") {
    const std::vector<int> n{2, 2}, m{3};
    CHECK_THROWS_AS(realize_degree_matrix(n, m), InfeasibleError);
    const std::vector<int> zero{0, 1};
    CHECK_THROWS_AS(realize_degree_matrix(zero, zero), PreconditionViolated);
}

TEST_CASE("realize_degree_matrix reproduces random line sums") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto [n, m] = testing::random_line_sums(rng, 7, 7);
        const auto b = realize_degree_matrix(n, m);
        CHECK(b.row_counts() == n);
        CHECK(b.col_counts() == m);
        CHECK(realize_degree_matrix(n, m) == b);
    }
}

TEST_CASE("realize_degree_matrix fails exactly when no matrix exists") {
    // Every (n, m) with r, c <= 3, entries <= 3 and equal sums.
    const auto seqs = parameter_sequences(3, 3);
    for (const auto& n : seqs) {
        for (const auto& m : seqs) {
            if (std::accumulate(n.begin(), n.end(), 0) != std::accumulate(m.begin(), m.end(), 0)) continue;
            const bool exists = count_matrices(n, m) > 0;
            bool built = true;
            try {
                realize_degree_matrix(n, m);
            } catch (const InfeasibleError&) {
                built = false;
            }
            CHECK(built == exists);
        }
    }
}

TEST_CASE("rebalance_columns examples") {
    const CellSet ok(2, 2, {{1, 1}, {2, 2}});
    CHECK(rebalance_columns(ok, 1) == ok);

    const CellSet stacked(3, 3, {{1, 1}, {2, 1}, {3, 1}});
    const auto out = rebalance_columns(stacked, 2);
    CHECK(out.col_counts() == std::vector<int>{1, 1, 1});
    CHECK(out.row_counts() == std::vector<int>{1, 1, 1});
    CHECK(out == CellSet(3, 3, {{1, 2}, {2, 3}, {3, 1}}));

    CHECK_THROWS_AS(rebalance_columns(CellSet(2, 2, {{1, 1}, {1, 2}, {2, 1}}), 1), PreconditionViolated);
    // A row longer than min(c, s).
    CHECK_THROWS_AS(rebalance_columns(CellSet(2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}}), 2), PreconditionViolated);
}

TEST_CASE("rebalance_columns fills empty columns") {
    // Stopping once every column is <= s would leave columns 2 and 3 empty.
    const CellSet b(3, 3, {{1, 1}, {2, 1}, {3, 1}});
    for (int s = 2; s <= 3; ++s) {
        const auto out = rebalance_columns(b, s);
        for (int x : out.col_counts()) CHECK(x >= 1);
    }
}

TEST_CASE("rebalance_columns keeps rows and lands every column in [1, s]") {
    std::mt19937 rng(19);
    int checked = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int rows = testing::uniform(rng, 1, 6);
        const int cols = testing::uniform(rng, 1, 6);
        const int s = testing::uniform(rng, 1, 6);
        const int cap = std::min(cols, s);
        std::vector<Cell> cells;
        for (int i = 1; i <= rows; ++i) {
            const int k = testing::uniform(rng, 0, cap);
            for (int j = 1; j <= k; ++j) cells.push_back({i, j});
        }
        const long long v = static_cast<long long>(cells.size());
        if (cells.empty() || v < cols || v > 1LL * cols * s) continue;
        const CellSet b(rows, cols, cells);
        const auto out = rebalance_columns(b, s);
        CHECK(out.row_counts() == b.row_counts());
        CHECK(out.size() == b.size());
        for (int x : out.col_counts()) {
            CHECK(x >= 1);
            CHECK(x <= s);
        }
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("distribute_rows") {
    CHECK(distribute_rows(5, 3, 2) == std::vector<int>{2, 2, 1});
    CHECK(distribute_rows(4, 4, 7) == std::vector<int>{1, 1, 1, 1});
    CHECK(distribute_rows(6, 3, 2) == std::vector<int>{2, 2, 2});
    CHECK_THROWS_AS(distribute_rows(7, 3, 2), PreconditionViolated);
    CHECK_THROWS_AS(distribute_rows(2, 3, 2), PreconditionViolated);
}

TEST_CASE("distribute_rows output meets the row-parameter conditions") {
    for (int r = 1; r <= 5; ++r) {
        for (int c = 1; c <= 5; ++c) {
            for (int s = 1; s <= 5; ++s) {
                for (int v = 1; v <= 25; ++v) {
                    if (!check_sizes(r, c, s, v).feasible) continue;
                    const auto n = distribute_rows(v, r, std::min(c, s));
                    CHECK(check_row_params(n, c, s).feasible);
                    CHECK(*std::max_element(n.begin(), n.end()) - *std::min_element(n.begin(), n.end()) <= 1);
                }
            }
        }
    }
}
