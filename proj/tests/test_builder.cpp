#include "doctest.h"
#include "pls/builder.hpp"
#include "support.hpp"

using namespace pls;

namespace {

int line_max(const CellSet& b) {
    const auto rc = b.row_counts();
    const auto cc = b.col_counts();
    return std::max(*std::max_element(rc.begin(), rc.end()), *std::max_element(cc.begin(), cc.end()));
}

std::vector<Cell> cells_of(const PartialLatinSquare& p) {
    std::vector<Cell> out;
    for (const auto& t : p) out.push_back({t.row, t.col});
    return out;
}

} // namespace

TEST_CASE("fill_symbols examples") {
    const auto ls = fill_symbols(CellSet(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
    CHECK(ls.volume() == 4);
    CHECK(parameters_of(ls).symbols == 2);

    const auto three = fill_symbols(CellSet(2, 2, {{1, 1}, {1, 2}, {2, 1}}));
    CHECK(three == validate({{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));

    const auto diag = fill_symbols(CellSet(3, 3, {{1, 2}, {2, 3}, {3, 1}}));
    for (const auto& t : diag) CHECK(t.sym == 1);
}

TEST_CASE("fill_symbols uses exactly the max line count on random cell sets") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto b = testing::random_cells(rng, testing::uniform(rng, 1, 6), testing::uniform(rng, 1, 6),
                                             std::uniform_real_distribution<double>(0.1, 1.0)(rng));
        const auto p = fill_symbols(b);
        CHECK(cells_of(p) == b.cells());
        CHECK(parameters_of(p).symbols == line_max(b));
    }
}

TEST_CASE("fill_symbols layers strictly lower the remaining line counts") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 500; ++trial) {
        const int rows = testing::uniform(rng, 1, 6);
        const int cols = testing::uniform(rng, 1, 6);
        const auto b = testing::random_cells(rng, rows, cols, 0.6);
        int expected_layer = line_max(b);
        fill_symbols(b, [&](int p, const std::vector<Cell>& remaining) {
            CHECK(p == expected_layer--);
            std::vector<int> rc(static_cast<std::size_t>(rows), 0), cc(static_cast<std::size_t>(cols), 0);
            for (const auto& c : remaining) {
                ++rc[static_cast<std::size_t>(c.row - 1)];
                ++cc[static_cast<std::size_t>(c.col - 1)];
            }
            for (int x : rc) CHECK(x < p);
            for (int x : cc) CHECK(x < p);
        });
        CHECK(expected_layer == 0);
    }
}

TEST_CASE("split_symbols examples") {
    const auto q = validate({{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK(split_symbols(q, 2) == q);
    CHECK(split_symbols(q, 3) == validate({{1, 1, 2}, {1, 2, 3}, {2, 1, 1}}));

    const auto ls = validate({{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}});
    const auto four = split_symbols(ls, 4);
    CHECK(four == validate({{1, 1, 3}, {1, 2, 4}, {2, 1, 2}, {2, 2, 1}}));
    CHECK(parameters_of(four).sym_params == std::vector<int>{1, 1, 1, 1});

    CHECK_THROWS_AS(split_symbols(q, 1), PreconditionViolated);
    CHECK_THROWS_AS(split_symbols(q, 4), PreconditionViolated);
}

TEST_CASE("split_symbols keeps cells and line parameters") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = testing::random_pls(rng, 5, 5, 3, 30);
        const auto prof = parameters_of(p);
        for (int s = prof.symbols; s <= prof.volume; ++s) {
            const auto q = split_symbols(p, s);
            const auto qp = parameters_of(q);
            CHECK(cells_of(q) == cells_of(p));
            CHECK(qp.row_params == prof.row_params);
            CHECK(qp.col_params == prof.col_params);
            CHECK(qp.symbols == s);
        }
    }
}

TEST_CASE("build_theorem") {
    const std::vector<int> a{2, 1};
    const auto p = build_theorem(a, a, 2);
    const auto prof = parameters_of(p);
    CHECK(prof.volume == 3);
    CHECK(prof.row_params == a);
    CHECK(prof.col_params == a);
    CHECK(prof.symbols == 2);

    const std::vector<int> b{2, 2};
    const auto ls = build_theorem(b, b, 2);
    CHECK(ls.volume() == 4);
    CHECK(parameters_of(ls).symbols == 2);

    try {
        build_theorem(b, std::vector<int>{4}, 2);
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        CHECK_FALSE(e.report().feasible);
        CHECK_FALSE(e.report().find(cond::kGaleRyser)->satisfied);
    }
}

TEST_CASE("build_theorem honors the given row and column order") {
    const std::vector<int> n{1, 3, 2}, m{2, 1, 3};
    for (int s = 3; s <= 6; ++s) {
        const auto prof = parameters_of(build_theorem(n, m, s));
        CHECK(prof.row_params == n);
        CHECK(prof.col_params == m);
        CHECK(prof.symbols == s);
    }
}

TEST_CASE("build_proposition") {
    const auto p = build_proposition(std::vector<int>{2, 2, 2}, 3, 2);
    const auto prof = parameters_of(p);
    CHECK(prof.row_params == std::vector<int>{2, 2, 2});
    CHECK(prof.col_params == std::vector<int>{2, 2, 2});
    CHECK(prof.symbols == 2);

    CHECK(build_proposition(std::vector<int>{1, 1}, 2, 1) == validate({{1, 1, 1}, {2, 2, 1}}));
    CHECK_THROWS_AS(build_proposition(std::vector<int>{3, 1}, 2, 2), InfeasibleError);
}

TEST_CASE("build_corollary") {
    const auto prof = parameters_of(build_corollary(3, 3, 2, 6));
    CHECK(prof.rows == 3);
    CHECK(prof.cols == 3);
    CHECK(prof.symbols == 2);
    CHECK(prof.volume == 6);
    CHECK(prof.row_params == std::vector<int>{2, 2, 2});

    const auto ls = parameters_of(build_corollary(2, 2, 2, 4));
    CHECK(ls.row_params == std::vector<int>{2, 2});
    CHECK(ls.sym_params == std::vector<int>{2, 2});

    CHECK_THROWS_AS(build_corollary(2, 2, 2, 5), InfeasibleError);
}

TEST_CASE("builders are deterministic and emit normalized squares") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = testing::uniform(rng, 1, 6);
        const int c = testing::uniform(rng, 1, 6);
        const int s = testing::uniform(rng, 1, 6);
        const int v = testing::uniform(rng, 1, 36);
        if (!check_sizes(r, c, s, v).feasible) continue;
        const auto p = build_corollary(r, c, s, v);
        CHECK(p == build_corollary(r, c, s, v));
        CHECK(normalize(p) == p);
        const auto prof = parameters_of(p);
        CHECK(prof.rows == r);
        CHECK(prof.cols == c);
        CHECK(prof.symbols == s);
        CHECK(prof.volume == v);
    }
}
