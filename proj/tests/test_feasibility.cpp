#include <numeric>

#include "doctest.h"
#include "pls/feasibility.hpp"
#include "pls/sweep.hpp"
#include "support.hpp"

using namespace pls;

TEST_CASE("dominance_check examples") {
    CHECK(dominance_check(std::vector<int>{2, 2}, std::vector<int>{2, 2}).holds);

    const auto col = dominance_check(std::vector<int>{2, 2}, std::vector<int>{4});
    CHECK_FALSE(col.holds);
    CHECK(col.k == 2);
    CHECK(col.l == 1);
    CHECK(col.lhs == 8);
    CHECK(col.rhs == 6);

    const auto d = dominance_check(std::vector<int>{3, 3, 3, 1}, std::vector<int>{4, 4, 1, 1});
    CHECK_FALSE(d.holds);
    CHECK(d.k == 3);
    CHECK(d.l == 2);
    CHECK(d.lhs == 17);
    CHECK(d.rhs == 16);
    CHECK_FALSE(testing::dominance_brute({3, 3, 3, 1}, {4, 4, 1, 1}));

    CHECK_THROWS_AS(dominance_check(std::vector<int>{2, 2}, std::vector<int>{3}), SumMismatch);
}

TEST_CASE("sorted prefixes decide the subset inequality") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto [n, m] = testing::random_equal_sums(rng, testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 5));
        CHECK(dominance_check(n, m).holds == testing::dominance_brute(n, m));
    }
}

TEST_CASE("check_construction examples") {
    const auto ok = check_construction(std::vector<int>{2, 1}, std::vector<int>{2, 1}, 2);
    CHECK(ok.feasible);
    CHECK(ok.conditions.size() == 3);

    const auto few = check_construction(std::vector<int>{2, 2}, std::vector<int>{2, 2}, 1);
    CHECK_FALSE(few.feasible);
    CHECK(few.violated() == std::vector<std::string>{cond::kSymbolRange});
    CHECK(*few.find(cond::kSymbolRange)->witness == "s=1 < max line 2");

    const auto many = check_construction(std::vector<int>{2, 2}, std::vector<int>{2, 2}, 5);
    CHECK(many.violated() == std::vector<std::string>{cond::kSymbolRange});
    CHECK(*many.find(cond::kSymbolRange)->witness == "s=5 > v=4");

    const auto sums = check_construction(std::vector<int>{2, 2}, std::vector<int>{3}, 3);
    CHECK_FALSE(sums.feasible);
    CHECK_FALSE(sums.find(cond::kLineSums)->satisfied);
}

TEST_CASE("check_construction ignores the order of n and m") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 500; ++trial) {
        auto [n, m] = testing::random_equal_sums(rng, testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 5));
        const int v = std::accumulate(n.begin(), n.end(), 0);
        const int s = testing::uniform(rng, 1, v + 1);
        const bool before = check_construction(n, m, s).feasible;
        std::shuffle(n.begin(), n.end(), rng);
        std::shuffle(m.begin(), m.end(), rng);
        CHECK(check_construction(n, m, s).feasible == before);
    }
}

TEST_CASE("check_row_params examples") {
    CHECK(check_row_params(std::vector<int>{2, 2, 2}, 3, 2).feasible);

    const auto cap = check_row_params(std::vector<int>{3, 1}, 2, 2);
    CHECK(cap.violated() == std::vector<std::string>{cond::kRowCap});
    CHECK(*cap.find(cond::kRowCap)->witness == "n_1=3 > min(c,s)=2");

    const auto vol = check_row_params(std::vector<int>{1}, 2, 1);
    CHECK(vol.violated() == std::vector<std::string>{cond::kVolumeRange});
}

TEST_CASE("check_sizes examples") {
    CHECK(check_sizes(2, 2, 2, 3).feasible);
    CHECK(check_sizes(3, 3, 3, 3).feasible);
    const auto big = check_sizes(2, 2, 2, 5);
    CHECK(big.violated() == std::vector<std::string>{cond::kVolumeUpper});
    CHECK(*big.find(cond::kVolumeUpper)->witness == "v=5 > rc=4");
    CHECK(check_sizes(1, 3, 2, 2).violated() == std::vector<std::string>{cond::kVolumeLower});
}

TEST_CASE("report verdict is the conjunction of its conditions") {
    for (const auto& n : parameter_sequences(3, 3)) {
        for (int c = 1; c <= 4; ++c) {
            for (int s = 1; s <= 4; ++s) {
                const auto r = check_row_params(n, c, s);
                CHECK(r.feasible == r.violated().empty());
            }
        }
    }
}

TEST_CASE("predicates reject nonpositive input") {
    CHECK_THROWS_AS(check_construction(std::vector<int>{0}, std::vector<int>{1}, 1), PreconditionViolated);
    CHECK_THROWS_AS(check_row_params(std::vector<int>{1}, 0, 1), PreconditionViolated);
    CHECK_THROWS_AS(check_sizes(1, 1, 1, 0), PreconditionViolated);
    CHECK_THROWS_AS(check_construction(std::vector<int>{}, std::vector<int>{1}, 1), PreconditionViolated);
}
