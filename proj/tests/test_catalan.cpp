#include <catch2/catch_amalgamated.hpp>

#include "cattri/catalan.hpp"

using namespace cattri;

TEST_CASE("catalan row 6 matches the printed values") {
    const long expected[6] = {132, 165, 110, 44, 10, 1};
    TriangleRow row = catalan_row(6);
    REQUIRE(row.entries.size() == 6);
    for (unsigned long k = 1; k <= 6; ++k) REQUIRE(row.at(k) == expected[k - 1]);
}

TEST_CASE("catalan entry basics") {
    CHECK(catalan_entry(2, 1) == 2);
    CHECK(catalan_entry(3, 1) == 5);
    for (unsigned long n = 1; n <= 12; ++n) CHECK(catalan_entry(n, static_cast<long>(n)) == 1);
    CHECK_THROWS_AS(catalan_entry(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(catalan_entry(3, 4), std::invalid_argument);
    CHECK(catalan_value(3, 4) == 0);
    CHECK(catalan_value(3, 3) == 1);
}

TEST_CASE("n B(n,k) = k C(2n, n-k) exactly") {
    for (unsigned long n = 1; n <= 40; ++n)
        for (long k = 1; k <= static_cast<long>(n); ++k) {
            CAPTURE(n, k);
            REQUIRE(Int(n) * catalan_entry(n, k) ==
                    Int(k) * binom(2 * static_cast<long>(n), static_cast<long>(n) - k));
        }
}

TEST_CASE("shapiro row sum identity") {
    // spec's n=2 row: the direct-summation oracle gives 6 on both sides
    auto r1 = shapiro_row_sum_check(1);
    CHECK(r1.equal);
    CHECK(r1.lhs == "1");
    auto r2 = shapiro_row_sum_check(2);
    CHECK(r2.equal);
    CHECK(r2.lhs == "6");
    auto r3 = shapiro_row_sum_check(3);
    CHECK(r3.equal);
    CHECK(r3.lhs == "30");
    for (unsigned long n = 1; n <= 80; ++n) REQUIRE(shapiro_row_sum_check(n).equal);
}

TEST_CASE("row sums give half the central binomial") {
    for (unsigned long n = 1; n <= 80; ++n) {
        Int total = 0;
        for (unsigned long k = 1; k <= n; ++k) total += catalan_entry(n, k);
        REQUIRE(Int(2) * total == binom(2 * static_cast<long>(n), static_cast<long>(n)));
    }
}
