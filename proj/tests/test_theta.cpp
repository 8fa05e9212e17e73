#include <catch2/catch_amalgamated.hpp>

#include "cattri/theta.hpp"

using namespace cattri;

TEST_CASE("theta brute force point values") {
    CHECK(theta_bruteforce({1, 2, 0}) == 48);   // 32 + 16
    CHECK(theta_bruteforce({0, 2, 2}) == 0);    // empty sum
    CHECK(theta_bruteforce({1, 2, 1}) == 24);   // single term 1*2*3*C(4,1)*C(4,4)
    CHECK(theta_bruteforce({0, 2, 0}) == 36);   // 32 + 4
    for (unsigned long n = 1; n <= 10; ++n)
        for (unsigned long r = n; r <= n + 3; ++r)
            REQUIRE(theta_bruteforce({3, n, r}) == 0);
}

TEST_CASE("alpha coefficient point values") {
    CHECK(alpha_coeff(0, {1, 2, 0}) == Rat(4));   // (n^2+rn)^m
    CHECK(alpha_coeff(0, {0, 5, 3}) == Rat(1));   // m = 0
    CHECK(alpha_coeff(0, {2, 3, 1}) == Rat(144)); // (9+3)^2
    CHECK(alpha_coeff(1, {1, 2, 0}) == Rat(-1));  // -24 / (2)_3
    CHECK_THROWS_AS(alpha_coeff(4, {4, 2, 0}), std::domain_error);  // (0)_9 = 0
}

TEST_CASE("theta closed form equals brute force at the worked examples") {
    CHECK(theta_closed({1, 2, 0}) == Rat(48));
    CHECK(theta_closed({1, 2, 1}) == Rat(24));
    CHECK(theta_closed({0, 2, 0}) == Rat(36));
}

TEST_CASE("theta closed form equals brute force on a small grid") {
    for (unsigned long m = 0; m <= 4; ++m)
        for (unsigned long n = 1; n <= 12; ++n)
            for (unsigned long r = 0; r <= 6; ++r) {
                CAPTURE(m, n, r);
                REQUIRE(theta_check({m, n, r}).equal);
            }
}

TEST_CASE("pointwise interpolation expansion") {
    for (unsigned long m = 0; m <= 4; ++m)
        for (unsigned long n = 1; n <= 10; ++n)
            for (unsigned long r = 0; r < n && r <= 4; ++r)
                for (unsigned long l = 1; l + r <= n; ++l) {
                    CAPTURE(m, n, r, l);
                    REQUIRE(power_expansion_check(m, n, r, l).equal);
                }
}

TEST_CASE("binomial product relation and telescoped sum") {
    for (unsigned long n = 1; n <= 10; ++n)
        for (unsigned long k = 0; k < n && k <= 5; ++k)
            for (unsigned long r = 0; r < n && r <= 3; ++r) {
                CAPTURE(n, k, r);
                REQUIRE(telescoped_sum_check(n, k, r).equal);
                for (unsigned long l = 1; l + r <= n; ++l)
                    REQUIRE(binomial_product_relation_check(n, k, l, r).equal);
            }
}

TEST_CASE("bb odd power sum: worked values and the internal two-path gate") {
    CHECK(bb_odd_power_sum(1, 2, 0) == 96);   // 2^2*8 + 1*64
    CHECK(bb_odd_power_sum(1, 2, 1) == 54);   // 2*1*27
    CHECK(bb_odd_power_sum(1, 1, 0) == 8);    // single term 1*1*2^3
    CHECK(bb_odd_power_sum(4, 3, 3) == 0);    // empty: k + r <= n forces k <= 0
    CHECK(bb_odd_power_sum(2, 5, 7) == 0);    // r > n
    for (unsigned long m = 0; m <= 4; ++m)
        for (unsigned long n = 1; n <= 12; ++n)
            for (unsigned long r = 0; r <= 5; ++r)
                REQUIRE_NOTHROW(bb_odd_power_sum(m, n, r));
}

TEST_CASE("newkr family: cube, fifth, seventh against brute force") {
    auto at = [](unsigned long n, unsigned long r) { return newkr_family_check(n, r); };
    auto r21 = at(2, 1);
    CHECK(r21[0].equal);
    CHECK(r21[0].lhs == "54");
    auto r20 = at(2, 0);
    CHECK(r20[0].equal);
    CHECK(r20[0].lhs == "96");
    auto r30 = at(3, 0);
    CHECK(r30[1].equal);  // fifth power via the 1/(2n-3) closed form
    for (unsigned long n = 1; n <= 15; ++n)
        for (unsigned long r = 0; r + 1 <= n; ++r) {
            CAPTURE(n, r);
            for (const auto& res : at(n, r)) REQUIRE(res.equal);
        }
}

TEST_CASE("cc13g ninth-power closed form") {
    CHECK(cc13g_check(3).equal);
    CHECK(cc13g_check(4).equal);
    CHECK(cc13g_check(10).equal);
    CHECK_THROWS_AS(cc13g_check(2), std::invalid_argument);
    // n=3 worked value: 27900 / 20 = 1395 on both sides
    auto res = cc13g_check(3);
    CHECK(res.lhs == "1395");
}

TEST_CASE("printed first-values displays equal Theta at m+2") {
    for (unsigned mi = 0; mi <= 3; ++mi)
        for (unsigned long n = 1; n <= 12; ++n)
            for (unsigned long r = 0; r < n; ++r) {
                CAPTURE(mi, n, r);
                REQUIRE(theta_display_check(mi, n, r).equal);
            }
}
