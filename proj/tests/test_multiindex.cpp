#include <catch2/catch_amalgamated.hpp>

#include "cattri/multiindex.hpp"

using namespace cattri;

TEST_CASE("cyclic product") {
    // single factor reduces to a central-style binomial
    for (long k = -4; k <= 4; ++k)
        CHECK(cyclic_product({3}, k) == binom(6, 3 + k));
    // k beyond the smallest entry kills some factor
    CHECK(cyclic_product({3, 3, 2, 3, 3}, 3) == 0);
    CHECK(cyclic_product({2, 5}, 3) == 0);
    CHECK_THROWS_AS(cyclic_product({}, 1), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_product({2, 0}, 1), std::invalid_argument);
}

TEST_CASE("S values from the paper") {
    CHECK(s_value(3, {3, 3, 2, 3, 3}) == make_rat(Int(10233), Int(2)));
    CHECK(s_value(5, {3, 3, 2, 2, 2}) == Rat(2448));
    CHECK(s_value(0, {1}) == make_rat(Int(1), Int(2)));
    DivisibilityVerdict v = s_sum(3, {3, 3, 2, 3, 3});
    CHECK(v.classification == Classification::half_integer);
    CHECK(s_sum(5, {3, 3, 2, 2, 2}).classification == Classification::integer);
}

TEST_CASE("S classification over a small grid") {
    std::vector<CompositionIndex> comps;
    for (unsigned long a = 1; a <= 4; ++a) {
        comps.push_back({a});
        for (unsigned long b = 1; b <= 4; ++b) {
            comps.push_back({a, b});
            for (unsigned long c = 1; c <= 4; ++c) comps.push_back({a, b, c});
        }
    }
    for (const auto& comp : comps)
        for (unsigned long r = 0; r <= 3; ++r) {
            CAPTURE(comp.size(), comp[0], r);
            REQUIRE(s_sum(r, comp).classification != Classification::other);
        }
}

TEST_CASE("S recurrence") {
    CHECK(s_recurrence_check(3, {3, 3, 2, 3, 3}).equal);
    CHECK(s_recurrence_check(0, {1, 1, 1}).equal);
    CHECK(s_recurrence_check(5, {3, 3, 2, 2, 2}).equal);
    CHECK_THROWS_AS(s_recurrence_check(1, {2, 2}), std::invalid_argument);
    for (unsigned long a = 1; a <= 3; ++a)
        for (unsigned long b = 1; b <= 3; ++b)
            for (unsigned long c = 1; c <= 3; ++c)
                for (unsigned long d = 1; d <= 3; ++d)
                    for (unsigned long r = 0; r <= 2; ++r) {
                        CAPTURE(a, b, c, d, r);
                        REQUIRE(s_recurrence_check(r, {a, b, c, d}).equal);
                    }
}

TEST_CASE("Pfaff-Saalschutz") {
    auto res = pfaff_check(1, 1, 1, 1);
    CHECK(res.equal);
    CHECK(res.lhs == "1");  // both sides resolve to 1
    CHECK(pfaff_check(2, 3, 4, 1).equal);
    // k above n1 empties the sum and kills the left side
    auto res2 = pfaff_check(2, 5, 7, 6);
    CHECK(res2.equal);
    CHECK(res2.lhs == "0");
    for (unsigned long n1 = 1; n1 <= 5; ++n1)
        for (unsigned long n2 = 1; n2 <= 5; ++n2)
            for (unsigned long n3 = 1; n3 <= 5; ++n3)
                for (long k = -6; k <= 6; ++k) {
                    CAPTURE(n1, n2, n3, k);
                    REQUIRE(pfaff_check(n1, n2, n3, k).equal);
                }
}

TEST_CASE("lambda sums and the GJZ alternating identity") {
    CHECK(lambda_sum_check({1, 1, 1}, 1).equal);
    CHECK(lambda_sum_check({2, 2, 2}, 1).equal);
    CHECK(lambda_sum_check({3, 2, 3}, 3).equal);
    CHECK(gjz_alternating_check({1, 1, 1}).equal);
    CHECK(gjz_alternating_check({2, 1, 2}).equal);
    CHECK(gjz_alternating_check({2, 2, 2, 2}).equal);
    CHECK_THROWS_AS(lambda_sum_check({2, 2, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(lambda_sum_check({2, 2}, 1), std::invalid_argument);
    for (unsigned long a = 1; a <= 3; ++a)
        for (unsigned long b = 1; b <= 3; ++b)
            for (unsigned long c = 1; c <= 3; ++c) {
                CAPTURE(a, b, c);
                REQUIRE(lambda_sum_check({a, b, c}, 1).equal);
                REQUIRE(lambda_sum_check({a, b, c}, 3).equal);
                REQUIRE(gjz_alternating_check({a, b, c}).equal);
            }
}

TEST_CASE("corollary presets: worked examples") {
    // 6.1 at (m,n,r,a) = (2,3,1,0): sum 120, divisor 60
    DivisibilityVerdict v61 = corollary_divisibility_report("6.1", {2, 3, 1, 0});
    CHECK(v61.sum == 120);
    CHECK(v61.divisor == 60);
    CHECK(v61.classification == Classification::integer);

    // 6.3 at (r,s,n,a) = (1,1,2,0): sum 210, divisor 30
    DivisibilityVerdict v63 = corollary_divisibility_report("6.3", {1, 1, 2, 0});
    CHECK(v63.sum == 210);
    CHECK(v63.divisor == 30);
    CHECK(v63.classification == Classification::integer);

    // 6.9 at (r,s,t,n,a) = (1,1,1,1,0): sum 224, divisor 112
    DivisibilityVerdict v69 = corollary_divisibility_report("rst-248n", {1, 1, 1, 1, 0});
    CHECK(v69.sum == 224);
    CHECK(v69.divisor == 112);
    CHECK(v69.classification == Classification::integer);

    // power-of-two corollary at (n,r,s,t) = (2,1,1,1): 56/7 = 8
    DivisibilityVerdict vn2n = corollary_divisibility_report("n2n", {2, 1, 1, 1});
    CHECK(vn2n.sum == 56);
    CHECK(vn2n.divisor == 7);
    CHECK(vn2n.classification == Classification::integer);

    CHECK_THROWS_AS(corollary_divisibility_report("6.99", {1}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_divisibility_report("6.1", {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_divisibility_report("n2n", {3, 1, 1, 1}),
                    std::invalid_argument);  // 3 is not a power of two
}

TEST_CASE("corollary divisibility across small grids") {
    for (long m = 1; m <= 3; ++m)
        for (long n = 1; n <= 3; ++n)
            for (long r = 1; r <= 2; ++r)
                for (long a = 0; a <= 2; ++a) {
                    CAPTURE(m, n, r, a);
                    REQUIRE(corollary_divisibility_report("6.1", {m, n, r, a})
                                .classification == Classification::integer);
                    REQUIRE(corollary_divisibility_report("6.5", {m, n, r, r, a})
                                .classification == Classification::integer);
                }
    for (long n = 1; n <= 3; ++n)
        for (long r = 1; r <= 2; ++r)
            for (long s = 1; s <= 2; ++s)
                for (long a = 0; a <= 2; ++a) {
                    CAPTURE(n, r, s, a);
                    REQUIRE(corollary_divisibility_report("6.6", {n, r, s, a})
                                .classification == Classification::integer);
                    REQUIRE(corollary_divisibility_report("6.7", {n, r, s, a})
                                .classification == Classification::integer);
                    REQUIRE(corollary_divisibility_report("6.8", {r, s, s, n, a})
                                .classification == Classification::integer);
                    REQUIRE(corollary_divisibility_report("6.9", {r, s, s, n, a})
                                .classification == Classification::integer);
                }
}

TEST_CASE("theorem restatement with the printed n_{m+1} = 0") {
    for (long r = 0; r <= 3; ++r) {
        REQUIRE(corollary_divisibility_report("6.4", {r, 1}).classification ==
                Classification::integer);
        REQUIRE(corollary_divisibility_report("6.4", {r, 2, 1}).classification ==
                Classification::integer);
        REQUIRE(corollary_divisibility_report("6.4", {r, 3, 2, 4}).classification ==
                Classification::integer);
        REQUIRE(corollary_divisibility_report("6.4", {r, 2, 2, 2, 2}).classification ==
                Classification::integer);
    }
}
