#include <catch2/catch_amalgamated.hpp>

#include "cattri/integer.hpp"

#include <random>
#include <thread>

using namespace cattri;

TEST_CASE("binom small values and conventions") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(12, 6) == 924);
    CHECK_THROWS_AS(binom(-1, 0), std::invalid_argument);
}

TEST_CASE("binom symmetry and Pascal recurrence on the documented grid") {
    for (long n = 1; n <= 200; ++n) {
        for (long k = 0; k <= n; ++k) {
            CAPTURE(n, k);
            REQUIRE(binom(n, k) == binom(n, n - k));
            REQUIRE(binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1));
        }
    }
}

TEST_CASE("binom_gen falling factorial semantics") {
    CHECK(binom_gen(-3, 2) == 6);   // (-3)(-4)/2!
    CHECK(binom_gen(-2, 1) == -2);
    CHECK(binom_gen(7, 0) == 1);
    CHECK(binom_gen(-5, 0) == 1);
    CHECK(binom_gen(3, -2) == 0);
    // agreement with binom on the nonnegative range
    for (long a = 0; a <= 40; ++a)
        for (long k = 0; k <= 45; ++k) REQUIRE(binom_gen(a, k) == binom(a, k));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(2, 3) == 24);
    CHECK(pochhammer(7, 0) == 1);
    CHECK(pochhammer(-7, 0) == 1);
    CHECK(pochhammer(-2, 3) == 0);   // hits the zero factor at a+2
    CHECK(pochhammer(-3, 2) == 6);   // (-3)(-2)
    CHECK(pochhammer(1, 5) == 120);  // (1)_5 = 5!
}

TEST_CASE("bit_count") {
    CHECK(bit_count(255) == 8);
    CHECK(bit_count(256) == 1);
    CHECK(bit_count(1) == 1);
    CHECK_THROWS_AS(bit_count(0), std::invalid_argument);
}

TEST_CASE("p_adic_valuation") {
    CHECK(p_adic_valuation(Int(8), 2) == 3);
    CHECK(p_adic_valuation(Int(9), 2) == 0);
    CHECK(p_adic_valuation(Int(462), 7) == 1);  // 462 = 2*3*7*11
    CHECK(p_adic_valuation(Int(-24), 2) == 3);
    CHECK_THROWS_AS(p_adic_valuation(Int(0), 2), std::invalid_argument);
    CHECK_THROWS_AS(p_adic_valuation(Int(8), 4), std::invalid_argument);
}

TEST_CASE("p_adic_valuation is additive over products") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> dist(1, 1'000'000);
    for (int trial = 0; trial < 200; ++trial) {
        Int m(dist(rng)), n(dist(rng));
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
            REQUIRE(p_adic_valuation(m * n, p) ==
                    p_adic_valuation(m, p) + p_adic_valuation(n, p));
        }
    }
}

TEST_CASE("rational arithmetic round-trips and classification") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-5000, 5000);
    for (int trial = 0; trial < 300; ++trial) {
        long a = dist(rng), b = dist(rng);
        if (b == 0) continue;
        Rat q = make_rat(Int(a), Int(b));
        REQUIRE(q * Rat(Int(b)) == Rat(Int(a)));
        REQUIRE(q.get_den() > 0);
        REQUIRE(gcd_int(q.get_num(), q.get_den()) == 1);
    }
    CHECK(is_integer(make_rat(Int(6), Int(3))));
    CHECK(is_half_integer(make_rat(Int(7), Int(2))));
    CHECK_FALSE(is_half_integer(make_rat(Int(7), Int(4))));
    CHECK(to_string(make_rat(Int(10233), Int(2))) == "10233/2");
    CHECK(to_string(make_rat(Int(-4), Int(2))) == "-2");
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("divide_exact") {
    CHECK(divide_exact(Int(84), Int(7)) == 12);
    CHECK_THROWS_AS(divide_exact(Int(85), Int(7)), std::logic_error);
    CHECK_THROWS_AS(divide_exact(Int(85), Int(0)), std::domain_error);
}

TEST_CASE("factorial table invariants and concurrent extension") {
    FactorialTable table;
    CHECK(table.get(0) == 1);
    CHECK(table.get(5) == 120);
    for (unsigned long i = 1; i <= 40; ++i)
        REQUIRE(table.get(i) == table.get(i - 1) * i);

    FactorialTable shared;
    std::vector<std::thread> pool;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&shared, &ok, t] {
            for (unsigned long i = 0; i <= 300; ++i) {
                Int expected = 1;
                for (unsigned long j = 2; j <= i + static_cast<unsigned long>(t); ++j)
                    expected *= j;
                if (shared.get(i + static_cast<unsigned long>(t)) != expected)
                    ok.store(false);
            }
        });
    for (auto& th : pool) th.join();
    CHECK(ok.load());
}

TEST_CASE("pow helpers") {
    CHECK(pow_int(Int(0), 0) == 1);  // empty product convention
    CHECK(pow_int(Int(3), 4) == 81);
    CHECK(pow_rat(Rat(2), -3) == make_rat(Int(1), Int(8)));
    CHECK(pow_rat(make_rat(Int(2), Int(3)), 2) == make_rat(Int(4), Int(9)));
    CHECK_THROWS_AS(pow_rat(Rat(0), -1), std::domain_error);
}
