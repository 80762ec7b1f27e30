#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmf/arith.hpp"

using namespace qmf;

TEST_CASE("kronecker symbol basics") {
    CHECK(kronecker(-1, 7) == -1);  // 7 = 3 (mod 4)
    CHECK(kronecker(3, 3) == 0);    // shared factor
    CHECK(kronecker(2, 7) == 1);    // squares mod 7 are {1, 2, 4}
    CHECK(kronecker(0, 1) == 1);
    CHECK(kronecker(0, 5) == 0);
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(5, 0) == 0);
    CHECK(kronecker(-1, -1) == -1);

    // even lower argument: (16/n) is the indicator of odd n
    for (std::int64_t n = 1; n < 40; ++n) CHECK(kronecker(16, n) == (n % 2 ? 1 : 0));

    // quadratic residues mod 11 by direct squaring
    for (std::int64_t a = 1; a < 11; ++a) {
        bool residue = false;
        for (std::int64_t x = 1; x < 11; ++x)
            if ((x * x) % 11 == a) residue = true;
        CHECK(kronecker(a, 11) == (residue ? 1 : -1));
    }
}

TEST_CASE("kronecker multiplicativity") {
    for (std::int64_t a = -20; a <= 20; ++a) {
        for (std::int64_t m = 1; m <= 15; m += 2) {
            for (std::int64_t n = 1; n <= 15; n += 2) {
                CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
            }
        }
    }
    for (std::int64_t a = -12; a <= 12; ++a)
        for (std::int64_t b = -12; b <= 12; ++b)
            for (std::int64_t n = 1; n <= 15; n += 2)
                CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
}

TEST_CASE("quadchar") {
    QuadChar trivial = QuadChar::trivial();
    CHECK(trivial(7) == 1);
    CHECK(trivial(10) == 1);
    QuadChar mod16(16);
    CHECK(mod16(3) == 1);
    CHECK(mod16(4) == 0);
}

TEST_CASE("sigma") {
    CHECK(sigma1(1) == 1);
    CHECK(sigma_k(2, 3) == 9);
    CHECK(sigma1(6) == 12);
    CHECK(sigma1(9) == 13);
    CHECK(sigma_k(2, 9) == 513);
    CHECK_THROWS_AS(sigma_k(0, 1), std::invalid_argument);
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(103));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(1092727));  // 103^3
    CHECK(is_prime(2147483647ull));
}

TEST_CASE("r5 oracle") {
    CHECK(r5(0) == 1);
    CHECK(r5(1) == 10);
    CHECK(r5(2) == 40);
    CHECK(r5(9) == 250);

    auto table = r5_table(60);
    for (std::int64_t n = 0; n <= 60; ++n) CHECK(table[static_cast<std::size_t>(n)] == r5(n));
}

TEST_CASE("r_st oracle") {
    CHECK(r_st(0, 4, 4) == 16);    // all slots +-1
    CHECK(r_st(0, 4, 12) == 64);   // 16 sigma(3) at n = 1 in 8n+4
    for (std::int64_t n = 0; n <= 50; ++n)
        CHECK(r_st(0, 4, 8 * n + 4) == 16 * sigma1(2 * n + 1));
}

TEST_CASE("triangle numbers vs sigma") {
    CHECK(triangle_reps4(0) == 1);
    CHECK(triangle_reps4(1) == 4);
    CHECK(triangle_reps4(3) == 8);
    for (std::int64_t n = 0; n <= 100; ++n) CHECK(triangle_reps4(n) == sigma1(2 * n + 1));
}

TEST_CASE("divisor identity") {
    auto [l1, r1] = divisor_identity_check(1);
    CHECK(l1 == 1);
    CHECK(r1 == 1);
    auto [l2, r2] = divisor_identity_check(2);
    CHECK(l2 == 8);
    CHECK(r2 == 8);
    auto [l3, r3] = divisor_identity_check(3);
    CHECK(l3 == 28);
    CHECK(r3 == 28);
    for (std::int64_t n = 1; n <= 500; ++n) {
        auto [lhs, rhs] = divisor_identity_check(n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("phi14 closed form") {
    CHECK(phi14_closed_form(3) == 400);
    CHECK(phi14_closed_form(5) == 1936);
    CHECK(phi14_closed_form(7) == 5392);
    CHECK_THROWS_AS(phi14_closed_form(9), std::invalid_argument);
    CHECK_THROWS_AS(phi14_closed_form(2), std::invalid_argument);
}

TEST_CASE("divisors and factorize") {
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    auto f = factorize(360);
    CHECK(f == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
}
