#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ffpnt/arith.hpp"

using namespace ffpnt;

namespace {

// Independent oracle: enumerate set partitions of {0..n-1} one by one as
// restricted growth strings and tally them by block count. No shared code
// with the recurrence under test.
std::vector<long> partitions_by_block_count(int n) {
    std::vector<long> tally(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> a(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int idx, int mx) -> void {
        if (idx == n) {
            ++tally[static_cast<std::size_t>(mx) + 1];
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            a[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, std::max(mx, v));
        }
    };
    rec(rec, 0, -1);
    return tally;
}

}  // namespace

TEST_CASE("mobius values and errors") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(2) == -1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(49) == 0);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
    CHECK_THROWS_AS(mobius(-3), std::invalid_argument);
}

TEST_CASE("mobius divisor sums vanish except at 1") {
    for (std::int64_t n = 1; n <= 10000; ++n) {
        std::int64_t s = 0;
        for (std::int64_t d : divisors(n)) s += mobius(d);
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(7) == std::vector<std::int64_t>{1, 7});
    auto d60 = divisors(60);
    CHECK(d60.size() == 12);
    CHECK(d60.front() == 1);
    CHECK(d60.back() == 60);
    CHECK(std::is_sorted(d60.begin(), d60.end()));
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("stirling2 base cases and small values") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(4, 0) == 0);
    CHECK(stirling2(3, 5) == 0);
}

TEST_CASE("stirling2 agrees with brute-force partition enumeration") {
    for (int n = 0; n <= 10; ++n) {
        auto tally = partitions_by_block_count(n);
        for (int k = 0; k <= n; ++k) {
            INFO("n=", n, " k=", k);
            CHECK(stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k)) ==
                  (n == 0 ? Int(k == 0 ? 1 : 0) : Int(tally[static_cast<std::size_t>(k)])));
        }
    }
    // spot checks against the recurrence at larger n
    for (unsigned n = 1; n <= 20; ++n)
        for (unsigned k = 1; k <= n; ++k)
            CHECK(stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1));
}

TEST_CASE("stirling defining identity, including negative arguments") {
    CHECK(stirling2_defining_identity_check(2, 3));
    CHECK(stirling2_defining_identity_check(0, 5));
    CHECK(stirling2_defining_identity_check(3, -2));
    for (unsigned n = 0; n <= 12; ++n)
        for (long t = -20; t <= 20; ++t) {
            INFO("n=", n, " t=", t);
            CHECK(stirling2_defining_identity_check(n, Int(t)));
        }
}

TEST_CASE("stirling polynomial coefficients") {
    auto p0 = stirling_poly(0);
    CHECK(p0.coeffs == std::vector<Int>{1});
    auto p1 = stirling_poly(1);
    CHECK(p1.coeffs == std::vector<Int>{0, 1});
    auto p2 = stirling_poly(2);
    CHECK(p2.coeffs == std::vector<Int>{0, -1, 2});
    auto p3 = stirling_poly(3);
    CHECK(p3.coeffs == std::vector<Int>{0, 1, -6, 6});

    for (unsigned j = 0; j <= 30; ++j) {
        auto p = stirling_poly(j);
        REQUIRE(p.coeffs.size() == j + 1);
        CHECK(p.coeffs[j] == factorial(j));
        if (j >= 1) CHECK(p.coeffs[0] == 0);
        for (unsigned k = 0; k <= j; ++k) {
            if (p.coeffs[k] == 0) continue;
            int expected_sign = ((j - k) % 2 == 0) ? 1 : -1;
            CHECK(sgn(p.coeffs[k]) == expected_sign);
        }
    }
}

TEST_CASE("stirling polynomial evaluation") {
    CHECK(eval_stirling_poly(1, Rat(2)) == Rat(2));
    CHECK(eval_stirling_poly(2, Rat(2)) == Rat(6));
    CHECK(eval_stirling_poly(1, make_rat(3, 2)) == make_rat(3, 2));
    CHECK(eval_stirling_poly(0, make_rat(-7, 3)) == Rat(1));
    // Horner result equals direct coefficient sum
    Rat x = make_rat(5, 3);
    for (unsigned j = 0; j <= 12; ++j) {
        auto p = stirling_poly(j);
        Rat direct = 0;
        for (unsigned k = 0; k <= j; ++k) direct += Rat(p.coeffs[k]) * rat_pow(x, k);
        CHECK(eval_stirling_poly(j, x) == direct);
    }
}

TEST_CASE("sqrt_upper_rational contract") {
    Rat r16 = sqrt_upper_rational(16, 1);
    CHECK(r16 >= 4);
    CHECK(r16 <= 5);
    CHECK(r16 == Rat(4));  // perfect squares come back exact

    Rat r2 = sqrt_upper_rational(2, 1000);
    CHECK(r2 * r2 >= 2);
    Rat lower = r2 - make_rat(1, 1000);
    CHECK(lower * lower < 2);

    Rat r0 = sqrt_upper_rational(0, 7);
    CHECK(r0 >= 0);
    CHECK(r0 <= make_rat(1, 7));

    CHECK_THROWS_AS(sqrt_upper_rational(-1, 10), std::invalid_argument);
    CHECK_THROWS_AS(sqrt_upper_rational(5, 0), std::invalid_argument);
}

TEST_CASE("sqrt_upper_rational randomized bounds up to 2^128") {
    std::mt19937_64 rng(20240817);
    Int D = 1000000;
    for (int i = 0; i < 1000; ++i) {
        int bits = static_cast<int>(rng() % 128) + 1;
        Int x = 0;
        for (int b = 0; b < bits; b += 32) x = (x << 32) | static_cast<unsigned long>(rng() & 0xffffffffull);
        x %= (Int(1) << bits);
        if (x < 0) x = -x;
        Rat r = sqrt_upper_rational(x, D);
        CHECK(r >= 0);
        CHECK(r * r >= x);
        if (x > 0) {
            Rat lower = r - make_rat(1, D);
            CHECK(lower * lower < x);
        }
    }
}

TEST_CASE("surd sign rule") {
    // 3 - 2 sqrt(2) > 0, 2 - 3 sqrt(2) < 0, exact zero at 2 - sqrt(4)
    CHECK(surd_nonneg(Rat(3), Rat(-2), 2));
    CHECK_FALSE(surd_nonneg(Rat(2), Rat(-3), 2));
    CHECK(surd_nonneg(Rat(-2), Rat(3), 2));
    CHECK_FALSE(surd_nonneg(Rat(-3), Rat(2), 2));
    CHECK(surd_nonneg(Rat(2), Rat(-1), 4));
    CHECK(surd_nonneg(Rat(-2), Rat(1), 4));
    CHECK(surd_nonneg(Rat(0), Rat(0), 7));
    CHECK_FALSE(surd_nonneg(Rat(-1), Rat(0), 7));
}

TEST_CASE("make_rat canonical form") {
    Rat r = make_rat(2, -4);
    CHECK(r.get_num() == -1);
    CHECK(r.get_den() == 2);
    CHECK(make_rat(0, 5) == 0);
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(make_rat(105, 2)) == "5.2500000000000000000e+01");
    CHECK(decimal_string(make_rat(-39, 16)) == "-2.4375000000000000000e+00");
    CHECK(decimal_string(Rat(0)) == "0");
    CHECK(decimal_string(make_rat(1, 3)) == "3.3333333333333333333e-01");
    CHECK(decimal_string(Rat(1)) == "1.0000000000000000000e+00");
    CHECK(decimal_string(make_rat(1, 1000000)) == "1.0000000000000000000e-06");
    CHECK(decimal_string(Rat(Int("123456789012345678901234567890"))) ==
          "1.2345678901234567890e+29");
    CHECK(decimal_string(make_rat(2, 3), 4) == "6.666e-01");
}
