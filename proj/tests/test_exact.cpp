#include "galwit/error.hpp"
#include "galwit/exact.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace galwit;

namespace {

bool trial_division_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

} // namespace

TEST_CASE("rational arithmetic is exact and canonical")
{
    CHECK(rat_arith(Rational(1, 2), Rational(1, 3), ArithOp::Add) == Rational(5, 6));
    Rational half(2, 4);
    half.canonicalize();
    CHECK(to_string(half) == "1/2");
    CHECK(rat_arith(Rational(7, 3), Rational(3, 7), ArithOp::Mul) == 1);
    CHECK(rat_arith(Rational(1), Rational(3), ArithOp::Sub) == -2);
    CHECK(rat_arith(Rational(1), Rational(3), ArithOp::Div) == Rational(1, 3));

    try {
        rat_arith(Rational(1), Rational(0), ArithOp::Div);
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        auto add = [](const Rational& x, const Rational& y) { return rat_arith(x, y, ArithOp::Add); };
        auto mul = [](const Rational& x, const Rational& y) { return rat_arith(x, y, ArithOp::Mul); };
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(add(a, rat_arith(0, a, ArithOp::Sub)) == 0);
        if (a != 0)
            CHECK(mul(a, rat_arith(1, a, ArithOp::Div)) == 1);
        Rational r = mul(a, b);
        Integer g;
        mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        CHECK(g == 1);
        CHECK(r.get_den() >= 1);
    }
}

TEST_CASE("primality")
{
    CHECK(is_prime(Integer(13)));
    CHECK_FALSE(is_prime(Integer(1)));
    CHECK_FALSE(is_prime(Integer(0)));
    CHECK_FALSE(is_prime(Integer(91)));
    for (long n = 0; n <= 100000; ++n)
        REQUIRE(is_prime(Integer(n)) == trial_division_prime(n));
    CHECK(is_prime(Integer("341550071728289")));  // largest prime under the bound (sympy)
    CHECK_FALSE(is_prime(Integer("341550071728291")));
    CHECK_THROWS_AS(is_prime(Integer("341550071728321")), Error);
    CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
    CHECK_FALSE(is_prime(std::uint64_t{18446744073709551559ULL}));
}

TEST_CASE("next prime above")
{
    CHECK(next_prime_above(Integer(12)) == 13);
    CHECK(next_prime_above(Integer(2)) == 3);
    CHECK(next_prime_above(Integer(0)) == 2);
    std::vector<long> sieve;
    for (long n = 2; n < 2000; ++n)
        if (trial_division_prime(n))
            sieve.push_back(n);
    for (long b = 0; b < 1990; ++b) {
        long expect = *std::upper_bound(sieve.begin(), sieve.end(), b);
        REQUIRE(next_prime_above(Integer(b)) == expect);
    }
}

TEST_CASE("binomial coefficients")
{
    CHECK(binomial(Integer(5), Integer(2)) == 10);
    std::vector<std::vector<Integer>> pascal(61);
    for (int n = 0; n <= 60; ++n) {
        pascal[n].assign(n + 1, Integer(1));
        for (int k = 1; k < n; ++k)
            pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
        for (int k = 0; k <= n; ++k)
            REQUIRE(binomial(Integer(n), Integer(k)) == pascal[n][k]);
    }
    CHECK_THROWS_AS(binomial(Integer(3), Integer(4)), Error);
    CHECK_THROWS_AS(binomial(Integer(3), Integer(-1)), Error);
}

TEST_CASE("decimal round trip")
{
    for (const char* s : {"0", "-7", "123456789012345678901234567890", "1/2", "-3/7"})
        CHECK(to_string(parse_rational(s)) == s);
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1//2"), Error);
    CHECK_THROWS_AS(parse_integer("12a"), Error);
}

TEST_CASE("squares, totient, modular helpers")
{
    Integer r;
    CHECK(is_square(Integer(81), &r));
    CHECK(r == 9);
    CHECK_FALSE(is_square(Integer(-4)));
    CHECK(is_square(Rational(4, 9)));
    CHECK_FALSE(is_square(Rational(2, 9)));
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(invmod(3, 7) == 5);
    CHECK(reduce_mod(Rational(1, 2), 7) == 4);
    CHECK(reduce_mod(Integer(-1), 7) == 6);
    Rational q;
    Integer m("1000000007");
    CHECK(rational_reconstruct(Integer(reduce_mod(Rational(-3, 11), 1000000007)), m, q));
    CHECK(q == Rational(-3, 11));
}
