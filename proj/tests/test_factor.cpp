#include "galwit/factor.hpp"
#include "galwit/zp.hpp"

#include <doctest.h>

#include <random>

using namespace galwit;

namespace {

PolyQ P(const char* s) { return parse_poly(s); }

// Brute-force irreducibility over F_p by trial division by all monic
// polynomials of degree <= n/2.
bool brute_irreducible_mod(const PolyZp& f)
{
    std::uint64_t p = f.modulus();
    int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
        c[static_cast<std::size_t>(d)] = 1;
        while (true) {
            if (rem(f, PolyZp(p, c)).is_zero())
                return false;
            int i = 0;
            while (i < d && ++c[static_cast<std::size_t>(i)] == p)
                c[static_cast<std::size_t>(i++)] = 0;
            if (i == d)
                break;
        }
    }
    return true;
}

} // namespace

TEST_CASE("modular arithmetic and factorization")
{
    PolyZp f = PolyZp::from(P("x^4+1"), 7);
    auto facs = factor_squarefree(f);
    CHECK(facs.size() == 2);
    PolyZp prod(7, {1});
    for (const auto& g : facs) {
        prod = prod * g;
        CHECK(brute_irreducible_mod(g));
    }
    CHECK(prod == f);
    CHECK(factor_degrees(PolyZp::from(P("x^5-4*x+2"), 3)) == factor_degrees(PolyZp::from(P("x^5-4*x+2"), 3)));
    CHECK(roots(PolyZp::from(P("x^2-2"), 7)) == std::vector<std::uint64_t>{3, 4});
    CHECK_FALSE(is_squarefree(PolyZp::from(P("x^2+2*x+1"), 5)));

    std::mt19937_64 rng(21);
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
        for (int i = 0; i < 40; ++i) {
            int n = 1 + static_cast<int>(rng() % 7);
            PolyZp::Coeffs c(static_cast<std::size_t>(n) + 1);
            for (auto& x : c)
                x = rng() % p;
            c.back() = 1;
            PolyZp g(p, c);
            if (!is_squarefree(g))
                continue;
            auto fs = factor_squarefree(g);
            PolyZp pr(p, {1});
            std::vector<int> degs;
            for (const auto& h : fs) {
                pr = pr * h;
                CHECK(brute_irreducible_mod(h));
                degs.push_back(h.degree());
            }
            CHECK(pr == g);
            std::sort(degs.begin(), degs.end());
            CHECK(factor_degrees(g) == degs);
            PolyZp s(p), t(p);
            PolyZp d = xgcd(g, g.derivative(), s, t);
            CHECK(s * g + t * g.derivative() == d);
        }
    }
}

TEST_CASE("factorization over Q")
{
    auto f1 = factor_q(P("x^2-1"));
    CHECK(to_string(f1) == "(x - 1)(x + 1)");
    CHECK(factor_q(P("x^5-4*x+2")).is_irreducible());
    CHECK(factor_q(P("x^4+1")).is_irreducible());
    CHECK(is_irreducible(P("x^4+1")));
    CHECK_FALSE(is_irreducible(P("x^4+4")));
    CHECK_FALSE(is_irreducible(P("3")));

    auto c = factor_q(P("-6"));
    CHECK(c.unit == -6);
    CHECK(c.factors.empty());

    auto g = factor_q(P("2*x^5 - 2*x"));
    CHECK(g.unit == 2);
    CHECK(to_string(g) == "(2)(x - 1)(x)(x + 1)(x^2 + 1)");

    // Swinnerton-Dyer polynomial: irreducible but splits into quadratics mod every prime
    PolyQ sd = P("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576");
    CHECK(is_irreducible(sd));
    // x^12 - 1 splits into cyclotomic factors
    auto cyc = factor_q(P("x^12-1"));
    CHECK(cyc.factors.size() == 6);
    CHECK(cyc.expand() == P("x^12-1"));
    // repeated factors and rational coefficients
    PolyQ h = P("1/2*x^2 - 1") * P("x^2-1/4") * P("x^2-1/4") * P("x^3+x+1");
    auto fh = factor_q(h);
    CHECK(fh.expand() == h);
    CHECK(to_string(fh) == "(1/2)(x - 1/2)^2(x + 1/2)^2(x^2 - 2)(x^3 + x + 1)");
    CHECK_THROWS(factor_q(PolyQ()));
}

TEST_CASE("factor_q round trip on random products of irreducibles")
{
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> cc(-6, 6);
    int checked = 0;
    while (checked < 150) {
        int k = 1 + static_cast<int>(rng() % 4);
        PolyQ f = PolyQ::constant(Rational(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 3) + 1));
        std::vector<PolyQ> parts;
        for (int i = 0; i < k; ++i) {
            int d = 1 + static_cast<int>(rng() % 4);
            std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
            for (auto& x : c)
                x = cc(rng);
            c.back() = 1;
            parts.emplace_back(c);
            f *= parts.back();
        }
        auto fac = factor_q(f);
        REQUIRE(fac.expand() == f);
        for (const auto& [g, m] : fac.factors) {
            CHECK(g.lead() == 1);
            if (g.degree() >= 2)
                CHECK(rational_roots(g).empty());
            auto shifted = factor_q(g.compose(P("x+1")));
            CHECK(shifted.is_irreducible());
        }
        for (std::size_t i = 0; i + 1 < fac.factors.size(); ++i)
            CHECK(fac.factors[i].first != fac.factors[i + 1].first);
        ++checked;
    }
}

TEST_CASE("larger factorizations")
{
    // product of many small factors forces deep recombination
    PolyQ f = P("1");
    for (int k = 1; k <= 6; ++k)
        f *= PolyQ::monomial(1, 2) - PolyQ::constant(k * k + 1);
    auto fac = factor_q(f);
    CHECK(fac.factors.size() == 6);
    CHECK(fac.expand() == f);

    // a degree-24 norm-like polynomial: cyclotomic product
    PolyQ g = cyclotomic(35) * cyclotomic(13);
    auto fg = factor_q(g);
    CHECK(fg.factors.size() == 2);

    // large coefficients
    PolyQ big = P("x^3 - 1000000007") * P("x^4 + 123456789*x + 987654321");
    auto fb = factor_q(big);
    CHECK(fb.factors.size() == 2);
    CHECK(fb.expand() == big);
}

TEST_CASE("degree sieve")
{
    auto mask = detail::reachable_degrees({1, 2, 4}, 7);
    CHECK(mask == std::vector<char>{1, 1, 1, 1, 1, 1, 1, 1});
    auto m2 = detail::reachable_degrees({3, 3}, 6);
    CHECK(m2 == std::vector<char>{1, 0, 0, 1, 0, 0, 1});
}
