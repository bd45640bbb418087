#include "galwit/error.hpp"
#include "galwit/poly.hpp"

#include <doctest.h>

#include <random>

using namespace galwit;

namespace {

PolyQ P(const char* s, char var = 'x') { return parse_poly(s, var); }

PolyQ random_poly(std::mt19937_64& rng, int max_deg, long height)
{
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> cc(-height, height);
    std::vector<Rational> c(static_cast<std::size_t>(dd(rng)) + 1);
    for (auto& x : c)
        x = cc(rng);
    return PolyQ(c);
}

// Sylvester matrix determinant by fraction-free rational elimination.
Rational sylvester_resultant(const PolyQ& f, const PolyQ& g)
{
    int m = f.degree(), n = g.degree();
    int size = m + n;
    if (size == 0)
        return 1;
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            a[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            a[n + i][i + j] = g.coeff(n - j);
    Rational det = 1;
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < size; ++r) {
            Rational fct = a[r][col] / a[col][col];
            for (int k = col; k < size; ++k)
                a[r][k] -= fct * a[col][k];
        }
    }
    return det;
}

struct Frozen {
    std::vector<long> coeffs;
    int real_roots;
    const char* disc;
};

// Real root counts and discriminants computed with sympy.
const Frozen kFrozen[] = {
    {{2, 7, -9, 5, -2, -8}, 3, "-13067671372"},
    {{-6, 2, 6, -2}, 3, "4096"},
    {{8, -6, 9, -2, -9, -3, 4, -1}, 1, "-188752400021248"},
    {{3, -4, -7, -5}, 1, "-10015"},
    {{2, 4}, 1, "1"},
    {{-5, -1, -7, 1}, 1, "-8112"},
    {{9, -9, 1, -7, 0, 2}, 3, "-1595855808"},
    {{6, 1, -4, 6, 6, -4}, 1, "1898211536"},
    {{3, -9, 8, 4, 2, 3, 9}, 0, "-6667322078736"},
    {{-3, -6, -2, 5}, 1, "-4947"},
    {{7, 2, 7, -1, 5, -6, 9}, 0, "-42517902716991"},
    {{0, -8, 4, -7, -3, 1, 7}, 2, "3526129283072"},
    {{-5, 1, -1, 8, -7, 0, 1}, 2, "1699655237"},
    {{-4, -7, -5, 0, 6, -4}, 1, "751398880"},
    {{-8, -2, 2, -1, 5, 4, -5, -8}, 1, "-42180670774829344"},
    {{-5, 9, -5, 4, -6}, 0, "2790044"},
    {{4, 2, -5, -8}, 1, "-19532"},
    {{0, -5, 5, -4, 7, 5, 6, 1}, 3, "1759176624125"},
    {{-1, 0, 6, 3, -5, -6, 3, 8, -4}, 4, "20790283361136"},
    {{1, -4, -7, 6, -1, 7, 8, 7, 2}, 4, "9080747970457189"},
    {{2, 9, -8}, 2, "145"},
    {{-4, 9, -9, 6, 8, -1, 1}, 2, "80291776336"},
    {{5, 0, 7, 2, 2, -1}, 1, "18781705"},
    {{4, 2, -4, 5, 2, 1, 7}, 2, "181520786288"},
    {{7, -4, -3, 2}, 1, "-856"},
    {{0, -7, 4, -4, 9, 7, 4, 0, 8}, 2, "-5190879610820112832"},
};

PolyQ from_vec(const std::vector<long>& c)
{
    std::vector<Rational> r(c.begin(), c.end());
    return PolyQ(r);
}

} // namespace

TEST_CASE("canonical representation")
{
    PolyQ z(std::vector<Rational>{0, 0, 0});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z == PolyQ());
    PolyQ f(std::vector<Rational>{1, 2, 0});
    CHECK(f.degree() == 1);
    CHECK(f.coeffs().size() == 2);
}

TEST_CASE("arithmetic, division, composition")
{
    CHECK(P("x+1") * P("x-1") == P("x^2-1"));
    auto [q, r] = divrem(P("x^2-1"), P("x-1"));
    CHECK(q == P("x+1"));
    CHECK(r.is_zero());
    CHECK(P("x^2").compose(P("x+1")) == P("x^2+2*x+1"));
    CHECK(poly_arith(P("x^2"), P("x+1"), PolyOp::Compose) == P("x^2+2*x+1"));
    CHECK(poly_arith(P("x"), P("1"), PolyOp::Sub) == P("x-1"));
    CHECK_THROWS_AS(divrem(P("x"), PolyQ()), Error);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        PolyQ f = random_poly(rng, 8, 20), g = random_poly(rng, 5, 20);
        if (g.is_zero())
            continue;
        auto [qq, rr] = divrem(f, g);
        CHECK(qq * g + rr == f);
        CHECK(rr.degree() < g.degree());
    }
}

TEST_CASE("gcd")
{
    CHECK(gcd_q(P("x^2-1"), P("x-1")) == P("x-1"));
    CHECK(gcd_q(P("x^2+1"), P("x^2-1")) == P("1"));
    CHECK(gcd_q(P("2*x+4"), PolyQ()) == P("x+2"));
    CHECK_THROWS_AS(gcd_q(PolyQ(), PolyQ()), Error);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        PolyQ f = random_poly(rng, 4, 9), g = random_poly(rng, 4, 9), h = random_poly(rng, 3, 9);
        if (f.is_zero() || g.is_zero() || h.is_zero())
            continue;
        PolyQ u, v;
        PolyQ d = xgcd_q(f * h, g * h, u, v);
        CHECK(d == gcd_q(f * h, g * h));
        CHECK(u * (f * h) + v * (g * h) == d);
        CHECK(divrem(d, h.monic()).second.is_zero());
    }
}

TEST_CASE("resultant")
{
    CHECK(resultant(P("x-2"), P("x-3")) == -1);
    CHECK(resultant(P("x^2-2"), P("x^2-2")) == 0);
    CHECK(resultant(P("x^2-2"), P("x^2-3")) == 1);
    CHECK_THROWS_AS(resultant(PolyQ(), P("x")), Error);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        PolyQ f = random_poly(rng, 6, 5), g = random_poly(rng, 6, 5);
        if (f.is_zero() || g.is_zero())
            continue;
        if (i % 3 == 0) {
            PolyQ h = random_poly(rng, 2, 5);
            if (!h.is_zero()) {
                f *= h;
                g *= h;
            }
        }
        if (i % 5 == 0)
            f *= Rational(3, 7);
        Rational r = resultant(f, g);
        CHECK(r == sylvester_resultant(f, g));
        CHECK((r == 0) == (gcd_q(f, g).degree() >= 1));
    }
}

TEST_CASE("discriminant")
{
    CHECK(discriminant(P("x^2-2")) == 8);
    CHECK(discriminant(P("x^3-2")) == -108);
    CHECK(discriminant(P("x^3-3*x-1")) == 81);
    CHECK_THROWS_AS(discriminant(P("5")), Error);
    for (const auto& fr : kFrozen)
        CHECK(discriminant(from_vec(fr.coeffs)) == Rational(fr.disc));
    // quadratic formula on random quadratics
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> cc(-50, 50);
    for (int i = 0; i < 100; ++i) {
        long a = cc(rng), b = cc(rng), c = cc(rng);
        if (a == 0)
            continue;
        CHECK(discriminant(PolyQ::from_ints({c, b, a})) == b * b - 4 * a * c);
    }
}

TEST_CASE("Sturm real root counts")
{
    CHECK(sturm_real_roots(P("x^2+1")) == 0);
    CHECK(sturm_real_roots(P("x^3-2")) == 1);
    CHECK(sturm_real_roots(P("x^5-4*x+2")) == 3);
    CHECK(sturm_real_roots(P("-x^5+4*x-2")) == 3);
    CHECK(sturm_real_roots(P("1/3*x^2-3")) == 2);
    CHECK_THROWS_AS(sturm_real_roots(P("(x-1)") * P("x-1")), Error);
    for (const auto& fr : kFrozen)
        CHECK(sturm_real_roots(from_vec(fr.coeffs)) == fr.real_roots);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        PolyQ f = random_poly(rng, 9, 10);
        if (f.degree() < 1)
            continue;
        f = squarefree_part(f);
        int n = sturm_real_roots(f);
        CHECK(n <= f.degree());
        CHECK(n % 2 == f.degree() % 2);
        if (f.degree() % 2 == 1)
            CHECK(n >= 1);
    }
}

TEST_CASE("Eisenstein")
{
    CHECK(eisenstein_witness(P("x^5-4*x+2")) == Integer(2));
    for (int n = 1; n <= 12; ++n)
        CHECK(eisenstein_witness(PolyQ::monomial(1, n) - P("2")) == Integer(2));
    CHECK_FALSE(eisenstein_witness(P("x^2-1")).has_value());
    CHECK_FALSE(eisenstein_witness(P("x^2-4")).has_value());
    CHECK(eisenstein_witness(P("x^3+3*x+6")) == Integer(3));
    CHECK_THROWS_AS(eisenstein_witness(P("1/2*x+1")), Error);
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic(1) == P("x-1"));
    CHECK(cyclotomic(4) == P("x^2+1"));
    CHECK(cyclotomic(5) == P("x^4+x^3+x^2+x+1"));
    CHECK(cyclotomic(12) == P("x^4-x^2+1"));
    for (long n = 1; n <= 100; ++n) {
        PolyQ phi = cyclotomic(n);
        CHECK(phi.degree() == euler_phi(n));
        CHECK(divrem(PolyQ::monomial(1, static_cast<int>(n)) - P("1"), phi).second.is_zero());
    }
    // Phi_105 is the first with a coefficient of absolute value 2
    bool has_two = false;
    PolyQ phi105 = cyclotomic(105);
    for (const auto& c : phi105.coeffs())
        has_two = has_two || abs(c) == 2;
    CHECK(has_two);
}

TEST_CASE("squarefree decomposition and rational roots")
{
    PolyQ f = P("x-1") * P("x-1") * P("x-1") * P("x+2") * P("x^2+1") * P("x^2+1");
    auto dec = squarefree_decomposition(f * Rational(5));
    REQUIRE(dec.size() == 3);
    CHECK(dec[0] == std::make_pair(P("x+2"), 1));
    CHECK(dec[1] == std::make_pair(P("x^2+1"), 2));
    CHECK(dec[2] == std::make_pair(P("x-1"), 3));
    CHECK(squarefree_part(f) == P("x-1") * P("x+2") * P("x^2+1"));
    auto roots = rational_roots(P("6*x^3-5*x^2-2*x+1"));
    CHECK(roots == std::vector<Rational>{Rational(-1, 2), Rational(1, 3), Rational(1)});
    CHECK(rational_roots(P("x^2-2")).empty());
    CHECK(rational_roots(P("x^3")) == std::vector<Rational>{0});
}

TEST_CASE("printing and parsing")
{
    CHECK(to_string(P("x^5 - 4*x + 2")) == "x^5 - 4*x + 2");
    PolyQ g = P("1/2*x + 1/3");
    CHECK(g.coeff(0) == Rational(1, 3));
    CHECK(g.coeff(1) == Rational(1, 2));
    CHECK(to_string(g) == "1/2*x + 1/3");
    CHECK(to_string(P("-x^2+1")) == "-x^2 + 1");
    CHECK(to_string(PolyQ()) == "0");
    CHECK(to_string(P("  x ^ 2 -  x ")) == "x^2 - x");
    CHECK(P("x*x") == P("x^2"));
    CHECK_THROWS_AS(P("2x"), Error);
    CHECK(to_string(P("y^2-2", 'y'), 'y') == "y^2 - 2");
    for (const char* bad : {"x^^2", "", "x^", "1/0*x", "+", "x y", "3*", "x^-1", "(x)", "z"}) {
        try {
            parse_poly(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK((e.kind() == ErrorKind::SyntaxError || e.kind() == ErrorKind::DivisionByZero));
        }
    }
    try {
        parse_poly("x^^2");
    } catch (const Error& e) {
        CHECK(e.detail() == 2);
    }

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> cc(-1000000, 1000000), dd(1, 1000000);
    for (int i = 0; i < 1000; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(rng() % 11));
        for (auto& x : c) {
            x = Rational(cc(rng), (rng() % 3 == 0) ? dd(rng) : 1);
            x.canonicalize();
        }
        PolyQ f(c);
        std::string s = to_string(f);
        REQUIRE(parse_poly(s) == f);
        CHECK(to_string(parse_poly(s)) == s);
    }
}

TEST_CASE("bivariate specialization")
{
    Bivariate f = parse_bivariate("y^2 - x");
    auto s = bivariate_specialize(f, 2);
    CHECK(s.poly == P("y^2-2", 'y'));
    CHECK_FALSE(s.degenerate);
    CHECK(bivariate_specialize(f, 4).poly == P("y^2-4", 'y'));
    CHECK(bivariate_specialize(parse_bivariate("y^5-4*y+x"), 2).poly == P("y^5-4*y+2", 'y'));
    auto d = bivariate_specialize(parse_bivariate("x*y^2 + y - 1"), 0);
    CHECK(d.degenerate);
    CHECK(d.poly == P("y-1", 'y'));
    CHECK(to_string(parse_bivariate("y^2 - x")) == to_string(f));
    CHECK_THROWS_AS(parse_bivariate("y^2 - z"), Error);
}
