#include "galwit/error.hpp"
#include "galwit/factor.hpp"
#include "galwit/numfield.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

using namespace galwit;

namespace {

PolyQ P(const char* s) { return parse_poly(s); }

ErrorKind kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

NFElement random_element(const NumberField& k, std::mt19937_64& rng, int spread = 3)
{
    std::vector<Rational> c(static_cast<std::size_t>(k.degree()));
    for (auto& x : c)
        x = Rational(static_cast<long>(rng() % (2 * spread + 1)) - spread, static_cast<long>(1 + rng() % 3));
    for (auto& x : c)
        x.canonicalize();
    return k.from_coords(c);
}

// Characteristic polynomial of a through resultants over Q alone:
// chi(x0) = Res_t(m(t), x0 - a(t)), interpolated at 0..D.
PolyQ char_poly_oracle(const NFElement& a)
{
    const PolyQ& m = a.field().min_poly();
    const int d = a.field().degree();
    PolyQ out;
    for (int i = 0; i <= d; ++i) {
        Rational yi = resultant(m, PolyQ::constant(i) - a.as_poly());
        PolyQ basis = PolyQ::constant(yi);
        for (int j = 0; j <= d; ++j)
            if (j != i)
                basis = basis * (PolyQ::x() - PolyQ::constant(j)) * PolyQ::constant(Rational(1) / Rational(i - j));
        out = out + basis;
    }
    return out;
}

PolyQ power(const PolyQ& f, int e)
{
    PolyQ r = PolyQ::constant(1);
    for (int i = 0; i < e; ++i)
        r = r * f;
    return r;
}

// Splitting degree of a cubic from its factorization and discriminant.
long cubic_splitting_oracle(const PolyQ& f)
{
    auto fac = factor_q(f);
    if (fac.factors.size() == 1 && fac.factors[0].second == 1)
        return is_square(discriminant(f)) ? 3 : 6;
    for (const auto& [g, m] : fac.factors)
        if (g.degree() == 2)
            return 2;
    return 1;
}

} // namespace

TEST_CASE("arithmetic in Q(sqrt 2) and Q(cbrt 2)")
{
    NumberField q2(P("x^2-2"));
    NFElement r = q2.generator();
    NFElement a = q2.one() + r;
    CHECK((a * a).coords() == std::vector<Rational>{3, 2});
    CHECK(nf_arith(a, r - q2.one(), ArithOp::Mul) == q2.one());
    CHECK(nf_arith(q2.one(), a, ArithOp::Div) == r - q2.one());

    NumberField c2(P("x^3-2"));
    NFElement t = c2.generator();
    CHECK(t * t.pow(2) == c2.from_rational(2));
    CHECK(to_string(t.pow(4)) == "[0, 2, 0]");

    CHECK(kind_of([&] { (void)nf_arith(a, q2.zero(), ArithOp::Div); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { (void)(a + t); }) == ErrorKind::FieldMismatch);
    CHECK(kind_of([] { NumberField bad(P("x^2-1")); }) == ErrorKind::NotIrreducible);
    CHECK(kind_of([] { NumberField bad(P("3")); }) == ErrorKind::DegreeZero);
    CHECK(kind_of([&] { (void)q2.from_coords({1, 2, 3}); }) == ErrorKind::DegreeOutOfRange);
}

TEST_CASE("field axioms and reduction against polynomial remainder")
{
    std::mt19937_64 rng(7);
    for (const char* m : {"x^2-2", "x^3-2", "x^4+1", "x^5-x-1", "1/3*x^3-x+1/2", "x^6+x^5+x^4+x^3+x^2+x+1"}) {
        NumberField k(P(m));
        for (int i = 0; i < 30; ++i) {
            NFElement a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
            CHECK((a * b).as_poly() == divrem(a.as_poly() * b.as_poly(), k.min_poly()).second);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a - a == k.zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == k.one());
                CHECK((b / a) * a == b);
                CHECK(norm(a) * norm(b) == norm(a * b));
            }
        }
    }
}

TEST_CASE("minimal polynomials and element degrees")
{
    NumberField q2(P("x^2-2"));
    CHECK(minimal_polynomial(q2.from_rational(2)) == P("x-2"));
    CHECK(minimal_polynomial(q2.one() + q2.generator()) == P("x^2-2*x-1"));
    NumberField q4(P("x^4-2"));
    CHECK(minimal_polynomial(q4.generator().pow(2)) == P("x^2-2"));
    CHECK(element_degree(q4.from_rational(Rational(5, 7))) == 1);
    NumberField q5(P("x^5-3"));
    CHECK(element_degree(q5.generator()) == 5);
    NumberField q12(P("x^12-2"));
    CHECK(element_degree(q12.generator().pow(6)) == 2);
    CHECK(element_degree(q12.generator().pow(4)) == 3);
    CHECK(element_degree(q12.generator().pow(3)) == 4);
    CHECK(element_degree(q12.generator().pow(2)) == 6);

    // the characteristic polynomial is a power of the minimal polynomial
    std::mt19937_64 rng(11);
    for (const char* m : {"x^3-2", "x^4-10*x^2+1", "x^4+1", "x^6-2", "x^5-4*x+2"}) {
        NumberField k(P(m));
        for (int i = 0; i < 12; ++i) {
            NFElement a = random_element(k, rng, 2);
            if (i % 3 == 0)
                a = a.pow(2);
            PolyQ mp = minimal_polynomial(a);
            int e = element_degree(a);
            CHECK(k.degree() % e == 0);
            CHECK(is_irreducible(mp));
            CHECK(PolyK::embed(k, mp).eval(a).is_zero());
            CHECK(char_poly_oracle(a) == power(mp, k.degree() / e));
        }
    }
}

TEST_CASE("norms agree with resultants")
{
    std::mt19937_64 rng(3);
    for (const char* m : {"x^3-2", "3*x^4-2*x+6", "x^5+20*x+16"}) {
        NumberField k(P(m));
        for (int i = 0; i < 10; ++i) {
            NFElement a = random_element(k, rng);
            CHECK(norm(a) == resultant(k.min_poly(), a.as_poly()));
        }
    }
}

TEST_CASE("factorization over number fields")
{
    NumberField q2(P("x^2-2"));
    auto f = factor_over_nf(P("x^2-2"), q2);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first.degree() == 1);
    CHECK(f.factors[1].first.degree() == 1);
    CHECK(factor_over_nf(P("x^2-3"), q2).factors.size() == 1);
    auto g = factor_over_nf(P("x^4+1"), q2);
    CHECK(g.factors.size() == 2);

    NumberField c2(P("x^3-2"));
    auto h = factor_over_nf(P("x^3-2"), c2);
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0].first.degree() == 1);
    CHECK(h.factors[1].first.degree() == 2);
    CHECK(h.factors[0].first.c[0] == -c2.generator());

    NumberField gi(P("x^2+1"));
    CHECK(factor_over_nf(P("x^4+1"), gi).factors.size() == 2);
    CHECK(factor_over_nf(P("x^4+1"), NumberField(P("x^2-3"))).factors.size() == 1);
    CHECK(factor_over_nf(P("x^4+1"), NumberField(P("x^4+1"))).factors.size() == 4);

    // repeated and rational factors keep multiplicities
    auto r = factor_over_nf(P("x^5+x^4-4*x^3-4*x^2+4*x+4"), q2);
    REQUIRE(r.factors.size() == 3);
    int total = 0;
    for (const auto& [fac, mult] : r.factors) {
        CHECK(fac.degree() == 1);
        CHECK(mult == (fac.c[0].is_rational() ? 1 : 2));
        total += mult;
    }
    CHECK(total == 5);
    CHECK(kind_of([&] { (void)factor_over_nf(PolyQ(), q2); }) == ErrorKind::ZeroInput);
}

TEST_CASE("factorization reconstructs the input")
{
    std::mt19937_64 rng(5);
    std::vector<NumberField> fields{NumberField(P("x^2+1")), NumberField(P("x^3-2")), NumberField(P("x^4-10*x^2+1")),
                                    NumberField(P("x^3-3*x-1"))};
    for (int trial = 0; trial < 40; ++trial) {
        const NumberField& k = fields[static_cast<std::size_t>(trial) % fields.size()];
        std::vector<long> c(1 + rng() % 6 + 1);
        for (auto& x : c)
            x = static_cast<long>(rng() % 9) - 4;
        c.back() = 1 + static_cast<long>(rng() % 2);
        std::vector<Rational> q(c.begin(), c.end());
        PolyQ f(q);
        if (f.degree() < 1)
            continue;
        f = f * P("x^2-2") * f;
        auto fac = factor_over_nf(f, k);
        PolyK prod(k, {fac.unit});
        for (const auto& [g, m] : fac.factors) {
            CHECK(g.lead() == k.one());
            for (int i = 0; i < m; ++i)
                prod = prod * g;
            if (g.degree() > 1) {
                // an irreducible factor has no root in K
                CHECK(roots_in_field(g).empty());
            }
        }
        CHECK(prod == PolyK::embed(k, f));
    }
}

TEST_CASE("adjoining roots")
{
    NumberField q;
    AdjoinResult a = adjoin_root(q, PolyK::embed(q, P("x^2-2")));
    CHECK(a.field.degree() == 2);
    CHECK(a.root_image * a.root_image == a.field.from_rational(2));

    NumberField q2(P("x^2-2"));
    AdjoinResult b = adjoin_root(q2, PolyK::embed(q2, P("x^2-3")));
    CHECK(b.field.degree() == 4);
    CHECK(b.theta_image * b.theta_image == b.field.from_rational(2));
    CHECK(b.root_image * b.root_image == b.field.from_rational(3));
    CHECK(minimal_polynomial(b.theta_image + b.root_image) == P("x^4-10*x^2+1"));
    CHECK(b.embed(q2.one() + q2.generator()) == b.field.one() + b.theta_image);

    NumberField c2(P("x^3-2"));
    auto h = factor_over_nf(P("x^3-2"), c2);
    AdjoinResult c = adjoin_root(c2, h.factors[1].first);
    CHECK(c.field.degree() == 6);
    PolyK lifted = c.embed(h.factors[1].first);
    CHECK(lifted.eval(c.root_image).is_zero());
    CHECK(c.root_image.pow(3) == c.field.from_rational(2));
    CHECK(c.root_image != c.theta_image);

    CHECK(kind_of([&] { (void)adjoin_root(q2, PolyK::embed(q2, P("x^2-2"))); }) == ErrorKind::NotIrreducible);
    CHECK(kind_of([&] { (void)adjoin_root(q2, PolyK::embed(q2, P("x-2"))); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { (void)adjoin_root(c2, PolyK::embed(q2, P("x^2-3"))); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("splitting degrees")
{
    CHECK(splitting_degree(P("x^2-2")).total_degree == 2);
    auto t = splitting_degree(P("x^3-2"));
    CHECK(t.total_degree == 6);
    CHECK(t.steps == std::vector<int>{3, 2});
    auto u = splitting_degree(P("x^5-2*x^3-3*x^2+6"));  // (x^2-2)(x^3-3)
    CHECK(u.total_degree == 12);
    CHECK(splitting_degree(P("x^4-2")).total_degree == 8);
    CHECK(splitting_degree(P("x^4+1")).total_degree == 4);
    CHECK(splitting_degree(P("x^3-3*x-1")).total_degree == 3);
    CHECK(splitting_degree(P("x^5-2")).total_degree == 20);
    CHECK(splitting_degree(P("x^5-5*x+12")).total_degree == 10);
    CHECK(splitting_degree(P("x^5+x^4-4*x^3-3*x^2+3*x+1")).total_degree == 5);
    CHECK(splitting_degree(P("x^5-4*x+2")).total_degree == 120);
    CHECK(splitting_degree(P("x^5+20*x+16")).total_degree == 60);
    CHECK(splitting_degree(P("x^2-1")).total_degree == 1);
    CHECK(splitting_degree(P("7")).total_degree == 1);

    try {
        (void)splitting_degree(P("x^5-4*x+2"), 50);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeCapExceeded);
        CHECK(e.detail() == 60);
    }
    CHECK(kind_of([] { (void)splitting_degree(PolyQ()); }) == ErrorKind::ZeroInput);
}

TEST_CASE("splitting degrees of all monic cubics with small coefficients")
{
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                PolyQ f = PolyQ::from_ints({c, b, a, 1});
                auto s = splitting_degree(f);
                long prod = 1;
                for (int d : s.steps)
                    prod *= d;
                CHECK(prod == s.total_degree);
                CHECK(6 % s.total_degree == 0);
                CHECK(s.total_degree == cubic_splitting_oracle(f));
            }
}

TEST_CASE("splitting degree divides n! and is a multiple of n for irreducibles")
{
    std::mt19937_64 rng(17);
    const long fact[] = {1, 1, 2, 6, 24, 120};
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + trial % 2;
        std::vector<long> c(static_cast<std::size_t>(n) + 1);
        for (auto& x : c)
            x = static_cast<long>(rng() % 7) - 3;
        c.back() = 1;
        std::vector<Rational> q(c.begin(), c.end());
        PolyQ f(q);
        auto s = splitting_degree(f);
        CHECK(fact[n] % s.total_degree == 0);
        if (is_irreducible(f))
            CHECK(s.total_degree % n == 0);
    }
}

TEST_CASE("splitting fields carry every root")
{
    for (const char* s : {"x^3-2", "x^4-2", "x^5-2*x^3-3*x^2+6", "x^4+x+1"}) {
        PolyQ f = P(s);
        SplittingField sf = splitting_field(f);
        CHECK(sf.field.degree() == splitting_degree(f).total_degree);
        CHECK(static_cast<int>(sf.roots.size()) == f.degree());
        PolyK fk = PolyK::embed(sf.field, f);
        std::set<std::string> distinct;
        for (const auto& r : sf.roots) {
            CHECK(fk.eval(r).is_zero());
            distinct.insert(to_string(r));
        }
        CHECK(static_cast<int>(distinct.size()) == f.degree());
    }
}

TEST_CASE("membership")
{
    NumberField q4(P("x^4-2"));
    Membership m = is_member(P("x^2-2"), q4);
    CHECK(m.member);
    REQUIRE(m.witness.has_value());
    CHECK(*m.witness * *m.witness == q4.from_rational(2));
    CHECK_FALSE(is_member(P("x^2-2"), NumberField(P("x^3-2"))).member);
    CHECK_FALSE(is_member(P("x^2-3"), NumberField(P("x^2-2"))).member);
    CHECK(is_member(P("x-5/3"), NumberField(P("x^3-2"))).member);

    for (int n = 2; n <= 8; ++n) {
        NumberField k(PolyQ::monomial(1, n) - PolyQ::constant(2));
        Membership r = is_member(P("x^2-2"), k);
        CHECK(r.member == (n % 2 == 0));
        if (r.member)
            CHECK(r.witness->pow(2) == k.from_rational(2));
    }

    SplittingField sf = splitting_field(P("x^3-2"));
    CHECK_FALSE(is_member(P("x^2-2"), sf.field).member);
    CHECK(is_member(P("x^2+3"), sf.field).member);
}

TEST_CASE("automorphism groups")
{
    auto q2 = automorphism_group(NumberField(P("x^2-2")));
    CHECK(q2.images.size() == 2);
    CHECK(q2.is_normal);
    CHECK(q2.is_abelian);

    auto c2 = automorphism_group(NumberField(P("x^3-2")));
    CHECK(c2.images.size() == 1);
    CHECK_FALSE(c2.is_normal);

    auto q4 = automorphism_group(NumberField(P("x^4-2")));
    CHECK(q4.images.size() == 2);
    CHECK_FALSE(q4.is_normal);

    auto s3 = automorphism_group(splitting_field(P("x^3-2")).field);
    CHECK(s3.images.size() == 6);
    CHECK(s3.is_normal);
    CHECK_FALSE(s3.is_abelian);

    CHECK(automorphism_group(NumberField(P("x^3-3*x-1"))).is_abelian);
    CHECK(automorphism_group(NumberField(P("x^4-10*x^2+1"))).is_abelian);
}

TEST_CASE("cyclotomic fields are abelian with phi(n) automorphisms")
{
    for (int n = 3; n <= 30; ++n) {
        PolyQ phi = cyclotomic(n);
        if (phi.degree() > 12)
            continue;
        NumberField k(phi);
        auto g = automorphism_group(k);
        CHECK(static_cast<long>(g.images.size()) == euler_phi(n));
        CHECK(g.is_normal);
        CHECK(g.is_abelian);
        CHECK(g.images[0] == k.generator());
        // closed under composition, every image a root of the cyclotomic polynomial
        PolyK mk = PolyK::embed(k, phi);
        std::set<std::string> all;
        for (const auto& s : g.images) {
            CHECK(mk.eval(s).is_zero());
            all.insert(to_string(s));
        }
        for (const auto& s : g.images)
            for (const auto& t : g.images)
                CHECK(all.count(to_string(apply_automorphism(s, t))) == 1);
    }
}
