#include "galwit/detail/intpoly.hpp"

#include "galwit/error.hpp"

namespace galwit::detail {

void trim(IntPoly& f)
{
    while (!f.empty() && sgn(f.back()) == 0)
        f.pop_back();
}

Integer content(const IntPoly& f)
{
    Integer g = 0;
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f)
{
    Integer g = content(f);
    if (sgn(g) == 0 || g == 1)
        return f;
    IntPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), f[i].get_mpz_t(), g.get_mpz_t());
    return out;
}

IntPoly to_primitive(const PolyQ& f, Rational& scale)
{
    if (f.is_zero()) {
        scale = 0;
        return {};
    }
    Integer l = 1;
    for (const auto& c : f.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly p(f.coeffs().size());
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = f.coeffs()[i].get_num() * (l / f.coeffs()[i].get_den());
    Integer g = content(p);
    if (sgn(p.back()) < 0)
        g = -g;
    for (auto& c : p)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    scale = Rational(g, l);
    scale.canonicalize();
    return p;
}

PolyQ to_polyq(const IntPoly& f)
{
    std::vector<Rational> c(f.begin(), f.end());
    return PolyQ(std::move(c));
}

IntPoly mul(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b)
{
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

IntPoly derivative(const IntPoly& f)
{
    if (f.size() <= 1)
        return {};
    IntPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        d[i - 1] = f[i] * static_cast<unsigned long>(i);
    trim(d);
    return d;
}

IntPoly prem(const IntPoly& a, const IntPoly& b)
{
    if (b.empty())
        fail(ErrorKind::DivisionByZero, "pseudo-remainder by zero polynomial");
    IntPoly r = a;
    int db = deg(b);
    int e = deg(a) - db + 1;
    if (e <= 0)
        return r;
    const Integer& l = b.back();
    while (deg(r) >= db) {
        Integer c = r.back();
        int shift = deg(r) - db;
        for (auto& x : r)
            x *= l;
        for (int i = 0; i <= db; ++i)
            mpz_submul(r[i + shift].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
        r.pop_back();
        trim(r);
        --e;
    }
    if (e > 0) {
        Integer m;
        mpz_pow_ui(m.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& x : r)
            x *= m;
    }
    return r;
}

bool exact_divide(const IntPoly& a, const IntPoly& b, IntPoly& quotient)
{
    if (b.empty())
        fail(ErrorKind::DivisionByZero, "division by zero polynomial");
    quotient.clear();
    if (a.empty())
        return true;
    if (deg(a) < deg(b))
        return false;
    IntPoly r = a;
    int db = deg(b);
    IntPoly q(static_cast<std::size_t>(deg(a) - db + 1));
    const Integer& l = b.back();
    while (!r.empty() && deg(r) >= db) {
        if (!mpz_divisible_p(r.back().get_mpz_t(), l.get_mpz_t()))
            return false;
        Integer c;
        mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), l.get_mpz_t());
        int shift = deg(r) - db;
        for (int i = 0; i <= db; ++i)
            mpz_submul(r[i + shift].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
        q[shift] = c;
        trim(r);
    }
    if (!r.empty())
        return false;
    trim(q);
    quotient = std::move(q);
    return true;
}

Integer eval(const IntPoly& f, const Integer& at)
{
    Integer r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        r *= at;
        r += *it;
    }
    return r;
}

namespace {

Integer ipow(const Integer& b, long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

} // namespace

Integer resultant(IntPoly a, IntPoly b)
{
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;
    if (deg(a) == 0)
        return ipow(a[0], deg(b));
    if (deg(b) == 0)
        return ipow(b[0], deg(a));

    Integer ca = content(a), cb = content(b);
    a = primitive_part(a);
    b = primitive_part(b);
    Integer t = ipow(ca, deg(b)) * ipow(cb, deg(a));
    int s = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if ((deg(a) & 1) && (deg(b) & 1))
            s = -1;
    }
    Integer g = 1, h = 1;
    while (true) {
        int delta = deg(a) - deg(b);
        if ((deg(a) & 1) && (deg(b) & 1))
            s = -s;
        IntPoly r = prem(a, b);
        a = std::move(b);
        if (r.empty())
            return 0;
        Integer divisor = g * ipow(h, delta);
        for (auto& c : r)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Integer num = ipow(g, delta);
            Integer den = ipow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (deg(b) == 0) {
            int da = deg(a);
            Integer num = ipow(b[0], da);
            Integer out;
            if (da >= 1) {
                Integer den = ipow(h, da - 1);
                mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            } else {
                out = num;
            }
            return s * t * out;
        }
    }
}

} // namespace galwit::detail
